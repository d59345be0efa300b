#include "zykov/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

namespace zykov {

namespace {

constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

void put_u32(std::string& out, std::size_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xFF));
}

// Ordered partition of the vertex set in the usual lab/cell-start layout: the cell starting
// at position s covers lab[s .. cell_end[s]). A cell keeps its start when it is split.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<std::size_t> cell_end;  // valid at cell starts
  std::vector<std::size_t> cell_of;   // vertex -> start of its cell
  std::size_t cells = 0;

  // Cells are the colour classes, in increasing colour order.
  explicit Partition(const std::vector<std::size_t>& colour)
      : lab(colour.size()), cell_end(colour.size(), 0), cell_of(colour.size(), 0) {
    const std::size_t n = colour.size();
    std::iota(lab.begin(), lab.end(), Vertex{0});
    std::stable_sort(lab.begin(), lab.end(), [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && colour[lab[j]] == colour[lab[i]]) cell_of[lab[j++]] = i;
      cell_end[i] = j;
      ++cells;
      i = j;
    }
  }

  std::vector<std::size_t> starts() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lab.size(); i = cell_end[i]) out.push_back(i);
    return out;
  }

  bool discrete() const { return cells == lab.size(); }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), n_(g.vertex_count()), words_(g.words_per_row()) {}

  // Refines p to the coarsest equitable partition finer than it, starting from the given splitters.
  void refine(Partition& p, std::deque<std::size_t> queue) const {
    std::vector<bool> queued(n_, false);
    for (auto s : queue) queued[s] = true;
    std::vector<std::uint64_t> mask(words_);
    std::vector<std::pair<std::size_t, Vertex>> scratch;
    while (!queue.empty() && !p.discrete()) {
      const std::size_t s = queue.front();
      queue.pop_front();
      queued[s] = false;
      std::fill(mask.begin(), mask.end(), 0);
      for (std::size_t i = s; i < p.cell_end[s]; ++i) mask[p.lab[i] / 64] |= std::uint64_t{1} << (p.lab[i] % 64);

      for (std::size_t x = 0; x < n_;) {
        const std::size_t end = p.cell_end[x];
        if (end - x == 1) {
          x = end;
          continue;
        }
        scratch.clear();
        for (std::size_t i = x; i < end; ++i) {
          const Vertex v = p.lab[i];
          auto row = g_.row(v);
          std::size_t count = 0;
          for (std::size_t k = 0; k < words_; ++k) count += std::popcount(row[k] & mask[k]);
          scratch.emplace_back(count, v);
        }
        std::stable_sort(scratch.begin(), scratch.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (scratch.front().first == scratch.back().first) {
          x = end;
          continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> fragments;  // [start, end)
        std::size_t frag_start = x;
        for (std::size_t i = 0; i < scratch.size(); ++i) {
          p.lab[x + i] = scratch[i].second;
          if (i + 1 == scratch.size() || scratch[i + 1].first != scratch[i].first) {
            fragments.emplace_back(frag_start, x + i + 1);
            frag_start = x + i + 1;
          }
        }
        for (auto [fs, fe] : fragments) {
          p.cell_end[fs] = fe;
          for (std::size_t i = fs; i < fe; ++i) p.cell_of[p.lab[i]] = fs;
        }
        p.cells += fragments.size() - 1;
        if (queued[x]) {
          for (std::size_t f = 1; f < fragments.size(); ++f) {
            queue.push_back(fragments[f].first);
            queued[fragments[f].first] = true;
          }
        } else {
          std::size_t largest = 0;
          for (std::size_t f = 1; f < fragments.size(); ++f)
            if (fragments[f].second - fragments[f].first >
                fragments[largest].second - fragments[largest].first)
              largest = f;
          for (std::size_t f = 0; f < fragments.size(); ++f)
            if (f != largest) {
              queue.push_back(fragments[f].first);
              queued[fragments[f].first] = true;
            }
        }
        x = end;
      }
    }
  }

  // Splits v off the front of its cell and refines.
  Partition individualize(const Partition& p, Vertex v) const {
    Partition q = p;
    const std::size_t start = q.cell_of[v];
    const std::size_t end = q.cell_end[start];
    auto it = std::find(q.lab.begin() + start, q.lab.begin() + end, v);
    std::rotate(q.lab.begin() + start, it, it + 1);
    q.cell_end[start] = start + 1;
    q.cell_end[start + 1] = end;
    for (std::size_t i = start + 1; i < end; ++i) q.cell_of[q.lab[i]] = start + 1;
    q.cell_of[v] = start;
    ++q.cells;
    refine(q, std::deque<std::size_t>{start});
    return q;
  }

 private:
  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
};

using Certificate = std::vector<std::uint64_t>;

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::vector<std::size_t> colour)
      : g_(g), n_(g.vertex_count()), refiner_(g), colour_(std::move(colour)) {}

  Certificate run() {
    Partition root(colour_);
    auto starts = root.starts();
    refiner_.refine(root, std::deque<std::size_t>(starts.begin(), starts.end()));
    std::vector<Vertex> path;
    search(root, path);
    return best_cert_;
  }

 private:
  Certificate certificate(const Partition& p) const {
    const std::size_t bits = n_ * (n_ - 1) / 2;
    Certificate cert((bits + 63) / 64, 0);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j, ++pos)
        if (g_.adjacent(p.lab[i], p.lab[j])) cert[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
    return cert;
  }

  void add_generator(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(n_);
    for (std::size_t i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    generators_.push_back(std::move(gamma));
  }

  static std::size_t common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  // Orbit representatives of the group generated by the known automorphisms fixing `path` pointwise.
  std::vector<Vertex> stabilizer_orbits(const std::vector<Vertex>& path) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  std::size_t leaf(const Partition& p, const std::vector<Vertex>& path) {
    Certificate cert = certificate(p);
    if (!have_first_) {
      have_first_ = true;
      first_cert_ = best_cert_ = std::move(cert);
      first_lab_ = best_lab_ = p.lab;
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (cert == first_cert_) {
      add_generator(first_lab_, p.lab);
      return common_prefix(path, first_path_);
    }
    if (cert == best_cert_) {
      add_generator(best_lab_, p.lab);
      return common_prefix(path, best_path_);
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = p.lab;
      best_path_ = path;
    }
    return kNoJump;
  }

  std::size_t search(const Partition& p, std::vector<Vertex>& path) {
    if (p.discrete()) return leaf(p, path);

    std::size_t target = 0;
    while (p.cell_end[target] - target == 1) target = p.cell_end[target];
    std::vector<Vertex> children(p.lab.begin() + target, p.lab.begin() + p.cell_end[target]);
    std::sort(children.begin(), children.end());

    const std::size_t depth = path.size();
    std::vector<Vertex> explored;
    for (Vertex w : children) {
      if (!explored.empty()) {
        auto orbit = stabilizer_orbits(path);
        bool redundant = std::any_of(explored.begin(), explored.end(),
                                     [&](Vertex e) { return orbit[e] == orbit[w]; });
        if (redundant) continue;
      }
      Partition child = refiner_.individualize(p, w);
      path.push_back(w);
      std::size_t jump = search(child, path);
      path.pop_back();
      explored.push_back(w);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  std::size_t n_;
  Refiner refiner_;
  std::vector<std::size_t> colour_;
  bool have_first_ = false;
  Certificate first_cert_, best_cert_;
  std::vector<Vertex> first_lab_, best_lab_;
  std::vector<Vertex> first_path_, best_path_;
  std::vector<std::vector<Vertex>> generators_;
};

std::string encode_multiset(char tag, std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string out(1, tag);
  put_u32(out, parts.size());
  for (const auto& part : parts) {
    put_u32(out, part.size());
    out += part;
  }
  return out;
}

std::string encode(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};

  auto comps = component_vertex_sets(g);
  if (comps.size() > 1) {
    std::vector<std::string> parts;
    for (const auto& vs : comps) parts.push_back(encode(induced_subgraph(g, vs)));
    return encode_multiset('U', std::move(parts));
  }
  auto cocomps = cocomponent_vertex_sets(g);
  if (cocomps.size() > 1) {
    std::vector<std::string> parts;
    for (const auto& vs : cocomps) parts.push_back(encode(induced_subgraph(g, vs)));
    return encode_multiset('J', std::move(parts));
  }

  // Collapse twin classes until none are left. A class of false twins (equal open
  // neighbourhoods) or true twins (equal closed neighbourhoods) is a module, so it can be
  // replaced by one vertex labelled with the multiset of its members' labels.
  Graph q = g;
  std::vector<std::string> label(n);
  for (bool changed = true; changed;) {
    changed = false;
    for (const bool closed : {false, true}) {
      std::map<std::vector<std::uint64_t>, std::vector<Vertex>> classes;
      for (Vertex v = 0; v < q.vertex_count(); ++v) {
        auto row = q.row(v);
        std::vector<std::uint64_t> key(row.begin(), row.end());
        if (closed) key[v / 64] |= std::uint64_t{1} << (v % 64);
        classes[key].push_back(v);
      }
      if (classes.size() == q.vertex_count()) continue;
      changed = true;
      std::vector<std::vector<Vertex>> groups;
      for (auto& [key, members] : classes) groups.push_back(std::move(members));
      std::sort(groups.begin(), groups.end());
      std::vector<Vertex> reps;
      std::vector<std::string> merged;
      for (const auto& members : groups) {
        reps.push_back(members.front());
        if (members.size() == 1) {
          merged.push_back(std::move(label[members.front()]));
          continue;
        }
        std::vector<std::string> parts;
        for (Vertex v : members) parts.push_back(label[v]);
        merged.push_back(encode_multiset(closed ? 'T' : 'F', std::move(parts)));
      }
      q = induced_subgraph(q, reps);
      label = std::move(merged);
    }
  }

  std::vector<std::string> palette = label;
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  std::vector<std::size_t> colour(q.vertex_count());
  for (Vertex v = 0; v < q.vertex_count(); ++v)
    colour[v] = std::lower_bound(palette.begin(), palette.end(), label[v]) - palette.begin();

  // The refined partitions keep the colour classes in colour order, so the sorted label list
  // lines up with the certificate's vertex order.
  std::string out = encode_multiset('P', label);
  put_u32(out, n);
  if (q.vertex_count() > 1) {
    Certificate cert = CanonicalSearch(q, std::move(colour)).run();
    for (auto word : cert)
      for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<char>((word >> shift) & 0xFF));
  }
  return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

CanonicalKey canonical_form(const Graph& g) { return CanonicalKey{encode(g)}; }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

std::string to_hex(const CanonicalKey& key) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char ch : key.bytes) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

}  // namespace zykov
