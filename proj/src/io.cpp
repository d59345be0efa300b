#include "zykov/io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "zykov/errors.hpp"

namespace zykov {

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kGraph6MaxVertices)
    throw InputError("graph6 short form holds at most 62 vertices, got " + std::to_string(n));
  std::string out(1, static_cast<char>(63 + n));
  int filled = 0;
  unsigned byte = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      byte = (byte << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + byte));
        filled = 0;
        byte = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (byte << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (std::size_t k = 0; k < text.size(); ++k) {
    const auto ch = static_cast<unsigned char>(text[k]);
    if (ch < 63 || ch > 126)
      throw FormatError("graph6: byte " + std::to_string(ch) + " at offset " + std::to_string(k) +
                        " is outside 63..126");
  }
  const std::size_t n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kGraph6MaxVertices) throw FormatError("graph6: long size prefixes are not supported");
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - 1 < body) throw FormatError("graph6: input ends early");
  if (text.size() - 1 > body) throw FormatError("graph6: trailing bytes after the adjacency data");

  GraphBuilder b(n);
  std::size_t pos = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++pos) {
      const unsigned byte = static_cast<unsigned char>(text[1 + pos / 6]) - 63;
      if (byte >> (5 - pos % 6) & 1U) b.add_edge(i, j);
    }
  if (bits % 6) {
    const unsigned last = static_cast<unsigned char>(text.back()) - 63;
    if (last & ((1U << (6 - bits % 6)) - 1)) throw FormatError("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::string export_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool parse_number(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::uint64_t> vertices;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return FormatError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    if (line.starts_with("n=")) {
      std::uint64_t count = 0;
      if (!parse_number(trim(line.substr(2)), count)) throw fail("bad vertex count");
      for (std::uint64_t v = 0; v < count; ++v) vertices.push_back(v);
      continue;
    }
    auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) throw fail("expected two vertex labels");
    std::uint64_t u = 0, v = 0;
    if (!parse_number(trim(line.substr(0, sep)), u) || !parse_number(trim(line.substr(sep + 1)), v))
      throw fail("expected two nonnegative integers");
    edges.emplace_back(u, v);
    vertices.push_back(u);
    vertices.push_back(v);
  }
  return normalize<std::uint64_t>(vertices, edges);
}

}  // namespace zykov
