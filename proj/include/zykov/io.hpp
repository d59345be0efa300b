#pragma once

#include <string>
#include <string_view>

#include "zykov/graph.hpp"

namespace zykov {

inline constexpr std::size_t kGraph6MaxVertices = 62;

/// graph6, short form only: one size byte 63+n followed by the upper triangle read column by
/// column (j = 1..n-1, i = 0..j-1), six bits per byte, most significant first, zero padded,
/// each byte offset by 63. Throws InputError for graphs above 62 vertices.
std::string encode_graph6(const Graph& g);
/// Inverse of encode_graph6. Throws FormatError on bytes outside 63..126, a size prefix that
/// needs the long form, a short body, or trailing bytes. Trailing "\n" / "\r\n" is accepted.
Graph decode_graph6(std::string_view text);

/// Undirected DOT: "graph G {" then every vertex, then one "u -- v;" line per edge with u < v.
std::string export_dot(const Graph& g);

/// Edge list: one "u v" pair of nonnegative integers per line; blank lines and lines starting
/// with '#' are skipped; an optional "n=<count>" line declares vertices 0..count-1 so isolated
/// ones survive. Labels are renumbered in order of first appearance (the declared 0..count-1 first).
/// Throws FormatError naming the line of a malformed entry.
Graph parse_edge_list(std::string_view text);

}  // namespace zykov
