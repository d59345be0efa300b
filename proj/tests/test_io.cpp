#include "doctest.h"

#include "support/corpus.hpp"
#include "zykov/io.hpp"
#include "zykov/primes.hpp"

using namespace zykov;

TEST_CASE("graph6 vectors") {
  // bit-level: n = 3 -> '?' + 3 = 'B'; bits x(0,1) x(0,2) x(1,2) = 111, padded 111000 = 56, 56 + 63 = 'w'
  CHECK(encode_graph6(complete(3)) == "Bw");
  CHECK(encode_graph6(edgeless(1)) == "@");
  CHECK(encode_graph6(Graph{}) == "?");
  CHECK(encode_graph6(edgeless(2)) == "A?");
  CHECK(encode_graph6(complete(2)) == "A_");
  CHECK(encode_graph6(cycle(4)) == "Cl");
  CHECK(encode_graph6(cycle(5)) == "Dhc");
  CHECK(encode_graph6(path(3)) == "Bg");
  CHECK(decode_graph6("Bw") == complete(3));
  CHECK(decode_graph6("Dhc\n") == cycle(5));
  CHECK(decode_graph6("Cl\r\n") == cycle(4));
  CHECK(decode_graph6("?") == Graph{});
}

TEST_CASE("graph6 round trip") {
  for (const Graph& g : all_graphs_up_to(5)) CHECK(decode_graph6(encode_graph6(g)) == g);
  SplitMix64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const Graph g = erdos_renyi(1 + rng.below(62), corpus::probabilities()[rng.below(3)], rng.next());
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
  CHECK_THROWS_AS(encode_graph6(edgeless(63)), InputError);
  CHECK(encode_graph6(edgeless(62)).size() == 1 + (62 * 61 / 2 + 5) / 6);
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(decode_graph6(""), FormatError);
  CHECK_THROWS_AS(decode_graph6("B"), FormatError);      // body missing
  CHECK_THROWS_AS(decode_graph6("Bww"), FormatError);    // trailing byte
  CHECK_THROWS_AS(decode_graph6("B "), FormatError);     // byte below 63
  CHECK_THROWS_AS(decode_graph6("B\x7f"), FormatError);  // byte above 126
  CHECK_THROWS_AS(decode_graph6("~?@?"), FormatError);   // long form
  CHECK_THROWS_AS(decode_graph6("Bx"), FormatError);     // nonzero padding
}

TEST_CASE("DOT export") {
  CHECK(export_dot(edgeless(2)) == "graph G {\n  0;\n  1;\n}\n");
  CHECK(export_dot(complete(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
  CHECK(export_dot(cycle(5)) == export_dot(cycle(5)));
  CHECK(export_dot(Graph{}) == "graph G {\n}\n");
}

TEST_CASE("edge lists") {
  CHECK(parse_edge_list("0 1\n1 2") == path(3));
  const Graph g = parse_edge_list("n=4\n0 1");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  const Graph loop = parse_edge_list("0 0");
  CHECK(loop.vertex_count() == 1);
  CHECK(loop.edge_count() == 0);
  CHECK(parse_edge_list("# comment\n\n5 7\n7 9\n") == path(3));
  CHECK(parse_edge_list("") == Graph{});
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("0 1 2"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("-1 2"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("n=x"), FormatError);
}
