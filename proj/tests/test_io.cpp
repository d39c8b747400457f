#include "doctest.h"

#include <algorithm>

#include "eep/atlas.hpp"
#include "eep/io.hpp"

using namespace eep;

namespace {
// Graph6 fixes its own edge order, so compare edge multisets.
std::vector<std::pair<Vertex, Vertex>> pairs_of(const Multigraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("edge lists") {
    const auto k2 = parse_graph("2 1\n0 1", GraphFormat::kEdgeList);
    CHECK(k2.graph == Multigraph::from_edge_list(2, {{0, 1}}));
    CHECK_FALSE(k2.labels);
    const auto loop = parse_graph("1 1\n0 0\n", GraphFormat::kEdgeList);
    CHECK(loop.graph.loop_count() == 1);
    const auto p3 = parse_graph("# comment\n3 2\n\n0 1 a\n1 2 b\n", GraphFormat::kLabeledEdgeList);
    REQUIRE(p3.labels);
    CHECK(p3.labels->at(EdgeId{1}) == "b");
    CHECK(format_edge_list(p3.graph, &*p3.labels) == "3 2\n0 1 a\n1 2 b\n");
  }

  TEST_CASE("errors carry line numbers") {
    auto line_of = [](const char* text, GraphFormat f) {
      try {
        parse_graph(text, f);
      } catch (const InputError& e) {
        return e.line();
      }
      return std::size_t{999};
    };
    CHECK(line_of("2 1\n0 x", GraphFormat::kEdgeList) == 2);
    CHECK(line_of("2 1\n0 2", GraphFormat::kEdgeList) == 2);
    CHECK(line_of("2\n0 1", GraphFormat::kEdgeList) == 1);
    CHECK(line_of("2 2\n0 1", GraphFormat::kEdgeList) == 2);
    CHECK(line_of("2 1\n0 1\n1 0", GraphFormat::kEdgeList) == 3);
    CHECK(line_of("2 1\n0 1", GraphFormat::kLabeledEdgeList) == 2);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::kEdgeList), InputError);
    CHECK_THROWS_AS(parse_graph_format("dot"), InputError);
    CHECK_THROWS_AS(parse_graph_file("/nonexistent/file", GraphFormat::kEdgeList), InputError);
  }

  TEST_CASE("graph6") {
    const auto k4 = decode_graph6("C~");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(encode_graph6(Multigraph(0)) == "?");
    CHECK(encode_graph6(Multigraph::from_edge_list(2, {{0, 1}})) == "A_");
    CHECK(decode_graph6(">>graph6<<A_").edge_count() == 1);
    for (const auto& g : enumerate_graphs(6, 15)) CHECK(pairs_of(decode_graph6(encode_graph6(g))) == pairs_of(g));
    const auto big = Multigraph::from_edge_list(70, {{0, 69}, {3, 4}});
    CHECK(pairs_of(decode_graph6(encode_graph6(big))) == pairs_of(big));
    CHECK_THROWS_AS(encode_graph6(Multigraph::from_edge_list(1, {{0, 0}})), GraphError);
    CHECK_THROWS_AS(encode_graph6(Multigraph::from_edge_list(2, {{0, 1}, {0, 1}})), GraphError);
    CHECK_THROWS_AS(decode_graph6(":Fa@x^"), InputError);
    CHECK_THROWS_AS(decode_graph6("C~~"), InputError);
    CHECK_THROWS_AS(decode_graph6("A`"), InputError);
    CHECK(parse_graph("C~\n", GraphFormat::kGraph6).graph == k4);
  }
}
