#include "doctest.h"

#include <vector>

#include "eep/multigraph.hpp"

using namespace eep;

namespace {
std::vector<EdgeId> ids(std::initializer_list<std::uint32_t> values) {
  std::vector<EdgeId> out;
  for (auto v : values) out.push_back(EdgeId{v});
  return out;
}
}  // namespace

TEST_SUITE("multigraph") {
  TEST_CASE("construction keeps ids and orientation") {
    const auto g = Multigraph::from_edge_list(3, {{2, 0}, {1, 1}, {0, 1}});
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edge(EdgeId{0}).u == 0);
    CHECK(g.edge(EdgeId{0}).v == 2);
    CHECK(g.edge(EdgeId{1}).is_loop());
    CHECK(g.loop_count() == 1);
    CHECK(g.degrees() == std::vector<std::size_t>{2, 3, 1});
    CHECK_THROWS_AS(g.edge(EdgeId{7}), GraphError);
    CHECK_THROWS_AS(Multigraph::from_edge_list(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Multigraph::from_edges(2, {Edge{EdgeId{1}, 0, 1}, Edge{EdgeId{1}, 0, 1}}), GraphError);
  }

  TEST_CASE("deletion removes one parallel copy") {
    const auto g = Multigraph::from_edge_list(2, {{0, 1}, {0, 1}});
    const auto h = delete_edge(g, EdgeId{0});
    CHECK(h.vertex_count() == 2);
    REQUIRE(h.edge_count() == 1);
    CHECK(h.edges()[0].id == EdgeId{1});
    CHECK_THROWS_AS(delete_edge(g, EdgeId{5}), GraphError);
  }

  TEST_CASE("contraction turns parallels into loops") {
    const auto g = Multigraph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 2}});
    const auto h = contract_edge(g, EdgeId{0});
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 2);
    CHECK(h.edge(EdgeId{1}).is_loop());
    CHECK_FALSE(h.edge(EdgeId{2}).is_loop());
  }

  TEST_CASE("contracting a loop deletes it") {
    const auto g = Multigraph::from_edge_list(2, {{0, 0}, {0, 1}});
    CHECK(contract_edge(g, EdgeId{0}) == delete_edge(g, EdgeId{0}));
  }

  TEST_CASE("extraction removes endpoints and incident edges") {
    const auto p4 = Multigraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto h = extract_edge(p4, EdgeId{1});
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 0);
    const auto k = extract_edge(p4, EdgeId{0});
    CHECK(k.vertex_count() == 2);
    REQUIRE(k.edge_count() == 1);
    CHECK(k.edges()[0].id == EdgeId{2});
    const auto loop_edge = Multigraph::from_edge_list(2, {{0, 0}, {0, 1}});
    const auto l = extract_edge(loop_edge, EdgeId{0});
    CHECK(l.vertex_count() == 1);
    CHECK(l.edge_count() == 0);
  }

  TEST_CASE("component counts") {
    const auto g = Multigraph::from_edge_list(5, {{0, 1}, {1, 2}, {3, 3}});
    CHECK(count_components(g, ids({})) == 5);
    CHECK(count_components(g, ids({0, 1, 2})) == 3);
    CHECK(covered_components(g, ids({})) == 0);
    CHECK(covered_components(g, ids({0, 2})) == 2);
    CHECK(covered_components(g, ids({0, 1})) == 1);
    CHECK(vertex_support(g, ids({0, 2})) == std::vector<Vertex>{0, 1, 3});
    CHECK(component_count(g) == 3);
    CHECK(connected_components(g).size() == 3);
    CHECK_FALSE(is_connected(g));
  }

  TEST_CASE("disjoint union shifts vertices and ids") {
    const auto a = Multigraph::from_edge_list(2, {{0, 1}});
    const auto b = Multigraph::from_edge_list(1, {{0, 0}});
    const auto u = disjoint_union(a, b);
    CHECK(u.vertex_count() == 3);
    CHECK(u.edge(EdgeId{1}).u == 2);
    CHECK(u.edge(EdgeId{1}).is_loop());
    CHECK(component_count(u) == 2);
  }

  TEST_CASE("bridges, matchings, simplicity") {
    const auto g = Multigraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 3}});
    CHECK_FALSE(is_bridge(g, EdgeId{0}));
    CHECK(is_bridge(g, EdgeId{3}));
    CHECK_FALSE(is_bridge(g, EdgeId{4}));
    CHECK(matching_number(g) == 2);
    CHECK_FALSE(is_simple(g));
    CHECK(is_simple(Multigraph::from_edge_list(3, {{0, 1}, {1, 2}})));
  }

  TEST_CASE("edge masks agree with id subsets") {
    const auto g = Multigraph::from_edge_list(4, {{0, 1}, {2, 3}, {1, 2}});
    const auto mask = detail::mask_of(g, ids({0, 1}));
    CHECK(mask == 0b011);
    CHECK(detail::count_components(g, mask) == 2);
    CHECK(detail::covered_components(g, mask) == 2);
    CHECK(detail::support_mask(g, mask) == 0b1111);
  }
}
