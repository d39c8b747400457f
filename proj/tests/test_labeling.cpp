#include "doctest.h"

#include "eep/labeling.hpp"

using namespace eep;

TEST_SUITE("labeling") {
  TEST_CASE("factories") {
    const auto g = Multigraph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto c = EdgeLabeling::cycling(g, {"a", "b"});
    CHECK(c.at(EdgeId{0}) == "a");
    CHECK(c.at(EdgeId{1}) == "b");
    CHECK(c.at(EdgeId{2}) == "a");
    CHECK(c.alphabet(g) == std::set<std::string>{"a", "b"});
    CHECK(EdgeLabeling::uniform(g, "t").alphabet(g).size() == 1);
    CHECK(EdgeLabeling::distinct(g).alphabet(g).size() == 3);
  }

  TEST_CASE("totality is enforced") {
    const auto g = Multigraph::from_edge_list(2, {{0, 1}, {0, 1}});
    EdgeLabeling l;
    l.set(EdgeId{0}, "a");
    CHECK_THROWS_AS(l.require_total(g), GraphError);
    CHECK_THROWS_AS(l.at(EdgeId{1}), GraphError);
    l.set(EdgeId{1}, "b");
    CHECK_NOTHROW(l.require_total(g));
  }

  TEST_CASE("union labeling follows the id shift") {
    const auto a = Multigraph::from_edge_list(2, {{0, 1}});
    const auto b = Multigraph::from_edge_list(2, {{0, 1}, {1, 1}});
    const auto u = disjoint_union(a, b);
    const auto l = disjoint_union_labeling(a, EdgeLabeling::uniform(a, "p"), EdgeLabeling::cycling(b, {"q", "r"}));
    CHECK_NOTHROW(l.require_total(u));
    CHECK(l.at(EdgeId{0}) == "p");
    CHECK(l.at(EdgeId{1}) == "q");
    CHECK(l.at(EdgeId{2}) == "r");
  }
}
