#include "doctest.h"

#include <set>

#include "eep/atlas.hpp"
#include "eep/canonical.hpp"
#include "eep/io.hpp"

using namespace eep;

TEST_SUITE("atlas") {
  TEST_CASE("free tree counts") {
    const std::size_t known[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
    for (std::size_t n = 1; n <= 14; ++n) {
      const auto trees = enumerate_trees(n);
      CHECK_MESSAGE(trees.size() == known[n - 1], "n=" << n);
      std::set<std::string> keys;
      for (const auto& t : trees) {
        CHECK(t.edge_count() == n - 1);
        CHECK(is_connected(t));
        keys.insert(canonical_key(t));
      }
      CHECK(keys.size() == trees.size());
    }
    CHECK_THROWS(enumerate_trees(0));
    CHECK_THROWS(enumerate_trees(17));
  }

  TEST_CASE("simple graph counts") {
    CHECK(enumerate_graphs(2, 1).size() == 2);
    CHECK(enumerate_graphs(3, 3).size() == 4);
    CHECK(enumerate_graphs(4, 6).size() == 11);
    CHECK(enumerate_graphs(5, 10).size() == 34);
    CHECK(enumerate_graphs(4, 2).size() == 4);
    CHECK(enumerate_graphs(0, 0).size() == 1);
    CHECK_THROWS(enumerate_graphs(9, 1));
  }

  TEST_CASE("enumeration is deterministic") {
    const auto a = enumerate_graphs(5, 6);
    const auto b = enumerate_graphs(5, 6);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }

  TEST_CASE("no collisions among small trees") {
    const auto report = find_xi_collisions(tree_family(4));
    CHECK(report.examined == 5);
    CHECK(report.groups.empty());
    CHECK(report.consistent());
  }

  TEST_CASE("first tree collisions") {
    // The pair below was confirmed by an independent expansion in another language.
    const auto report = find_xi_collisions(tree_family(10, 10), 2);
    REQUIRE(report.groups.size() >= 1);
    const auto& g = report.groups.front();
    CHECK(g.codes == std::vector<std::string>{"IhDC?C@_?", "IhH?K?@?G"});
    CHECK(g.verdict == "ok");
    CHECK(find_xi_collisions(tree_family(9)).groups.empty());
    CHECK(report.consistent());
  }

  TEST_CASE("report is independent of threads") {
    const auto family = tree_family(10, 9);
    CHECK(find_xi_collisions(family, 1).to_json() == find_xi_collisions(family, 3).to_json());
    CHECK(search_oq2(family, 1).to_json() == search_oq2(family, 3).to_json());
  }

  TEST_CASE("(T, P) grouping harness") {
    const auto report = search_oq2(tree_family(6));
    CHECK(report.examined == 14);
    for (const auto& g : report.groups) {
      CHECK(g.members.size() >= 2);
      CHECK((g.verdict == "consistent" || g.verdict == "candidate"));
      CHECK((g.verdict == "consistent") == (g.xi_classes == 1));
    }
    const auto empty = search_oq2(Family{"empty", {}});
    CHECK(empty.groups.empty());
    CHECK(empty.examined == 0);
    const auto graphs = search_oq2(graph_family(4, 6));
    CHECK(graphs.to_json()["groups"].is_array());
  }
}
