#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "eep/atlas.hpp"
#include "eep/canonical.hpp"
#include "eep/verify.hpp"

using namespace eep;

namespace {
Multigraph permuted(const Multigraph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = perm[e.u], b = perm[e.v];
    edges.push_back(Edge{e.id, std::min(a, b), std::max(a, b)});
  }
  return Multigraph::from_edges(g.vertex_count(), edges);
}
}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("keys are invariant under relabelling") {
    std::mt19937_64 rng(7);
    for (const auto& entry : corpus()) {
      const std::string key = canonical_key(entry.graph);
      const EdgeLabeling labels = EdgeLabeling::cycling(entry.graph, {"a", "b"});
      const std::string lkey = canonical_key(entry.graph, labels);
      std::vector<Vertex> perm(entry.graph.vertex_count());
      for (int round = 0; round < 5; ++round) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Multigraph h = permuted(entry.graph, perm);
        CHECK_MESSAGE(canonical_key(h) == key, entry.name);
        CHECK_MESSAGE(canonical_key(h, labels) == lkey, entry.name);
      }
    }
  }

  TEST_CASE("keys separate non-isomorphic graphs") {
    std::set<std::string> keys;
    const auto graphs = enumerate_graphs(6, 15);
    for (const auto& g : graphs) keys.insert(canonical_key(g));
    CHECK(keys.size() == graphs.size());
    CHECK(keys.size() == 156);
  }

  TEST_CASE("multiplicities and loops matter") {
    const auto single = Multigraph::from_edge_list(2, {{0, 1}});
    const auto doubled = Multigraph::from_edge_list(2, {{0, 1}, {0, 1}});
    const auto looped = Multigraph::from_edge_list(2, {{0, 1}, {0, 0}});
    const auto looped2 = Multigraph::from_edge_list(2, {{0, 1}, {1, 1}});
    CHECK(canonical_key(single) != canonical_key(doubled));
    CHECK(canonical_key(doubled) != canonical_key(looped));
    CHECK(canonical_key(looped) == canonical_key(looped2));
  }

  TEST_CASE("labeled keys respect labels") {
    const auto p4 = Multigraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    EdgeLabeling aab, baa, aba;
    aab.set(EdgeId{0}, "a"), aab.set(EdgeId{1}, "a"), aab.set(EdgeId{2}, "b");
    baa.set(EdgeId{0}, "b"), baa.set(EdgeId{1}, "a"), baa.set(EdgeId{2}, "a");
    aba.set(EdgeId{0}, "a"), aba.set(EdgeId{1}, "b"), aba.set(EdgeId{2}, "a");
    CHECK(canonical_key(p4, aab) == canonical_key(p4, baa));
    CHECK(canonical_key(p4, aab) != canonical_key(p4, aba));
    CHECK(canonical_key(p4, aab) != canonical_key(p4));
  }

  TEST_CASE("raw keys distinguish vertex orders") {
    const auto a = Multigraph::from_edge_list(3, {{0, 1}});
    const auto b = Multigraph::from_edge_list(3, {{1, 2}});
    CHECK(raw_key(a) != raw_key(b));
    CHECK(canonical_key(a) == canonical_key(b));
  }

  TEST_CASE("highly symmetric graphs") {
    // Petersen graph and the 3-cube: both cubic on 10 and 8 vertices, vertex-transitive.
    const auto petersen = Multigraph::from_edge_list(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    std::mt19937_64 rng(3);
    std::vector<Vertex> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_key(permuted(petersen, perm)) == canonical_key(petersen));
    const auto prism = Multigraph::from_edge_list(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5},
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    CHECK(canonical_key(prism) != canonical_key(petersen));
  }
}
