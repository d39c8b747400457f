#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "eep/labeling.hpp"
#include "eep/multigraph.hpp"
#include "eep/poly.hpp"
#include "eep/xi.hpp"

namespace eep {

// Brute-force oracles. None of these touches the elimination recurrence or the
// pair expansion; they enumerate subsets, assignments or run the classical
// bridge/loop recursion directly on the multigraph.

/// Sum over A ⊆ E of q^k(A) v^|A|.
MPoly oracle_sokal(const Multigraph& g);
/// Sum over A ⊆ E of q^k(A) prod_{e in A} v_c(e).
MPoly oracle_sokal_labeled(const Multigraph& g, const EdgeLabeling& labels);
/// Bridge/loop recursion with T(edgeless) = 1.
MPoly oracle_tutte(const Multigraph& g);

/// Vertex-disjoint edge sets M; a loop occupies its single vertex.
/// sum_M x^(|V| - |V(M)|) y^|M|.
MPoly oracle_matchings(const Multigraph& g);
/// sum_M x^|M|.
MPoly oracle_matching_generating(const Multigraph& g);
/// sum_M (-1)^|M| x^(|V| - |V(M)|).
MPoly oracle_matching_defect(const Multigraph& g);
/// sum_M prod_{e in M} t_c(e).
MPoly oracle_heilmann_lieb(const Multigraph& g, const EdgeLabeling& labels);
/// sum_M prod_{e = {u, v} in M} edge_weight[e] vertex_weight[u] vertex_weight[v].
Rational oracle_heilmann_lieb_weighted(const Multigraph& g, const std::vector<Rational>& vertex_weight,
                                       const std::map<EdgeId, Rational>& edge_weight);

/// Colourings V -> {0..x-1} where colours below y are proper: no edge (loops
/// included) joins two vertices of the same proper colour. Exhaustive.
Integer oracle_colorings(const Multigraph& g, unsigned x, unsigned y);

/// sum over vertex covers C of tau^|C| (a loop forces its vertex into C).
MPoly oracle_vertex_covers(const Multigraph& g);
/// sum over independent sets S of u^|S| (a looped vertex is never in S).
MPoly oracle_independent_sets(const Multigraph& g);

/// Number of pairs (A, B) of edge sets with A ∩ B = ∅ and V(A) ∩ V(B) = ∅.
Integer count_disjoint_pairs(const Multigraph& g);

struct CorpusEntry {
  std::string name;
  Multigraph graph;
};

constexpr std::uint64_t kCorpusSeed = 20090801;

/// Connected simple graphs with 1..max_vertices vertices, six multigraph
/// fixtures, and 20 seeded random multigraphs with at most min(5, max_vertices)
/// vertices and 8 edges.
std::vector<CorpusEntry> corpus(std::size_t max_vertices = 5, std::uint64_t seed = kCorpusSeed);

/// The path a-u-v-w with edges 0 = {a,u}, 1 = {u,v} (e1), 2 = {v,w} (e2).
Multigraph confluence_witness();

struct Outcome {
  std::string graph;  // corpus name
  std::string check;
  bool pass = true;
  /// Reproduction data: the graph as an edge list and the parameters used;
  /// values observed when failing.
  nlohmann::json detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<Outcome> outcomes;

  bool passed() const;
  std::size_t failures() const;
  void append(VerifyReport other);
  nlohmann::json to_json() const;
  /// One line per failing outcome, then a summary line.
  std::string to_text() const;
};

/// xi under `trials` random elimination policies without memoisation.
VerifyReport check_confluence(const Multigraph& g, std::size_t trials, std::uint64_t seed,
                              const std::string& name = "graph");

/// General recurrence on the witness: e1-first against e2-first at
/// (w, z) = (2, 1), (1, 1), (2, 0) with x = y = 1, plus the z = 0 identity
/// xi(G, x, y, 0, t) = t^|E| Z(G, x, y/t) at five seeded rational points.
VerifyReport nonconfluence_witness(std::uint64_t seed = kCorpusSeed);

/// Labeled general recurrence along `trials` random orders; pass iff every
/// order gives the same value.
VerifyReport check_labeled_conditions(const Multigraph& g, const EdgeLabeling& labels, const Rational& x,
                                      const std::map<std::string, LabelParams>& params, std::size_t trials,
                                      std::uint64_t seed, const std::string& name = "graph",
                                      const std::string& check = "labeled-order-invariance");

struct SuiteOptions {
  std::size_t max_vertices = 5;
  std::size_t trials = 50;
  std::uint64_t seed = kCorpusSeed;
  unsigned threads = 1;
};

/// Suites: expansion, confluence, nonconfluence, specializations, derived,
/// labeled, boundary, all. Throws std::invalid_argument for other names.
VerifyReport run_suite(const std::string& suite, const SuiteOptions& options = {});
const std::vector<std::string>& suite_names();

}  // namespace eep
