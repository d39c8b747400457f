#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "eep/multigraph.hpp"

namespace eep {

/// One representative per isomorphism class of free trees on n vertices,
/// generated as canonical level sequences. Requires 1 <= n <= 16.
std::vector<Multigraph> enumerate_trees(std::size_t n);

/// One representative per isomorphism class of simple graphs on exactly n
/// vertices with at most m_max edges. Requires n <= 8.
std::vector<Multigraph> enumerate_graphs(std::size_t n, std::size_t m_max);

struct Family {
  std::string descriptor;
  std::vector<Multigraph> members;
};

/// All free trees with min_n <= n <= max_n, ordered by n then generation order.
Family tree_family(std::size_t max_n, std::size_t min_n = 1);
/// All simple graphs on n vertices with at most m_max edges.
Family graph_family(std::size_t n, std::size_t m_max);

struct PairVerdict {
  std::size_t first = 0;  // positions within the group
  std::size_t second = 0;
  bool xi_equal = false;
  bool tutte_equal = false;
  bool dpt_equal = false;
  bool u_equal = false;
};

struct CollisionGroup {
  /// Text form of the shared polynomial (collisions) or "T ; P" (oq2).
  std::string key;
  std::vector<Multigraph> members;
  std::vector<std::string> codes;  // graph6, or edge list for non-simple members
  std::vector<PairVerdict> pairs;  // collisions only
  std::size_t xi_classes = 1;      // oq2 only
  /// collisions: "ok" or "defect"; oq2: "consistent" or "candidate".
  std::string verdict;
};

struct CollisionReport {
  std::string search;  // "collisions" | "oq2"
  std::string family;
  std::size_t examined = 0;
  std::map<std::size_t, std::size_t> examined_by_order;  // |V| -> members
  std::vector<CollisionGroup> groups;

  /// False when some collision group has a pair U fails to separate or a pair
  /// where T or P disagree.
  bool consistent() const;
  nlohmann::json to_json() const;
};

/// Groups members by xi; groups of size >= 2 are reported with pairwise
/// verdicts for T, P and U.
CollisionReport find_xi_collisions(const Family& family, unsigned threads = 1);

/// Groups members by (T, P); each group of size >= 2 reports how many xi
/// classes it splits into.
CollisionReport search_oq2(const Family& family, unsigned threads = 1);

}  // namespace eep
