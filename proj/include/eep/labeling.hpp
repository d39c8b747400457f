#pragma once

#include <map>
#include <set>
#include <string>

#include "eep/multigraph.hpp"

namespace eep {

/// Total map from edge ids to label symbols of an unstructured alphabet.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;

  void set(EdgeId e, std::string label) { labels_[e] = std::move(label); }
  /// Throws GraphError when e carries no label.
  const std::string& at(EdgeId e) const;
  bool contains(EdgeId e) const { return labels_.count(e) != 0; }
  std::size_t size() const { return labels_.size(); }

  /// Labels actually used by the edges of g.
  std::set<std::string> alphabet(const Multigraph& g) const;
  /// Throws GraphError naming the first unlabeled edge of g.
  void require_total(const Multigraph& g) const;

  /// Labels the edges of g in id order, cycling through `labels`.
  static EdgeLabeling cycling(const Multigraph& g, std::initializer_list<std::string> labels);
  /// Every edge receives the same label.
  static EdgeLabeling uniform(const Multigraph& g, const std::string& label);
  /// Every edge receives its own label "e<id>".
  static EdgeLabeling distinct(const Multigraph& g);

  const std::map<EdgeId, std::string>& entries() const { return labels_; }

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

 private:
  std::map<EdgeId, std::string> labels_;
};

/// Relabels the labeling of disjoint_union(a, b) consistently with its id shift.
EdgeLabeling disjoint_union_labeling(const Multigraph& a, const EdgeLabeling& la, const EdgeLabeling& lb);

}  // namespace eep
