#pragma once

#include <cstdint>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eep/labeling.hpp"
#include "eep/multigraph.hpp"
#include "eep/poly.hpp"

namespace eep {

/// Deterministic rule picking the next edge to eliminate and deciding when the
/// product rule is applied to a disconnected graph.
class EliminationPolicy {
 public:
  enum class Kind { kMaxDegreeSum, kRandom, kPriority };

  /// Edge of maximal endpoint-degree sum (ties: smallest id); always splits components.
  static EliminationPolicy max_degree_sum() { return EliminationPolicy(Kind::kMaxDegreeSum, 0, {}); }
  /// Pseudo-random edge and split decision, a pure function of (seed, graph).
  static EliminationPolicy random(std::uint64_t seed) { return EliminationPolicy(Kind::kRandom, seed, {}); }
  /// First edge of `order` still present, else the smallest id; never splits
  /// until the graph is edgeless.
  static EliminationPolicy priority(std::vector<EdgeId> order) {
    return EliminationPolicy(Kind::kPriority, 0, std::move(order));
  }

  Kind kind() const { return kind_; }
  /// Requires g.edge_count() > 0.
  EdgeId choose_edge(const Multigraph& g) const;
  bool split_components(const Multigraph& g) const;

 private:
  EliminationPolicy(Kind kind, std::uint64_t seed, std::vector<EdgeId> order)
      : kind_(kind), seed_(seed), order_(std::move(order)) {}
  std::uint64_t graph_hash(const Multigraph& g) const;

  Kind kind_;
  std::uint64_t seed_;
  std::vector<EdgeId> order_;
};

/// Thread-safe memo of polynomials keyed by graph keys. capacity == 0 means
/// unbounded; otherwise least-recently-used entries are evicted.
class MemoTable {
 public:
  explicit MemoTable(std::size_t capacity = 0) : capacity_(capacity) {}

  std::optional<MPoly> find(const std::string& key);
  void insert(const std::string& key, const MPoly& value);
  std::size_t size() const;
  std::size_t hits() const;

 private:
  using Order = std::list<std::string>;
  struct Slot {
    MPoly value;
    Order::iterator position;
  };

  mutable std::mutex mutex_;
  std::size_t capacity_;
  std::size_t hits_ = 0;
  Order order_;
  std::unordered_map<std::string, Slot> slots_;
};

struct XiOptions {
  EliminationPolicy policy = EliminationPolicy::max_degree_sum();
  bool memoize = true;
  /// When false, memo keys are plain encodings and only identical graphs share entries.
  bool canonicalize = true;
  /// Shared table; a call-local one is used when null.
  std::shared_ptr<MemoTable> memo;
};

/// The edge elimination polynomial in x, y, z via the confluent recurrence
/// xi(G) = xi(G-e) + y xi(G/e) + z xi(G†e), xi(E1) = x, xi(∅) = 1.
MPoly xi(const Multigraph& g, const XiOptions& options = {});

/// The same polynomial as a sum over vertex-disjoint edge-subset pairs (A, B) of
/// x^(k(A∪B) - kcov(B)) y^(|A| + |B| - kcov(B)) z^kcov(B).
MPoly xi_expansion(const Multigraph& g, unsigned threads = 1);

/// Coefficients of the non-confluent recurrence w xi(G-e) + y xi(G/e) + z xi(G†e).
struct GeneralParams {
  Rational w = 1;
  Rational x = 1;
  Rational y = 1;
  Rational z = 1;
};

/// Evaluates the general recurrence strictly along `policy`, without memoization.
Rational xi_general_eval(const Multigraph& g, const GeneralParams& params, const EliminationPolicy& policy);

/// Name of the label-indexed variable, e.g. label_variable("t", "a") == "t_a".
std::string label_variable(const std::string& family, const std::string& label);

/// Labeled polynomial in x, y, z, t_λ via
/// xi(G) = xi(G-e) + y t_c(e) xi(G/e) + z t_c(e) xi(G†e).
MPoly xi_lab(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options = {});

/// Sum over vertex-disjoint (A, B) of the unlabeled summand times the product
/// of t_c(e) over A ∪ B.
MPoly xi_lab_expansion(const Multigraph& g, const EdgeLabeling& labels, unsigned threads = 1);

/// Per-label coefficients of the labeled general recurrence.
struct LabelParams {
  Rational w = 1;
  Rational y = 1;
  Rational z = 1;
};

/// Evaluates w_c(e) xi(G-e) + y_c(e) xi(G/e) + z_c(e) xi(G†e), xi(E1) = x, along `policy`.
Rational xi_lab_general_eval(const Multigraph& g, const EdgeLabeling& labels, const Rational& x,
                             const std::map<std::string, LabelParams>& params, const EliminationPolicy& policy);

}  // namespace eep
