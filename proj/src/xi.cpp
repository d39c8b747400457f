#include "eep/xi.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <tuple>

#include "eep/canonical.hpp"

namespace eep {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

const MPoly& var_x() {
  static const MPoly p = MPoly::variable("x");
  return p;
}
const MPoly& var_y() {
  static const MPoly p = MPoly::variable("y");
  return p;
}
const MPoly& var_z() {
  static const MPoly p = MPoly::variable("z");
  return p;
}

class RecurrenceEngine {
 public:
  RecurrenceEngine(const XiOptions& options, const EdgeLabeling* labels)
      : options_(options), labels_(labels), memo_(options.memo) {
    if (options_.memoize && !memo_) memo_ = std::make_shared<MemoTable>();
  }

  MPoly run(const Multigraph& g) {
    if (g.edge_count() == 0) return var_x().pow(static_cast<std::uint32_t>(g.vertex_count()));
    if (options_.policy.split_components(g)) {
      auto parts = connected_components(g);
      if (parts.size() > 1) {
        MPoly product(1);
        for (const auto& part : parts) product *= run(part);
        return product;
      }
    }

    std::string key;
    if (options_.memoize) {
      key = make_key(g);
      if (auto hit = memo_->find(key)) return *hit;
    }

    const EdgeId e = options_.policy.choose_edge(g);
    MPoly weight(1);
    if (labels_) weight = MPoly::variable(label_variable("t", labels_->at(e)));
    MPoly result = run(delete_edge(g, e)) + var_y() * weight * run(contract_edge(g, e)) +
                   var_z() * weight * run(extract_edge(g, e));

    if (options_.memoize) memo_->insert(key, result);
    return result;
  }

 private:
  std::string make_key(const Multigraph& g) const {
    if (labels_) return options_.canonicalize ? canonical_key(g, *labels_) : raw_key(g, *labels_);
    return options_.canonicalize ? canonical_key(g) : raw_key(g);
  }

  const XiOptions& options_;
  const EdgeLabeling* labels_;
  std::shared_ptr<MemoTable> memo_;
};

// Shared enumeration of vertex-disjoint (A, B) pairs for both expansions.
// `emit(a_mask, b_mask, k_union, k_cov)` is called once per admissible pair.
template <class Emit>
void for_each_disjoint_pair(const Multigraph& g, detail::EdgeMask a_begin, detail::EdgeMask a_end, Emit&& emit) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<detail::VertexMask> ends(m);
  for (std::size_t i = 0; i < m; ++i)
    ends[i] = (detail::VertexMask{1} << edges[i].u) | (detail::VertexMask{1} << edges[i].v);

  for (detail::EdgeMask a = a_begin; a < a_end; ++a) {
    detail::VertexMask va = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (a >> i & 1) va |= ends[i];
    detail::EdgeMask allowed = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((ends[i] & va) == 0 && !(a >> i & 1)) allowed |= detail::EdgeMask{1} << i;

    // All submasks of `allowed`, including the empty one.
    detail::EdgeMask b = allowed;
    while (true) {
      DisjointSets all(g.vertex_count());
      DisjointSets only_b(g.vertex_count());
      detail::VertexMask vb = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (a >> i & 1) all.unite(edges[i].u, edges[i].v);
        if (b >> i & 1) {
          all.unite(edges[i].u, edges[i].v);
          only_b.unite(edges[i].u, edges[i].v);
          vb |= ends[i];
        }
      }
      const std::size_t uncovered = g.vertex_count() - static_cast<std::size_t>(std::popcount(vb));
      emit(a, b, all.set_count(), only_b.set_count() - uncovered);
      if (b == 0) break;
      b = (b - 1) & allowed;
    }
  }
}

void check_expansion_size(const Multigraph& g) {
  if (g.edge_count() > 40 || g.vertex_count() > 64)
    throw GraphError("expansion is limited to graphs with at most 40 edges and 64 vertices");
}

using ExponentCounts = std::map<MPoly::Exponents, Integer>;

// Splits the A-range into contiguous chunks, one per worker, and merges the counts.
template <class Body>
ExponentCounts parallel_expansion(const Multigraph& g, unsigned threads, Body body) {
  const detail::EdgeMask total = detail::EdgeMask{1} << g.edge_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<detail::EdgeMask>(total, 64))));
  std::vector<ExponentCounts> partial(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const detail::EdgeMask lo = total * t / threads;
    const detail::EdgeMask hi = total * (t + 1) / threads;
    auto job = [&, t, lo, hi] { body(lo, hi, partial[t]); };
    if (threads == 1) job();
    else workers.emplace_back(job);
  }
  for (auto& w : workers) w.join();
  ExponentCounts merged;
  for (auto& p : partial)
    for (auto& [e, c] : p) merged[e] += c;
  return merged;
}

MPoly counts_to_poly(const std::vector<std::string>& vars, const ExponentCounts& counts) {
  std::vector<std::pair<MPoly::Exponents, Integer>> terms(counts.begin(), counts.end());
  return MPoly::from_terms(vars, terms);
}

Rational rational_power(const Rational& base, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= base;
  return r;
}

template <class Step>
Rational general_eval(const Multigraph& g, const Rational& x, const EliminationPolicy& policy, const Step& step) {
  if (g.edge_count() == 0) return rational_power(x, g.vertex_count());
  if (policy.split_components(g)) {
    auto parts = connected_components(g);
    if (parts.size() > 1) {
      Rational product = 1;
      for (const auto& part : parts) product *= general_eval(part, x, policy, step);
      return product;
    }
  }
  const EdgeId e = policy.choose_edge(g);
  const auto [w, y, z] = step(e);
  Rational result = w * general_eval(delete_edge(g, e), x, policy, step);
  if (y != 0) result += y * general_eval(contract_edge(g, e), x, policy, step);
  if (z != 0) result += z * general_eval(extract_edge(g, e), x, policy, step);
  return result;
}

}  // namespace

std::uint64_t EliminationPolicy::graph_hash(const Multigraph& g) const {
  std::uint64_t h = splitmix64(seed_ ^ 0x5851f42d4c957f2dULL);
  h = splitmix64(h ^ g.vertex_count());
  for (const Edge& e : g.edges()) {
    h = splitmix64(h ^ e.id.value);
    h = splitmix64(h ^ (static_cast<std::uint64_t>(e.u) << 32 | e.v));
  }
  return h;
}

EdgeId EliminationPolicy::choose_edge(const Multigraph& g) const {
  const auto edges = g.edges();
  switch (kind_) {
    case Kind::kMaxDegreeSum: {
      const auto deg = g.degrees();
      const Edge* best = &edges.front();
      for (const Edge& e : edges)
        if (deg[e.u] + deg[e.v] > deg[best->u] + deg[best->v]) best = &e;
      return best->id;
    }
    case Kind::kRandom:
      return edges[graph_hash(g) % edges.size()].id;
    case Kind::kPriority:
      for (EdgeId id : order_)
        if (g.has_edge(id)) return id;
      return edges.front().id;
  }
  return edges.front().id;
}

bool EliminationPolicy::split_components(const Multigraph& g) const {
  switch (kind_) {
    case Kind::kMaxDegreeSum:
      return true;
    case Kind::kRandom:
      return (graph_hash(g) >> 40 & 1) != 0;
    case Kind::kPriority:
      return false;
  }
  return true;
}

std::optional<MPoly> MemoTable::find(const std::string& key) {
  std::lock_guard lock(mutex_);
  auto it = slots_.find(key);
  if (it == slots_.end()) return std::nullopt;
  ++hits_;
  if (capacity_ != 0) order_.splice(order_.begin(), order_, it->second.position);
  return it->second.value;
}

void MemoTable::insert(const std::string& key, const MPoly& value) {
  std::lock_guard lock(mutex_);
  auto it = slots_.find(key);
  if (it != slots_.end()) return;  // another worker got there first; values agree
  order_.push_front(key);
  slots_.emplace(key, Slot{value, order_.begin()});
  if (capacity_ != 0 && slots_.size() > capacity_) {
    slots_.erase(order_.back());
    order_.pop_back();
  }
}

std::size_t MemoTable::size() const {
  std::lock_guard lock(mutex_);
  return slots_.size();
}

std::size_t MemoTable::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

MPoly xi(const Multigraph& g, const XiOptions& options) { return RecurrenceEngine(options, nullptr).run(g); }

MPoly xi_lab(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options) {
  labels.require_total(g);
  return RecurrenceEngine(options, &labels).run(g);
}

MPoly xi_expansion(const Multigraph& g, unsigned threads) {
  check_expansion_size(g);
  auto counts = parallel_expansion(g, threads, [&](detail::EdgeMask lo, detail::EdgeMask hi, ExponentCounts& out) {
    for_each_disjoint_pair(g, lo, hi, [&](detail::EdgeMask a, detail::EdgeMask b, std::size_t k, std::size_t kcov) {
      const auto size = static_cast<std::uint32_t>(std::popcount(a) + std::popcount(b));
      out[{static_cast<std::uint32_t>(k - kcov), size - static_cast<std::uint32_t>(kcov),
           static_cast<std::uint32_t>(kcov)}] += 1;
    });
  });
  return counts_to_poly({"x", "y", "z"}, counts);
}

MPoly xi_lab_expansion(const Multigraph& g, const EdgeLabeling& labels, unsigned threads) {
  check_expansion_size(g);
  const auto alphabet = labels.alphabet(g);
  std::vector<std::string> vars = {"x", "y", "z"};
  std::map<std::string, std::size_t> column;
  for (const auto& label : alphabet) {
    column[label] = vars.size();
    vars.push_back(label_variable("t", label));
  }
  std::vector<std::size_t> edge_column;
  for (const Edge& e : g.edges()) edge_column.push_back(column.at(labels.at(e.id)));

  auto counts = parallel_expansion(g, threads, [&](detail::EdgeMask lo, detail::EdgeMask hi, ExponentCounts& out) {
    for_each_disjoint_pair(g, lo, hi, [&](detail::EdgeMask a, detail::EdgeMask b, std::size_t k, std::size_t kcov) {
      MPoly::Exponents e(vars.size(), 0);
      const detail::EdgeMask chosen = a | b;
      for (std::size_t i = 0; i < edge_column.size(); ++i)
        if (chosen >> i & 1) ++e[edge_column[i]];
      const auto size = static_cast<std::uint32_t>(std::popcount(chosen));
      e[0] = static_cast<std::uint32_t>(k - kcov);
      e[1] = size - static_cast<std::uint32_t>(kcov);
      e[2] = static_cast<std::uint32_t>(kcov);
      out[e] += 1;
    });
  });
  return counts_to_poly(vars, counts);
}

Rational xi_general_eval(const Multigraph& g, const GeneralParams& params, const EliminationPolicy& policy) {
  return general_eval(g, params.x, policy, [&](EdgeId) { return std::tuple{params.w, params.y, params.z}; });
}

std::string label_variable(const std::string& family, const std::string& label) { return family + "_" + label; }

Rational xi_lab_general_eval(const Multigraph& g, const EdgeLabeling& labels, const Rational& x,
                             const std::map<std::string, LabelParams>& params, const EliminationPolicy& policy) {
  labels.require_total(g);
  for (const auto& label : labels.alphabet(g))
    if (!params.count(label)) throw std::invalid_argument("no parameters for label '" + label + "'");
  return general_eval(g, x, policy, [&](EdgeId e) {
    const LabelParams& p = params.at(labels.at(e));
    return std::tuple{p.w, p.y, p.z};
  });
}

}  // namespace eep
