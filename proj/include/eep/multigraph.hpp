#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eep {

using Vertex = std::uint32_t;

/// Stable identity of an edge record. Survives deletion, contraction and
/// extraction of other edges, so parallel edges stay individually addressable.
struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
  EdgeId id;
  Vertex u = 0;  // u <= v
  Vertex v = 0;

  bool is_loop() const { return u == v; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite undirected multigraph. Loops and parallel edges are allowed;
/// vertices are the dense range [0, vertex_count()). Edges are kept sorted by id.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count) : n_(vertex_count) {}

  /// Edge ids are assigned 0, 1, ... in sequence order.
  static Multigraph from_edge_list(std::size_t vertex_count,
                                   std::span<const std::pair<Vertex, Vertex>> pairs);
  static Multigraph from_edge_list(std::size_t vertex_count,
                                   std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edge_list(vertex_count, std::span(pairs.begin(), pairs.size()));
  }
  /// Edges with caller-chosen ids; ids must be unique.
  static Multigraph from_edges(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return n_ == 0 && edges_.empty(); }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(EdgeId id) const { return index_of(id).has_value(); }
  std::optional<std::size_t> index_of(EdgeId id) const;
  /// Throws GraphError for an unknown id.
  const Edge& edge(EdgeId id) const;

  std::size_t loop_count() const;
  std::vector<std::size_t> degrees() const;  // a loop adds 2
  EdgeId max_edge_id() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

Multigraph delete_edge(const Multigraph& g, EdgeId e);
/// Merges the larger endpoint into the smaller one. Contracting a loop deletes it.
Multigraph contract_edge(const Multigraph& g, EdgeId e);
/// Removes both endpoints and every incident edge; a loop removes its single vertex.
Multigraph extract_edge(const Multigraph& g, EdgeId e);
/// Vertices of `b` are shifted past those of `a`; edge ids of `b` past max id of `a`.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Connected components of (V, S), isolated vertices included.
std::size_t count_components(const Multigraph& g, std::span<const EdgeId> subset);
/// Connected components of (V(S), S).
std::size_t covered_components(const Multigraph& g, std::span<const EdgeId> subset);
/// Sorted endpoints of the edges in S.
std::vector<Vertex> vertex_support(const Multigraph& g, std::span<const EdgeId> subset);

/// Components of g as separate graphs, each with vertices renumbered in
/// increasing order and edge ids preserved. Ordered by smallest original vertex.
std::vector<Multigraph> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);
/// k(E): components of the whole graph.
std::size_t component_count(const Multigraph& g);
/// True when removing e increases the number of components. Loops are never bridges.
bool is_bridge(const Multigraph& g, EdgeId e);
/// Size of a maximum matching (loops excluded); brute force, desk scale only.
std::size_t matching_number(const Multigraph& g);
bool is_simple(const Multigraph& g);

/// Union-find over a dense index range.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t a);
  bool unite(std::size_t a, std::size_t b);
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t sets_;
};

namespace detail {

/// Bit i of a mask refers to g.edges()[i]. Requires edge_count() <= 64.
using EdgeMask = std::uint64_t;
using VertexMask = std::uint64_t;

VertexMask support_mask(const Multigraph& g, EdgeMask subset);
std::size_t count_components(const Multigraph& g, EdgeMask subset);
std::size_t covered_components(const Multigraph& g, EdgeMask subset);
EdgeMask mask_of(const Multigraph& g, std::span<const EdgeId> subset);

}  // namespace detail

}  // namespace eep

template <>
struct std::hash<eep::EdgeId> {
  std::size_t operator()(eep::EdgeId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
