#include "eep/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace eep {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph with " +
                     std::to_string(n) + " vertices");
  }
}

Edge normalized(EdgeId id, Vertex a, Vertex b) { return a <= b ? Edge{id, a, b} : Edge{id, b, a}; }

// Vertices mapped to kDropped are removed together with their edges.
constexpr Vertex kDropped = static_cast<Vertex>(-1);

Multigraph remapped(std::size_t new_n, const std::vector<Vertex>& remap, std::span<const Edge> edges,
                    std::optional<EdgeId> skip) {
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (skip && e.id == *skip) continue;
    Vertex a = remap[e.u];
    Vertex b = remap[e.v];
    if (a == kDropped || b == kDropped) continue;
    kept.push_back(normalized(e.id, a, b));
  }
  return Multigraph::from_edges(new_n, std::move(kept));
}

}  // namespace

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t a) {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --sets_;
  return true;
}

Multigraph Multigraph::from_edge_list(std::size_t vertex_count,
                                      std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  std::uint32_t next = 0;
  for (auto [a, b] : pairs) {
    check_vertex(vertex_count, a);
    check_vertex(vertex_count, b);
    edges.push_back(normalized(EdgeId{next++}, a, b));
  }
  Multigraph g(vertex_count);
  g.edges_ = std::move(edges);
  return g;
}

Multigraph Multigraph::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    check_vertex(vertex_count, e.u);
    check_vertex(vertex_count, e.v);
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  auto dup = std::adjacent_find(edges.begin(), edges.end(),
                                [](const Edge& a, const Edge& b) { return a.id == b.id; });
  if (dup != edges.end()) throw GraphError("duplicate edge id " + std::to_string(dup->id.value));
  Multigraph g(vertex_count);
  g.edges_ = std::move(edges);
  return g;
}

std::optional<std::size_t> Multigraph::index_of(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

const Edge& Multigraph::edge(EdgeId id) const {
  auto idx = index_of(id);
  if (!idx) throw GraphError("unknown edge id " + std::to_string(id.value));
  return edges_[*idx];
}

std::size_t Multigraph::loop_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

std::vector<std::size_t> Multigraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

EdgeId Multigraph::max_edge_id() const { return edges_.empty() ? EdgeId{0} : edges_.back().id; }

Multigraph delete_edge(const Multigraph& g, EdgeId e) {
  g.edge(e);
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - 1);
  for (const Edge& f : g.edges())
    if (f.id != e) kept.push_back(f);
  return Multigraph::from_edges(g.vertex_count(), std::move(kept));
}

Multigraph contract_edge(const Multigraph& g, EdgeId e) {
  const Edge target = g.edge(e);
  if (target.is_loop()) return delete_edge(g, e);
  std::vector<Vertex> remap(g.vertex_count());
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (w < target.v) remap[w] = w;
    else if (w == target.v) remap[w] = target.u;
    else remap[w] = w - 1;
  }
  return remapped(g.vertex_count() - 1, remap, g.edges(), e);
}

Multigraph extract_edge(const Multigraph& g, EdgeId e) {
  const Edge target = g.edge(e);
  std::vector<Vertex> remap(g.vertex_count(), kDropped);
  Vertex next = 0;
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (w != target.u && w != target.v) remap[w] = next++;
  return remapped(next, remap, g.edges(), e);
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const std::uint32_t id_shift = a.edge_count() == 0 ? 0 : a.max_edge_id().value + 1;
  const auto vertex_shift = static_cast<Vertex>(a.vertex_count());
  for (const Edge& e : b.edges())
    edges.push_back(Edge{EdgeId{e.id.value + id_shift}, e.u + vertex_shift, e.v + vertex_shift});
  return Multigraph::from_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

std::size_t count_components(const Multigraph& g, std::span<const EdgeId> subset) {
  DisjointSets sets(g.vertex_count());
  for (EdgeId id : subset) {
    const Edge& e = g.edge(id);
    sets.unite(e.u, e.v);
  }
  return sets.set_count();
}

std::vector<Vertex> vertex_support(const Multigraph& g, std::span<const EdgeId> subset) {
  std::vector<Vertex> support;
  for (EdgeId id : subset) {
    const Edge& e = g.edge(id);
    support.push_back(e.u);
    support.push_back(e.v);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support;
}

std::size_t covered_components(const Multigraph& g, std::span<const EdgeId> subset) {
  const std::size_t uncovered = g.vertex_count() - vertex_support(g, subset).size();
  return count_components(g, subset) - uncovered;
}

std::vector<Multigraph> connected_components(const Multigraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(e.u, e.v);

  std::vector<std::size_t> component_of_root(g.vertex_count(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> component(g.vertex_count());
  std::vector<Vertex> local(g.vertex_count());
  std::vector<std::size_t> sizes;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    std::size_t root = sets.find(w);
    if (component_of_root[root] == static_cast<std::size_t>(-1)) {
      component_of_root[root] = sizes.size();
      sizes.push_back(0);
    }
    component[w] = component_of_root[root];
    local[w] = static_cast<Vertex>(sizes[component[w]]++);
  }
  std::vector<std::vector<Edge>> edges(sizes.size());
  for (const Edge& e : g.edges()) edges[component[e.u]].push_back(Edge{e.id, local[e.u], local[e.v]});

  std::vector<Multigraph> parts;
  parts.reserve(sizes.size());
  for (std::size_t c = 0; c < sizes.size(); ++c) parts.push_back(Multigraph::from_edges(sizes[c], std::move(edges[c])));
  return parts;
}

std::size_t component_count(const Multigraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(e.u, e.v);
  return sets.set_count();
}

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }

bool is_bridge(const Multigraph& g, EdgeId id) {
  const Edge& target = g.edge(id);
  if (target.is_loop()) return false;
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges())
    if (e.id != id) sets.unite(e.u, e.v);
  return sets.find(target.u) != sets.find(target.v);
}

bool is_simple(const Multigraph& g) {
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
    ends.emplace_back(e.u, e.v);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

namespace {

std::size_t max_matching_from(const std::vector<Edge>& edges, std::size_t start, std::vector<bool>& used) {
  std::size_t best = 0;
  for (std::size_t i = start; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.is_loop() || used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = true;
    best = std::max(best, 1 + max_matching_from(edges, i + 1, used));
    used[e.u] = used[e.v] = false;
  }
  return best;
}

}  // namespace

std::size_t matching_number(const Multigraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<bool> used(g.vertex_count(), false);
  return max_matching_from(edges, 0, used);
}

namespace detail {

VertexMask support_mask(const Multigraph& g, EdgeMask subset) {
  VertexMask m = 0;
  const auto edges = g.edges();
  for (std::size_t i = 0; subset; ++i, subset >>= 1)
    if (subset & 1) m |= (VertexMask{1} << edges[i].u) | (VertexMask{1} << edges[i].v);
  return m;
}

std::size_t count_components(const Multigraph& g, EdgeMask subset) {
  DisjointSets sets(g.vertex_count());
  const auto edges = g.edges();
  for (std::size_t i = 0; subset; ++i, subset >>= 1)
    if (subset & 1) sets.unite(edges[i].u, edges[i].v);
  return sets.set_count();
}

std::size_t covered_components(const Multigraph& g, EdgeMask subset) {
  const auto covered = static_cast<std::size_t>(std::popcount(support_mask(g, subset)));
  return count_components(g, subset) - (g.vertex_count() - covered);
}

EdgeMask mask_of(const Multigraph& g, std::span<const EdgeId> subset) {
  EdgeMask m = 0;
  for (EdgeId id : subset) {
    auto idx = g.index_of(id);
    if (!idx) throw GraphError("edge id " + std::to_string(id.value) + " is not in the graph");
    m |= EdgeMask{1} << *idx;
  }
  return m;
}

}  // namespace detail

}  // namespace eep
