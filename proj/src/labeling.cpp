#include "eep/labeling.hpp"

#include <string>
#include <vector>

namespace eep {

const std::string& EdgeLabeling::at(EdgeId e) const {
  auto it = labels_.find(e);
  if (it == labels_.end()) throw GraphError("edge " + std::to_string(e.value) + " is unlabeled");
  return it->second;
}

std::set<std::string> EdgeLabeling::alphabet(const Multigraph& g) const {
  std::set<std::string> used;
  for (const Edge& e : g.edges()) used.insert(at(e.id));
  return used;
}

void EdgeLabeling::require_total(const Multigraph& g) const {
  for (const Edge& e : g.edges()) at(e.id);
}

EdgeLabeling EdgeLabeling::cycling(const Multigraph& g, std::initializer_list<std::string> labels) {
  std::vector<std::string> pool(labels);
  EdgeLabeling lab;
  std::size_t i = 0;
  for (const Edge& e : g.edges()) lab.set(e.id, pool[i++ % pool.size()]);
  return lab;
}

EdgeLabeling EdgeLabeling::uniform(const Multigraph& g, const std::string& label) {
  EdgeLabeling lab;
  for (const Edge& e : g.edges()) lab.set(e.id, label);
  return lab;
}

EdgeLabeling EdgeLabeling::distinct(const Multigraph& g) {
  EdgeLabeling lab;
  for (const Edge& e : g.edges()) lab.set(e.id, "e" + std::to_string(e.id.value));
  return lab;
}

EdgeLabeling disjoint_union_labeling(const Multigraph& a, const EdgeLabeling& la, const EdgeLabeling& lb) {
  const std::uint32_t shift = a.edge_count() == 0 ? 0 : a.max_edge_id().value + 1;
  EdgeLabeling out;
  for (const auto& [id, label] : la.entries()) out.set(id, label);
  for (const auto& [id, label] : lb.entries()) out.set(EdgeId{id.value + shift}, label);
  return out;
}

}  // namespace eep
