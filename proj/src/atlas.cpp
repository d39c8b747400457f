#include "eep/atlas.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "eep/canonical.hpp"
#include "eep/io.hpp"
#include "eep/parallel.hpp"
#include "eep/specializations.hpp"
#include "eep/xi.hpp"

namespace eep {

namespace {

using Layout = std::vector<int>;

// Level sequences: vertex i sits at depth layout[i] in a preorder walk.
Multigraph layout_to_tree(const Layout& layout) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    while (!stack.empty() && layout[stack.back()] >= layout[i]) stack.pop_back();
    if (!stack.empty()) pairs.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    stack.push_back(i);
  }
  return Multigraph::from_edge_list(layout.size(), pairs);
}

std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> from = std::nullopt) {
  std::size_t p;
  if (from) {
    p = *from;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Left: the first subtree of the root (depths shifted up); rest: everything else.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one_found) {
      m = i;
      break;
    }
    one_found = true;
  }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

// Advances to the next layout rooted at a centre, or nullopt when exhausted.
std::optional<Layout> next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size() || (left.size() == rest.size() && left > rest)) valid = false;
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (next && candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(*next);
    const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t k = 0; k < len; ++k) (*next)[next->size() - len + k] = static_cast<int>(k) + 1;
  }
  return next;
}

std::string member_code(const Multigraph& g) {
  return is_simple(g) ? encode_graph6(g) : format_edge_list(g);
}

struct Invariants {
  std::string xi;
  std::string tutte;
  std::string dpt;
};

std::vector<Invariants> compute_invariants(const Family& family, unsigned threads) {
  std::vector<Invariants> out(family.members.size());
  XiOptions options;
  options.memo = std::make_shared<MemoTable>();
  parallel_for(family.members.size(), threads, [&](std::size_t i) {
    const Multigraph& g = family.members[i];
    const MPoly p = xi(g, options);
    out[i] = {p.to_string(), tutte_from_xi(g, p).to_string(), dpt_from_xi(p).to_string()};
  });
  return out;
}

template <typename KeyFn>
std::vector<std::vector<std::size_t>> group_by(std::size_t count, KeyFn key) {
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < count; ++i) buckets[key(i)].push_back(i);
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [k, members] : buckets) {
    if (members.size() >= 2) groups.push_back(std::move(members));
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

CollisionReport start_report(const std::string& search, const Family& family) {
  CollisionReport report;
  report.search = search;
  report.family = family.descriptor;
  report.examined = family.members.size();
  for (const Multigraph& g : family.members) ++report.examined_by_order[g.vertex_count()];
  return report;
}

}  // namespace

std::vector<Multigraph> enumerate_trees(std::size_t n) {
  if (n < 1 || n > 16) throw std::out_of_range("tree order must lie in [1, 16]");
  if (n == 1) return {Multigraph(1)};

  Layout layout;
  for (std::size_t i = 0; i <= n / 2; ++i) layout.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout.push_back(static_cast<int>(i));

  std::vector<Multigraph> trees;
  std::optional<Layout> current = layout;
  while (current) {
    current = next_tree(*current);
    if (!current) break;
    trees.push_back(layout_to_tree(*current));
    current = next_rooted_tree(*current);
  }
  return trees;
}

std::vector<Multigraph> enumerate_graphs(std::size_t n, std::size_t m_max) {
  if (n > 8) throw std::out_of_range("graph order must be at most 8");
  const std::size_t top = std::min(m_max, n * (n - (n > 0 ? 1 : 0)) / 2);

  std::vector<Multigraph> all{Multigraph(n)};
  std::vector<Multigraph> level{Multigraph(n)};
  for (std::size_t m = 1; m <= top; ++m) {
    std::unordered_set<std::string> seen;
    std::vector<Multigraph> next;
    for (const Multigraph& g : level) {
      std::vector<bool> adjacent(n * n, false);
      for (const Edge& e : g.edges()) adjacent[e.u * n + e.v] = true;
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (adjacent[u * n + v]) continue;
          pairs.emplace_back(u, v);
          Multigraph h = Multigraph::from_edge_list(n, pairs);
          pairs.pop_back();
          if (seen.insert(canonical_key(h)).second) next.push_back(std::move(h));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

Family tree_family(std::size_t max_n, std::size_t min_n) {
  Family family{"trees " + std::to_string(min_n) + "<=n<=" + std::to_string(max_n), {}};
  for (std::size_t n = min_n; n <= max_n; ++n) {
    auto trees = enumerate_trees(n);
    family.members.insert(family.members.end(), trees.begin(), trees.end());
  }
  return family;
}

Family graph_family(std::size_t n, std::size_t m_max) {
  return {"graphs n=" + std::to_string(n) + " m<=" + std::to_string(m_max), enumerate_graphs(n, m_max)};
}

bool CollisionReport::consistent() const {
  if (search != "collisions") return true;
  return std::all_of(groups.begin(), groups.end(), [](const CollisionGroup& g) { return g.verdict == "ok"; });
}

nlohmann::json CollisionReport::to_json() const {
  nlohmann::json j;
  j["search"] = search;
  j["family"] = family;
  j["examined"] = examined;
  nlohmann::json by_order = nlohmann::json::object();
  for (const auto& [n, count] : examined_by_order) by_order[std::to_string(n)] = count;
  j["examined_by_order"] = by_order;
  nlohmann::json gs = nlohmann::json::array();
  for (const CollisionGroup& g : groups) {
    nlohmann::json entry;
    entry["key"] = g.key;
    entry["members"] = g.codes;
    entry["verdict"] = g.verdict;
    if (search == "collisions") {
      nlohmann::json pairs = nlohmann::json::array();
      for (const PairVerdict& p : g.pairs) {
        pairs.push_back({{"pair", {p.first, p.second}},
                         {"xi_equal", p.xi_equal},
                         {"tutte_equal", p.tutte_equal},
                         {"dpt_equal", p.dpt_equal},
                         {"u_equal", p.u_equal}});
      }
      entry["pairs"] = pairs;
    } else {
      entry["xi_classes"] = g.xi_classes;
    }
    gs.push_back(std::move(entry));
  }
  j["groups"] = gs;
  j["consistent"] = consistent();
  return j;
}

CollisionReport find_xi_collisions(const Family& family, unsigned threads) {
  CollisionReport report = start_report("collisions", family);
  const auto inv = compute_invariants(family, threads);

  // Drop isomorphic duplicates so every group is pairwise non-isomorphic.
  std::vector<std::size_t> distinct;
  std::unordered_set<std::string> keys;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (keys.insert(canonical_key(family.members[i])).second) distinct.push_back(i);
  }
  auto groups = group_by(distinct.size(), [&](std::size_t k) { return inv[distinct[k]].xi; });

  for (const auto& positions : groups) {
    CollisionGroup group;
    std::vector<std::size_t> idx;
    for (std::size_t k : positions) idx.push_back(distinct[k]);
    group.key = inv[idx.front()].xi;
    std::vector<MPoly> u(idx.size());
    parallel_for(idx.size(), threads, [&](std::size_t a) { u[a] = noble_welsh_u(family.members[idx[a]]); });
    bool ok = true;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      group.members.push_back(family.members[idx[a]]);
      group.codes.push_back(member_code(family.members[idx[a]]));
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        PairVerdict v{a, b, inv[idx[a]].xi == inv[idx[b]].xi, inv[idx[a]].tutte == inv[idx[b]].tutte,
                      inv[idx[a]].dpt == inv[idx[b]].dpt, u[a] == u[b]};
        ok = ok && v.tutte_equal && v.dpt_equal && !v.u_equal;
        group.pairs.push_back(v);
      }
    }
    group.verdict = ok ? "ok" : "defect";
    report.groups.push_back(std::move(group));
  }
  return report;
}

CollisionReport search_oq2(const Family& family, unsigned threads) {
  CollisionReport report = start_report("oq2", family);
  const auto inv = compute_invariants(family, threads);
  auto groups = group_by(family.members.size(), [&](std::size_t i) { return inv[i].tutte + " ; " + inv[i].dpt; });
  for (const auto& idx : groups) {
    CollisionGroup group;
    group.key = inv[idx.front()].tutte + " ; " + inv[idx.front()].dpt;
    std::unordered_set<std::string> classes;
    for (std::size_t i : idx) {
      group.members.push_back(family.members[i]);
      group.codes.push_back(member_code(family.members[i]));
      classes.insert(inv[i].xi);
    }
    group.xi_classes = classes.size();
    group.verdict = classes.size() == 1 ? "consistent" : "candidate";
    report.groups.push_back(std::move(group));
  }
  return report;
}

}  // namespace eep
