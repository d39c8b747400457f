#include "eep/specializations.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace eep {

namespace {

MPoly var(const std::string& name) { return MPoly::variable(name); }

std::map<std::string, std::size_t> label_counts(const Multigraph& g, const EdgeLabeling& labels) {
  std::map<std::string, std::size_t> counts;
  for (const Edge& e : g.edges()) ++counts[labels.at(e.id)];
  return counts;
}

// Replaces each t_λ^k by num(λ)^k * den(λ)^(n_λ - k), n_λ the number of edges
// labeled λ. Realises a substitution t_λ = num/den followed by multiplication
// with prod_e den(c(e)), without leaving the polynomial ring.
template <class Num, class Den>
MPoly clear_label_fractions(const MPoly& p, const std::map<std::string, std::size_t>& counts, Num num, Den den) {
  std::map<std::string, std::size_t> t_column;
  for (std::size_t i = 0; i < p.vars().size(); ++i) t_column[p.vars()[i]] = i;

  MPoly out;
  for (const auto& term : p.terms()) {
    std::vector<std::string> rest_vars;
    MPoly::Exponents rest_exps;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      if (p.vars()[i].rfind("t_", 0) == 0) continue;
      rest_vars.push_back(p.vars()[i]);
      rest_exps.push_back(term.exps[i]);
    }
    MPoly product = MPoly::from_terms(rest_vars, {{rest_exps, term.coeff}});
    for (const auto& [label, n] : counts) {
      std::uint32_t k = 0;
      auto it = t_column.find(label_variable("t", label));
      if (it != t_column.end()) k = term.exps[it->second];
      if (k > n) throw DivisionError("label exponent exceeds edge count for label '" + label + "'");
      product *= num(label).pow(k) * den(label).pow(static_cast<std::uint32_t>(n - k));
    }
    out += product;
  }
  return out;
}

template <class Fn>
void for_each_subset(const Multigraph& g, Fn&& fn) {
  if (g.edge_count() > 30) throw GraphError("subset enumeration is limited to 30 edges");
  const detail::EdgeMask total = detail::EdgeMask{1} << g.edge_count();
  for (detail::EdgeMask s = 0; s < total; ++s) fn(s);
}

}  // namespace

MPoly sokal_from_xi(const MPoly& xi_of_g) {
  return substitute(xi_of_g, {{"x", var("q")}, {"y", var("v")}, {"z", MPoly(0)}});
}

MPoly sokal(const Multigraph& g, const XiOptions& options) { return sokal_from_xi(xi(g, options)); }

MPoly sokal_labeled(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options) {
  std::map<std::string, MPoly> bindings = {{"x", var("q")}, {"y", MPoly(1)}, {"z", MPoly(0)}};
  for (const auto& label : labels.alphabet(g)) bindings[label_variable("t", label)] = var(label_variable("v", label));
  return substitute(xi_lab(g, labels, options), bindings);
}

MPoly tutte_from_xi(const Multigraph& g, const MPoly& xi_of_g) {
  const MPoly xm = var("x") - 1;
  const MPoly ym = var("y") - 1;
  const MPoly z = substitute(xi_of_g, {{"x", xm * ym}, {"y", ym}, {"z", MPoly(0)}});
  const auto k = static_cast<std::uint32_t>(component_count(g));
  return exact_divide(z, xm.pow(k) * ym.pow(static_cast<std::uint32_t>(g.vertex_count())));
}

MPoly tutte(const Multigraph& g, const XiOptions& options) { return tutte_from_xi(g, xi(g, options)); }

MPoly chromatic(const Multigraph& g, const XiOptions& options) {
  return substitute(xi(g, options), {{"x", var("lambda")}, {"y", MPoly(-1)}, {"z", MPoly(0)}});
}

MPoly matching(const Multigraph& g, const XiOptions& options) {
  return substitute(xi(g, options), {{"y", MPoly(0)}, {"z", var("y")}});
}

MPoly matching_generating(const Multigraph& g, const XiOptions& options) {
  return substitute(xi(g, options), {{"x", MPoly(1)}, {"y", MPoly(0)}, {"z", var("x")}});
}

MPoly matching_defect(const Multigraph& g, const XiOptions& options) {
  return substitute(xi(g, options), {{"y", MPoly(0)}, {"z", MPoly(-1)}});
}

MPoly dpt_from_xi(const MPoly& xi_of_g) {
  return substitute(xi_of_g, {{"y", MPoly(-1)}, {"z", var("x") - var("y")}});
}

MPoly dpt(const Multigraph& g, const XiOptions& options) { return dpt_from_xi(xi(g, options)); }

MPoly vertex_cover(const Multigraph& g, const XiOptions& options) {
  const MPoly tau = var("tau");
  return substitute(xi(g, options), {{"x", tau + 1}, {"y", MPoly(-1)}, {"z", tau}});
}

MPoly independence(const Multigraph& g, const XiOptions& options) {
  const MPoly covers = vertex_cover(g, options);
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<std::pair<MPoly::Exponents, Integer>> terms;
  for (const auto& t : covers.terms()) {
    const std::uint32_t k = t.exps.empty() ? 0 : t.exps[0];
    terms.push_back({{n - k}, t.coeff});
  }
  return MPoly::from_terms({"u"}, terms);
}

MPoly heilmann_lieb(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options) {
  return substitute(xi_lab(g, labels, options), {{"x", MPoly(1)}, {"y", MPoly(0)}, {"z", MPoly(1)}});
}

Rational heilmann_lieb_weighted(const Multigraph& g, const std::vector<Rational>& vertex_weight,
                                const std::map<EdgeId, Rational>& edge_weight) {
  if (vertex_weight.size() != g.vertex_count()) throw std::invalid_argument("one vertex weight per vertex required");
  const EdgeLabeling labels = EdgeLabeling::distinct(g);
  std::map<std::string, Rational> point;
  for (const Edge& e : g.edges()) {
    auto it = edge_weight.find(e.id);
    if (it == edge_weight.end()) throw std::invalid_argument("missing weight for edge " + std::to_string(e.id.value));
    point[label_variable("t", labels.at(e.id))] = it->second * vertex_weight[e.u] * vertex_weight[e.v];
  }
  return evaluate(heilmann_lieb(g, labels), point);
}

MPoly zaslavsky(const Multigraph& g, const EdgeLabeling& labels) {
  labels.require_total(g);
  const MPoly xm = var("x") - 1;
  const MPoly ym = var("y") - 1;
  const std::size_t n = g.vertex_count();
  const std::size_t rank_e = n - detail::count_components(g, (detail::EdgeMask{1} << g.edge_count()) - 1);
  const auto edges = g.edges();
  MPoly sum;
  for_each_subset(g, [&](detail::EdgeMask s) {
    const std::size_t rank_s = n - detail::count_components(g, s);
    MPoly term = xm.pow(static_cast<std::uint32_t>(rank_e - rank_s)) *
                 ym.pow(static_cast<std::uint32_t>(std::popcount(s) - rank_s));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string& label = labels.at(edges[i].id);
      term *= var(label_variable(s >> i & 1 ? "x" : "y", label));
    }
    sum += term;
  });
  return sum;
}

MPoly zaslavsky_via_xi(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options) {
  const MPoly xm = var("x") - 1;
  const MPoly ym = var("y") - 1;
  const MPoly shifted = substitute(xi_lab(g, labels, options), {{"x", xm * ym}, {"y", ym}, {"z", MPoly(0)}});
  const MPoly cleared = clear_label_fractions(
      shifted, label_counts(g, labels), [](const std::string& l) { return var(label_variable("x", l)); },
      [](const std::string& l) { return var(label_variable("y", l)); });
  const auto k = static_cast<std::uint32_t>(component_count(g));
  return exact_divide(cleared, xm.pow(k) * ym.pow(static_cast<std::uint32_t>(g.vertex_count())));
}

MPoly chain(const Multigraph& g, const EdgeLabeling& labels) {
  labels.require_total(g);
  const MPoly w = 1 - var("omega");
  const std::size_t n = g.vertex_count();
  const auto edges = g.edges();
  MPoly sum;
  for_each_subset(g, [&](detail::EdgeMask s) {
    const std::size_t rank_s = n - detail::count_components(g, s);
    MPoly term = w.pow(static_cast<std::uint32_t>(std::popcount(s) - rank_s));
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!(s >> i & 1)) term *= var(label_variable("u", labels.at(edges[i].id)));
    sum += term;
  });
  return sum;
}

MPoly chain_via_xi(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options) {
  const MPoly w = 1 - var("omega");
  const MPoly shifted = substitute(xi_lab(g, labels, options), {{"x", w}, {"y", MPoly(1)}, {"z", MPoly(0)}});
  const MPoly cleared = clear_label_fractions(
      shifted, label_counts(g, labels), [&](const std::string&) { return w; },
      [](const std::string& l) { return var(label_variable("u", l)); });
  return exact_divide(cleared, w.pow(static_cast<std::uint32_t>(g.vertex_count())));
}

MPoly noble_welsh_u(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x_" + std::to_string(i));
  vars.push_back("y");
  const auto edges = g.edges();
  std::map<MPoly::Exponents, Integer> counts;
  for_each_subset(g, [&](detail::EdgeMask s) {
    DisjointSets sets(n);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (s >> i & 1) sets.unite(edges[i].u, edges[i].v);
    std::vector<std::size_t> size(n, 0);
    for (std::size_t v = 0; v < n; ++v) ++size[sets.find(v)];
    MPoly::Exponents e(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (size[v] > 0) ++e[size[v] - 1];
    const std::size_t rank = n - sets.set_count();
    e[n] = static_cast<std::uint32_t>(static_cast<std::size_t>(std::popcount(s)) - rank);
    counts[e] += 1;
  });
  return MPoly::from_terms(vars, {counts.begin(), counts.end()});
}

const std::vector<std::string>& specialization_names() {
  static const std::vector<std::string> names = {
      "sokal", "tutte",        "chromatic",     "matching",  "matching-gen", "matching-defect", "dpt",
      "vertex-cover", "independence", "heilmann-lieb", "zaslavsky", "chain",        "noble-welsh-u"};
  return names;
}

bool is_labeled_specialization(const std::string& name) {
  return name == "heilmann-lieb" || name == "zaslavsky" || name == "chain";
}

MPoly specialize(const std::string& name, const Multigraph& g, const EdgeLabeling* labels,
                 const XiOptions& options) {
  EdgeLabeling own;
  if (is_labeled_specialization(name) && !labels) {
    own = EdgeLabeling::distinct(g);
    labels = &own;
  }
  if (name == "sokal") return labels ? sokal_labeled(g, *labels, options) : sokal(g, options);
  if (name == "tutte") return tutte(g, options);
  if (name == "chromatic") return chromatic(g, options);
  if (name == "matching") return matching(g, options);
  if (name == "matching-gen") return matching_generating(g, options);
  if (name == "matching-defect") return matching_defect(g, options);
  if (name == "dpt") return dpt(g, options);
  if (name == "vertex-cover") return vertex_cover(g, options);
  if (name == "independence") return independence(g, options);
  if (name == "heilmann-lieb") return heilmann_lieb(g, *labels, options);
  if (name == "zaslavsky") return zaslavsky_via_xi(g, *labels, options);
  if (name == "chain") return chain_via_xi(g, *labels, options);
  if (name == "noble-welsh-u") return noble_welsh_u(g);
  throw std::invalid_argument("unknown polynomial '" + name + "'");
}

}  // namespace eep
