#pragma once

#include <map>
#include <string>
#include <vector>

#include "eep/labeling.hpp"
#include "eep/multigraph.hpp"
#include "eep/poly.hpp"
#include "eep/xi.hpp"

namespace eep {

// Classical graph polynomials obtained from xi / xi_lab by substitution.
// Functions taking `xi_of_g` reuse an already computed xi(G).

/// Z(G; q, v) = xi(G; q, v, 0).
MPoly sokal(const Multigraph& g, const XiOptions& options = {});
MPoly sokal_from_xi(const MPoly& xi_of_g);
/// Z_lab(G; q, v_λ) = xi_lab(G; q, 1, 0, t_λ = v_λ).
MPoly sokal_labeled(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options = {});

/// T(G; x, y) = (x-1)^-k(E) (y-1)^-|V| xi(G; (x-1)(y-1), y-1, 0).
/// Throws DivisionError if the prefactor does not divide exactly.
MPoly tutte(const Multigraph& g, const XiOptions& options = {});
MPoly tutte_from_xi(const Multigraph& g, const MPoly& xi_of_g);

/// chi(G; lambda) = xi(G; lambda, -1, 0).
MPoly chromatic(const Multigraph& g, const XiOptions& options = {});

/// M(G; x, y) = sum_i a_i x^(n-2i) y^i = xi(G; x, 0, y).
MPoly matching(const Multigraph& g, const XiOptions& options = {});
/// g(G; x) = xi(G; 1, 0, x).
MPoly matching_generating(const Multigraph& g, const XiOptions& options = {});
/// mu(G; x) = xi(G; x, 0, -1).
MPoly matching_defect(const Multigraph& g, const XiOptions& options = {});

/// P(G; x, y) = xi(G; x, -1, x - y): colourings with x colours of which y are proper.
MPoly dpt(const Multigraph& g, const XiOptions& options = {});
MPoly dpt_from_xi(const MPoly& xi_of_g);

/// Sum over vertex covers C of tau^|C|, as xi(G; tau + 1, -1, tau) = P(G; tau + 1, 1).
/// A loop forces its vertex into every cover.
MPoly vertex_cover(const Multigraph& g, const XiOptions& options = {});
/// Sum over independent sets S of u^|S|: vertex_cover reversed over length |V|.
MPoly independence(const Multigraph& g, const XiOptions& options = {});

/// Sum over matchings M of prod t_c(e), as xi_lab(G; 1, 0, 1, t).
MPoly heilmann_lieb(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options = {});
/// Weighted form: each edge e = {u, v} contributes edge_weight[e] * vertex_weight[u] * vertex_weight[v].
/// Routed through heilmann_lieb with one label per edge.
Rational heilmann_lieb_weighted(const Multigraph& g, const std::vector<Rational>& vertex_weight,
                                const std::map<EdgeId, Rational>& edge_weight);

/// Zaslavsky's normal function R(G, c) in x, y, x_λ, y_λ as the defining subset sum.
MPoly zaslavsky(const Multigraph& g, const EdgeLabeling& labels);
/// R(G, c) through xi_lab with t_λ = x_λ / y_λ, denominators cleared by prod y_c(e).
MPoly zaslavsky_via_xi(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options = {});

/// Chain polynomial Ch(G; omega, u_λ) as the subset sum over S of (1-omega)^(|S|-r(S)) prod_{e not in S} u_c(e).
MPoly chain(const Multigraph& g, const EdgeLabeling& labels);
/// The same through xi_lab with v_e = (1-omega)/u_e, denominators cleared by prod u_c(e).
MPoly chain_via_xi(const Multigraph& g, const EdgeLabeling& labels, const XiOptions& options = {});

/// Noble-Welsh U(G; x_1..x_n, y) by direct enumeration of edge subsets.
MPoly noble_welsh_u(const Multigraph& g);

/// Names accepted by specialize(): sokal, tutte, chromatic, matching, matching-gen,
/// matching-defect, dpt, vertex-cover, independence, heilmann-lieb, zaslavsky,
/// chain, noble-welsh-u.
const std::vector<std::string>& specialization_names();
bool is_labeled_specialization(const std::string& name);
/// Dispatch by name. Labeled instances use `labels` (sokal too, when given).
/// Throws std::invalid_argument for an unknown name.
MPoly specialize(const std::string& name, const Multigraph& g, const EdgeLabeling* labels,
                 const XiOptions& options = {});

}  // namespace eep
