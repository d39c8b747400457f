#include "eep/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "eep/atlas.hpp"
#include "eep/io.hpp"
#include "eep/parallel.hpp"
#include "eep/specializations.hpp"

namespace eep {

namespace {

MPoly var(const std::string& name) { return MPoly::variable(name); }

MPoly monomial(const std::string& name, std::size_t k) { return var(name).pow(static_cast<std::uint32_t>(k)); }

std::size_t components_of(const Multigraph& g, std::uint64_t subset) {
  DisjointSets sets(g.vertex_count());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (subset >> i & 1) sets.unite(edges[i].u, edges[i].v);
  return sets.set_count();
}

void require_small(const Multigraph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges) {
    throw GraphError("oracle enumeration is limited to " + std::to_string(max_edges) + " edges");
  }
}

// Calls fn(edge_mask, covered_vertex_count) for every vertex-disjoint edge set.
void for_each_matching(const Multigraph& g, const std::function<void(std::uint64_t, std::size_t)>& fn) {
  require_small(g, 63);
  const auto edges = g.edges();
  std::vector<bool> used(g.vertex_count(), false);
  std::function<void(std::size_t, std::uint64_t, std::size_t)> walk = [&](std::size_t start, std::uint64_t mask,
                                                                          std::size_t covered) {
    fn(mask, covered);
    for (std::size_t i = start; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = true;
      walk(i + 1, mask | std::uint64_t{1} << i, covered + (e.is_loop() ? 1 : 2));
      used[e.u] = used[e.v] = false;
    }
  };
  walk(0, 0, 0);
}

std::string graph_text(const Multigraph& g, const EdgeLabeling* labels = nullptr) {
  return format_edge_list(g, labels);
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  for (;;) {
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = static_cast<long>(rng() % 4) + 1;
    if (nonzero && num == 0) continue;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t h = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

MPoly tutte_rec(const Multigraph& g) {
  if (g.edge_count() == 0) return MPoly(1);
  const Edge& e = g.edges().front();
  if (e.is_loop()) return var("y") * tutte_rec(delete_edge(g, e.id));
  if (is_bridge(g, e.id)) return var("x") * tutte_rec(contract_edge(g, e.id));
  return tutte_rec(delete_edge(g, e.id)) + tutte_rec(contract_edge(g, e.id));
}

// --- report helpers -------------------------------------------------------

struct Recorder {
  VerifyReport& report;
  const std::string& name;
  const Multigraph& g;

  void equal(const std::string& check, const MPoly& got, const MPoly& want, nlohmann::json params = {}) {
    add(check, got == want, params, [&](nlohmann::json& d) {
      d["got"] = got.to_string();
      d["want"] = want.to_string();
    });
  }
  void equal(const std::string& check, const Rational& got, const Rational& want, nlohmann::json params = {}) {
    add(check, got == want, params, [&](nlohmann::json& d) {
      d["got"] = to_string(got);
      d["want"] = to_string(want);
    });
  }
  template <class Fill>
  void add(const std::string& check, bool pass, nlohmann::json params, Fill fill) {
    Outcome o{name, check, pass, nlohmann::json::object()};
    o.detail["graph"] = graph_text(g);
    if (!params.is_null()) o.detail["params"] = std::move(params);
    if (!pass) fill(o.detail);
    report.outcomes.push_back(std::move(o));
  }
  template <class Body>
  void guarded(const std::string& check, Body body) {
    try {
      body();
    } catch (const std::exception& ex) {
      add(check, false, {}, [&](nlohmann::json& d) { d["error"] = ex.what(); });
    }
  }
};

// --- per-graph suites ----------------------------------------------------

void expansion_checks(Recorder& r) {
  r.guarded("xi=expansion", [&] { r.equal("xi=expansion", xi(r.g), xi_expansion(r.g)); });
  for (const auto& [tag, labels] : {std::pair{std::string("cycling"), EdgeLabeling::cycling(r.g, {"a", "b"})},
                                    std::pair{std::string("distinct"), EdgeLabeling::distinct(r.g)}}) {
    const std::string check = "xi_lab=expansion[" + tag + "]";
    r.guarded(check, [&] { r.equal(check, xi_lab(r.g, labels), xi_lab_expansion(r.g, labels)); });
  }
}

void specialization_checks(Recorder& r, std::uint64_t seed) {
  const Multigraph& g = r.g;
  XiOptions options;
  options.memo = std::make_shared<MemoTable>();
  const MPoly x = xi(g, options);
  const EdgeLabeling labels = EdgeLabeling::cycling(g, {"a", "b"});

  r.equal("sokal", sokal_from_xi(x), oracle_sokal(g));
  r.equal("sokal-labeled", sokal_labeled(g, labels, options), oracle_sokal_labeled(g, labels));
  r.guarded("tutte", [&] { r.equal("tutte", tutte_from_xi(g, x), oracle_tutte(g)); });

  const MPoly chi = chromatic(g, options);
  for (unsigned lambda = 0; lambda <= 4; ++lambda) {
    r.equal("chromatic", evaluate(chi, {{"lambda", lambda}}), Rational(oracle_colorings(g, lambda, lambda)),
            {{"lambda", lambda}});
  }

  r.equal("matching", matching(g, options), oracle_matchings(g));
  r.equal("matching-gen", matching_generating(g, options), oracle_matching_generating(g));
  r.equal("matching-defect", matching_defect(g, options), oracle_matching_defect(g));

  const MPoly p = dpt_from_xi(x);
  for (unsigned cx = 0; cx <= 3; ++cx) {
    for (unsigned cy = 0; cy <= cx; ++cy) {
      r.equal("dpt", evaluate(p, {{"x", cx}, {"y", cy}}), Rational(oracle_colorings(g, cx, cy)),
              {{"x", cx}, {"y", cy}});
    }
  }

  r.equal("heilmann-lieb[cycling]", heilmann_lieb(g, labels, options), oracle_heilmann_lieb(g, labels));
  const EdgeLabeling distinct = EdgeLabeling::distinct(g);
  r.equal("heilmann-lieb[distinct]", heilmann_lieb(g, distinct, options), oracle_heilmann_lieb(g, distinct));
  std::mt19937_64 rng(seed);
  std::vector<Rational> vertex_weight;
  std::map<EdgeId, Rational> edge_weight;
  nlohmann::json params = {{"vertex", nlohmann::json::array()}, {"edge", nlohmann::json::array()}};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vertex_weight.push_back(random_rational(rng, false));
    params["vertex"].push_back(to_string(vertex_weight.back()));
  }
  for (const Edge& e : g.edges()) {
    edge_weight[e.id] = random_rational(rng, false);
    params["edge"].push_back(to_string(edge_weight[e.id]));
  }
  r.equal("heilmann-lieb[weighted]", heilmann_lieb_weighted(g, vertex_weight, edge_weight),
          oracle_heilmann_lieb_weighted(g, vertex_weight, edge_weight), params);

  r.guarded("zaslavsky", [&] { r.equal("zaslavsky", zaslavsky_via_xi(g, labels, options), zaslavsky(g, labels)); });
  r.guarded("chain", [&] { r.equal("chain", chain_via_xi(g, labels, options), chain(g, labels)); });
}

void derived_checks(Recorder& r) {
  r.equal("vertex-cover", vertex_cover(r.g), oracle_vertex_covers(r.g));
  r.equal("independence", independence(r.g), oracle_independent_sets(r.g));
}

void boundary_checks(Recorder& r) {
  const MPoly p = xi(r.g);
  const auto n = r.g.vertex_count();
  r.equal("xi(x,0,0)=x^|V|", substitute(p, {{"y", MPoly(0)}, {"z", MPoly(0)}}), monomial("x", n));
  r.equal("xi(1,1,0)=2^|E|", evaluate(p, {{"x", 1}, {"y", 1}, {"z", 0}}),
          Rational(Integer(1) << static_cast<mp_bitcnt_t>(r.g.edge_count())));
  r.equal("xi(1,1,1)=#pairs", evaluate(p, {{"x", 1}, {"y", 1}, {"z", 1}}), Rational(count_disjoint_pairs(r.g)));
  const Integer lead = p.coefficient({{"x", static_cast<std::uint32_t>(n)}});
  r.add("coeff(x^|V|)=1", lead == 1, {}, [&](nlohmann::json& d) { d["got"] = lead.get_str(); });
}

void labeled_checks(Recorder& r, const SuiteOptions& options, std::uint64_t seed, VerifyReport& report) {
  const Multigraph& g = r.g;
  const EdgeLabeling labels = EdgeLabeling::cycling(g, {"a", "b", "c"});
  std::mt19937_64 rng(seed);

  std::map<std::string, LabelParams> cond1, cond2;
  const Rational y = random_rational(rng, true), z = random_rational(rng, true);
  for (const auto& label : {"a", "b", "c"}) {
    cond1[label] = {random_rational(rng, true) + 2, random_rational(rng, true), 0};
    const Rational t = random_rational(rng, true);
    cond2[label] = {1, y * t, z * t};
  }
  const Rational x = random_rational(rng, false);
  report.append(check_labeled_conditions(g, labels, x, cond1, options.trials, mix(seed, 1), r.name, "condition-1"));
  report.append(check_labeled_conditions(g, labels, x, cond2, options.trials, mix(seed, 2), r.name, "condition-2"));

  // Condition 1 on this graph, condition 2 on the witness path, as one graph.
  const Multigraph w = confluence_witness();
  const Multigraph both = disjoint_union(g, w);
  const EdgeLabeling mixed = disjoint_union_labeling(g, EdgeLabeling::cycling(g, {"p", "q"}),
                                                     EdgeLabeling::cycling(w, {"r", "s"}));
  std::map<std::string, LabelParams> params = {{"p", cond1["a"]}, {"q", cond1["b"]}, {"r", cond2["a"]},
                                               {"s", cond2["b"]}};
  report.append(check_labeled_conditions(both, mixed, x, params, options.trials, mix(seed, 3), r.name + "+witness",
                                         "mixed-conditions"));
}

nlohmann::json params_json(const std::map<std::string, LabelParams>& params) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [label, p] : params) j[label] = {to_string(p.w), to_string(p.y), to_string(p.z)};
  return j;
}

}  // namespace

// --- oracles ---------------------------------------------------------------

MPoly oracle_sokal(const Multigraph& g) {
  require_small(g, 30);
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  std::map<MPoly::Exponents, Integer> counts;
  for (std::uint64_t s = 0; s < total; ++s) {
    counts[{static_cast<std::uint32_t>(components_of(g, s)), static_cast<std::uint32_t>(std::popcount(s))}] += 1;
  }
  return MPoly::from_terms({"q", "v"}, {counts.begin(), counts.end()});
}

MPoly oracle_sokal_labeled(const Multigraph& g, const EdgeLabeling& labels) {
  require_small(g, 30);
  const auto edges = g.edges();
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  MPoly sum;
  for (std::uint64_t s = 0; s < total; ++s) {
    MPoly term = monomial("q", components_of(g, s));
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (s >> i & 1) term *= var(label_variable("v", labels.at(edges[i].id)));
    sum += term;
  }
  return sum;
}

MPoly oracle_tutte(const Multigraph& g) { return tutte_rec(g); }

MPoly oracle_matchings(const Multigraph& g) {
  std::map<MPoly::Exponents, Integer> counts;
  const auto n = g.vertex_count();
  for_each_matching(g, [&](std::uint64_t m, std::size_t covered) {
    counts[{static_cast<std::uint32_t>(n - covered), static_cast<std::uint32_t>(std::popcount(m))}] += 1;
  });
  return MPoly::from_terms({"x", "y"}, {counts.begin(), counts.end()});
}

MPoly oracle_matching_generating(const Multigraph& g) {
  std::map<MPoly::Exponents, Integer> counts;
  for_each_matching(g, [&](std::uint64_t m, std::size_t) { counts[{static_cast<std::uint32_t>(std::popcount(m))}] += 1; });
  return MPoly::from_terms({"x"}, {counts.begin(), counts.end()});
}

MPoly oracle_matching_defect(const Multigraph& g) {
  std::map<MPoly::Exponents, Integer> counts;
  const auto n = g.vertex_count();
  for_each_matching(g, [&](std::uint64_t m, std::size_t covered) {
    counts[{static_cast<std::uint32_t>(n - covered)}] += std::popcount(m) % 2 == 0 ? 1 : -1;
  });
  return MPoly::from_terms({"x"}, {counts.begin(), counts.end()});
}

MPoly oracle_heilmann_lieb(const Multigraph& g, const EdgeLabeling& labels) {
  const auto edges = g.edges();
  MPoly sum;
  for_each_matching(g, [&](std::uint64_t m, std::size_t) {
    MPoly term(1);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (m >> i & 1) term *= var(label_variable("t", labels.at(edges[i].id)));
    sum += term;
  });
  return sum;
}

Rational oracle_heilmann_lieb_weighted(const Multigraph& g, const std::vector<Rational>& vertex_weight,
                                       const std::map<EdgeId, Rational>& edge_weight) {
  if (vertex_weight.size() != g.vertex_count()) throw std::invalid_argument("one vertex weight per vertex required");
  const auto edges = g.edges();
  Rational sum = 0;
  for_each_matching(g, [&](std::uint64_t m, std::size_t) {
    Rational term = 1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(m >> i & 1)) continue;
      term *= edge_weight.at(edges[i].id) * vertex_weight[edges[i].u] * vertex_weight[edges[i].v];
    }
    sum += term;
  });
  return sum;
}

Integer oracle_colorings(const Multigraph& g, unsigned x, unsigned y) {
  if (y > x) throw std::invalid_argument("proper colours must not exceed total colours");
  const std::size_t n = g.vertex_count();
  if (n == 0) return 1;
  if (x == 0) return 0;
  std::vector<unsigned> colour(n, 0);
  Integer count = 0;
  for (;;) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (colour[e.u] == colour[e.v] && colour[e.u] < y) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++colour[i] == x) colour[i++] = 0;
    if (i == n) break;
  }
  return count;
}

MPoly oracle_vertex_covers(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 30) throw GraphError("vertex subset enumeration is limited to 30 vertices");
  std::map<MPoly::Exponents, Integer> counts;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    const bool covers = std::all_of(g.edges().begin(), g.edges().end(),
                                    [&](const Edge& e) { return (c >> e.u & 1) || (c >> e.v & 1); });
    if (covers) counts[{static_cast<std::uint32_t>(std::popcount(c))}] += 1;
  }
  return MPoly::from_terms({"tau"}, {counts.begin(), counts.end()});
}

MPoly oracle_independent_sets(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 30) throw GraphError("vertex subset enumeration is limited to 30 vertices");
  std::map<MPoly::Exponents, Integer> counts;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const bool independent = std::none_of(g.edges().begin(), g.edges().end(),
                                          [&](const Edge& e) { return (s >> e.u & 1) && (s >> e.v & 1); });
    if (independent) counts[{static_cast<std::uint32_t>(std::popcount(s))}] += 1;
  }
  return MPoly::from_terms({"u"}, {counts.begin(), counts.end()});
}

Integer count_disjoint_pairs(const Multigraph& g) {
  require_small(g, 20);
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<int> side(m, 0);  // 0 unused, 1 in A, 2 in B
  Integer count = 0;
  for (;;) {
    std::vector<int> owner(g.vertex_count(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (side[i] == 0) continue;
      for (Vertex v : {edges[i].u, edges[i].v}) {
        if (owner[v] != 0 && owner[v] != side[i]) ok = false;
        owner[v] = side[i];
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < m && ++side[i] == 3) side[i++] = 0;
    if (i == m) break;
  }
  return count;
}

// --- corpus ------------------------------------------------------------------

std::vector<CorpusEntry> corpus(std::size_t max_vertices, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_vertices, 8); ++n) {
    for (Multigraph& g : enumerate_graphs(n, n * (n - 1) / 2)) {
      if (is_connected(g)) out.push_back({"connected:" + encode_graph6(g), std::move(g)});
    }
  }
  out.push_back({"loop", Multigraph::from_edge_list(1, {{0, 0}})});
  out.push_back({"double-loop", Multigraph::from_edge_list(1, {{0, 0}, {0, 0}})});
  out.push_back({"parallel-pair", Multigraph::from_edge_list(2, {{0, 1}, {0, 1}})});
  out.push_back({"parallel-triple", Multigraph::from_edge_list(2, {{0, 1}, {0, 1}, {0, 1}})});
  out.push_back({"loop-edge", Multigraph::from_edge_list(2, {{0, 0}, {0, 1}})});
  out.push_back({"theta", Multigraph::from_edge_list(3, {{0, 1}, {0, 1}, {0, 2}, {2, 1}})});

  std::mt19937_64 rng(seed);
  const std::size_t top = std::max<std::size_t>(1, std::min<std::size_t>(5, max_vertices));
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + rng() % top;
    const std::size_t m = rng() % 9;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t k = 0; k < m; ++k) pairs.emplace_back(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
    out.push_back({"random-" + std::to_string(i), Multigraph::from_edge_list(n, pairs)});
  }
  return out;
}

Multigraph confluence_witness() { return Multigraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}); }

// --- reports -----------------------------------------------------------------

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return !o.pass; }));
}

void VerifyReport::append(VerifyReport other) {
  for (auto& o : other.outcomes) outcomes.push_back(std::move(o));
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["checks"] = outcomes.size();
  j["failures"] = failures();
  nlohmann::json list = nlohmann::json::array();
  for (const Outcome& o : outcomes) list.push_back({{"graph", o.graph}, {"check", o.check}, {"pass", o.pass}, {"detail", o.detail}});
  j["outcomes"] = list;
  return j;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const Outcome& o : outcomes) {
    if (!o.pass) out << "FAIL " << o.check << " on " << o.graph << ": " << o.detail.dump() << '\n';
  }
  out << "suite " << suite << ": " << outcomes.size() - failures() << "/" << outcomes.size() << " checks passed\n";
  return out.str();
}

VerifyReport check_confluence(const Multigraph& g, std::size_t trials, std::uint64_t seed, const std::string& name) {
  VerifyReport report{"confluence", {}};
  Recorder r{report, name, g};
  std::optional<MPoly> first;
  std::uint64_t first_seed = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = mix(seed, i);
    XiOptions options;
    options.policy = EliminationPolicy::random(s);
    options.memoize = false;
    const MPoly p = xi(g, options);
    if (!first) {
      first = p;
      first_seed = s;
      continue;
    }
    if (p != *first) {
      r.add("order-invariance", false, {{"seeds", {first_seed, s}}}, [&](nlohmann::json& d) {
        d["values"] = {first->to_string(), p.to_string()};
      });
      return report;
    }
  }
  r.add("order-invariance", true, {{"trials", trials}, {"seed", seed}}, [](nlohmann::json&) {});
  return report;
}

VerifyReport nonconfluence_witness(std::uint64_t seed) {
  VerifyReport report{"nonconfluence", {}};
  const Multigraph g = confluence_witness();
  const std::string name = "witness";
  Recorder r{report, name, g};
  const auto e1_first = EliminationPolicy::priority({EdgeId{1}, EdgeId{2}, EdgeId{0}});
  const auto e2_first = EliminationPolicy::priority({EdgeId{2}, EdgeId{1}, EdgeId{0}});

  struct Case {
    Rational w, z;
    bool expect_equal;
  };
  for (const Case& c : {Case{2, 1, false}, Case{1, 1, true}, Case{2, 0, true}}) {
    const GeneralParams params{c.w, 1, 1, c.z};
    const Rational a = xi_general_eval(g, params, e1_first);
    const Rational b = xi_general_eval(g, params, e2_first);
    const std::string check = std::string(c.expect_equal ? "orders-agree" : "orders-differ") + "[w=" + to_string(c.w) +
                              ",z=" + to_string(c.z) + "]";
    nlohmann::json values = {{"w", to_string(c.w)}, {"x", "1"}, {"y", "1"}, {"z", to_string(c.z)},
                             {"e1_first", to_string(a)}, {"e2_first", to_string(b)}};
    Outcome o{name, check, (a == b) == c.expect_equal, {{"graph", graph_text(g)}, {"params", values}}};
    report.outcomes.push_back(std::move(o));
  }

  std::mt19937_64 rng(seed);
  const MPoly z_poly = oracle_sokal(g);
  for (int i = 0; i < 5; ++i) {
    const Rational x = random_rational(rng, false), y = random_rational(rng, false), t = random_rational(rng, true);
    const Rational lhs = xi_general_eval(g, {t, x, y, 0}, e1_first);
    Rational rhs = evaluate(z_poly, {{"q", x}, {"v", y / t}});
    for (std::size_t k = 0; k < g.edge_count(); ++k) rhs *= t;
    r.equal("z=0-identity", lhs, rhs, {{"x", to_string(x)}, {"y", to_string(y)}, {"t", to_string(t)}});
  }
  return report;
}

VerifyReport check_labeled_conditions(const Multigraph& g, const EdgeLabeling& labels, const Rational& x,
                                      const std::map<std::string, LabelParams>& params, std::size_t trials,
                                      std::uint64_t seed, const std::string& name, const std::string& check) {
  VerifyReport report{"labeled", {}};
  Outcome o{name, check, true, nlohmann::json::object()};
  o.detail["graph"] = graph_text(g, &labels);
  o.detail["params"] = {{"x", to_string(x)}, {"labels", params_json(params)}, {"trials", trials}, {"seed", seed}};
  std::optional<Rational> first;
  std::uint64_t first_seed = 0;
  for (std::size_t i = 0; i < trials && o.pass; ++i) {
    const std::uint64_t s = mix(seed, i);
    const Rational v = xi_lab_general_eval(g, labels, x, params, EliminationPolicy::random(s));
    if (!first) {
      first = v;
      first_seed = s;
    } else if (v != *first) {
      o.pass = false;
      o.detail["seeds"] = {first_seed, s};
      o.detail["values"] = {to_string(*first), to_string(v)};
    }
  }
  report.outcomes.push_back(std::move(o));
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"expansion", "confluence",  "nonconfluence", "specializations",
                                                 "derived",   "labeled",     "boundary",      "all"};
  return names;
}

VerifyReport run_suite(const std::string& suite, const SuiteOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  VerifyReport total{suite, {}};
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      if (name != "all") total.append(run_suite(name, options));
    }
    return total;
  }
  if (suite == "nonconfluence") {
    total.append(nonconfluence_witness(options.seed));
    return total;
  }

  const auto entries = corpus(options.max_vertices, options.seed);
  std::vector<VerifyReport> parts(entries.size());
  parallel_for(entries.size(), options.threads, [&](std::size_t i) {
    const CorpusEntry& entry = entries[i];
    VerifyReport& part = parts[i];
    part.suite = suite;
    Recorder r{part, entry.name, entry.graph};
    const std::uint64_t seed = mix(options.seed, i + 1000);
    if (suite == "expansion") expansion_checks(r);
    if (suite == "confluence") part.append(check_confluence(entry.graph, options.trials, seed, entry.name));
    if (suite == "specializations") specialization_checks(r, seed);
    if (suite == "derived") derived_checks(r);
    if (suite == "boundary") boundary_checks(r);
    if (suite == "labeled") labeled_checks(r, options, seed, part);
  });
  for (auto& part : parts) total.append(std::move(part));
  return total;
}

}  // namespace eep
