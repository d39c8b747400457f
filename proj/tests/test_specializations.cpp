#include "doctest.h"

#include "eep/specializations.hpp"
#include "eep/verify.hpp"

using namespace eep;

namespace {
MPoly P(const char* text) { return MPoly::parse(text); }
const Multigraph K2 = Multigraph::from_edge_list(2, {{0, 1}});
const Multigraph P3 = Multigraph::from_edge_list(3, {{0, 1}, {1, 2}});
const Multigraph C3 = Multigraph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
const Multigraph LOOP = Multigraph::from_edge_list(1, {{0, 0}});
}  // namespace

TEST_SUITE("specializations") {
  TEST_CASE("sokal") {
    CHECK(sokal(K2) == P("q^2 + q*v"));
    CHECK(sokal(LOOP) == P("q + q*v"));
    CHECK(sokal(Multigraph()) == MPoly(1));
    CHECK(sokal_labeled(K2, EdgeLabeling::uniform(K2, "a")) == P("q^2 + q*v_a"));
  }

  TEST_CASE("tutte") {
    CHECK(tutte(K2) == P("x"));
    CHECK(tutte(LOOP) == P("y"));
    CHECK(tutte(C3) == P("x^2 + x + y"));
    CHECK(tutte(Multigraph(3)) == MPoly(1));
    CHECK(tutte(disjoint_union(C3, LOOP)) == P("x^2*y + x*y + y^2"));
  }

  TEST_CASE("chromatic") {
    CHECK(chromatic(P3).to_string() == "l^3 - 2*l^2 + l");
    CHECK(chromatic(C3) == P("l^3 - 3*l^2 + 2*l"));
    CHECK(chromatic(LOOP).is_zero());
  }

  TEST_CASE("matching family") {
    CHECK(matching(K2) == P("x^2 + y"));
    CHECK(matching(P3) == P("x^3 + 2*x*y"));
    CHECK(matching(LOOP) == P("x + y"));
    CHECK(matching_generating(P3) == P("1 + 2*x"));
    CHECK(matching_defect(P3) == P("x^3 - 2*x"));
  }

  TEST_CASE("dpt") {
    CHECK(dpt(K2) == P("x^2 - y"));
    CHECK(dpt(P3) == P("x^3 - 2*x*y + y"));
    CHECK(dpt(LOOP) == P("x - y"));
    CHECK(evaluate(dpt(P3), {{"x", 3}, {"y", 2}}) == 17);
  }

  TEST_CASE("covers and independent sets") {
    CHECK(vertex_cover(P3) == P("tau^3 + 3*tau^2 + tau"));
    CHECK(independence(P3) == P("u^2 + 3*u + 1"));
    CHECK(vertex_cover(LOOP) == P("tau"));
    CHECK(independence(LOOP) == MPoly(1));
    CHECK(independence(Multigraph(2)) == P("u^2 + 2*u + 1"));
  }

  TEST_CASE("heilmann-lieb") {
    const auto lab = EdgeLabeling::cycling(P3, {"a", "b"});
    CHECK(heilmann_lieb(P3, lab) == P("1 + t_a + t_b"));
    CHECK(heilmann_lieb_weighted(K2, {2, 3}, {{EdgeId{0}, Rational(1, 2)}}) == 4);
    CHECK_THROWS(heilmann_lieb_weighted(K2, {2}, {{EdgeId{0}, 1}}));
  }

  TEST_CASE("zaslavsky and chain") {
    const auto a = EdgeLabeling::uniform(K2, "a");
    CHECK(zaslavsky(K2, a) == P("x*y_a - y_a + x_a"));
    CHECK(zaslavsky_via_xi(K2, a) == zaslavsky(K2, a));
    CHECK(chain(K2, a) == P("u_a + 1"));
    const auto c = EdgeLabeling::uniform(C3, "a");
    CHECK(chain(C3, c) == P("u_a^3 + 3*u_a^2 + 3*u_a + 1 - omega"));
    CHECK(chain_via_xi(C3, c) == chain(C3, c));
    // Uniform labels reduce the normal function to the Tutte polynomial.
    for (const auto& entry : corpus()) {
      const auto lab = EdgeLabeling::uniform(entry.graph, "s");
      const MPoly r = substitute(zaslavsky_via_xi(entry.graph, lab), {{"x_s", MPoly(1)}, {"y_s", MPoly(1)}});
      CHECK_MESSAGE(r == tutte(entry.graph), entry.name);
    }
  }

  TEST_CASE("noble-welsh U") {
    CHECK(noble_welsh_u(K2) == P("x_1^2 + x_2"));
    CHECK(noble_welsh_u(P3) == P("x_1^3 + 2*x_1*x_2 + x_3"));
    CHECK(noble_welsh_u(C3) == P("x_1^3 + 3*x_1*x_2 + 3*x_3 + x_3*y"));
  }

  TEST_CASE("dispatch") {
    CHECK(specialization_names().size() == 13);
    for (const auto& name : specialization_names()) CHECK_NOTHROW(specialize(name, C3, nullptr));
    CHECK(specialize("tutte", C3, nullptr) == tutte(C3));
    CHECK(specialize("heilmann-lieb", P3, nullptr) == P("1 + t_e0 + t_e1"));
    const auto lab = EdgeLabeling::uniform(K2, "a");
    CHECK(specialize("sokal", K2, &lab) == P("q^2 + q*v_a"));
    CHECK_THROWS_AS(specialize("jones", C3, nullptr), std::invalid_argument);
    CHECK(is_labeled_specialization("chain"));
    CHECK_FALSE(is_labeled_specialization("tutte"));
  }
}
