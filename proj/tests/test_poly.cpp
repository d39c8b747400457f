#include "doctest.h"

#include <random>

#include "eep/poly.hpp"

using namespace eep;

namespace {
MPoly v(const char* name) { return MPoly::variable(name); }

MPoly random_poly(std::mt19937_64& rng) {
  static const char* names[] = {"x", "y", "z", "t_a"};
  MPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) {
    MPoly m(static_cast<long>(rng() % 11) - 5);
    for (const char* n : names) m *= v(n).pow(static_cast<std::uint32_t>(rng() % 3));
    p += m;
  }
  return p;
}
}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("canonical text") {
    CHECK(MPoly().to_string() == "0");
    CHECK(MPoly(-3).to_string() == "-3");
    const MPoly p = v("x").pow(3) + 2 * v("x").pow(2) * v("y") - v("z");
    CHECK(p.to_string() == "x^3 + 2*x^2*y - z");
    CHECK((v("lambda").pow(2) - v("lambda")).to_string() == "l^2 - l");
    CHECK((v("z") + v("y") + v("x")).to_string() == "x + y + z");
    CHECK((v("t_10") + v("t_2") + v("t_b")).to_string() == "t_2 + t_10 + t_b");
  }

  TEST_CASE("parse round trip") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const MPoly p = random_poly(rng);
      CHECK(MPoly::parse(p.to_string()) == p);
      CHECK(MPoly::from_json(p.to_json()) == p);
    }
    CHECK(MPoly::parse("l^3 - 2*l^2 + l") == v("lambda").pow(3) - 2 * v("lambda").pow(2) + v("lambda"));
    CHECK_THROWS_AS(MPoly::parse("x +"), ParseError);
    CHECK_THROWS_AS(MPoly::parse("2**x"), ParseError);
  }

  TEST_CASE("ring axioms") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == MPoly());
      CHECK(a * 1 == a);
      CHECK((a * 0).is_zero());
    }
  }

  TEST_CASE("degrees and coefficients") {
    const MPoly p = MPoly::parse("3*x^2*y + 5*z^4 - 7");
    CHECK(p.degree_in("x") == 2);
    CHECK(p.degree_in("q") == 0);
    CHECK(p.total_degree() == 4);
    CHECK(p.coefficient({{"x", 2}, {"y", 1}}) == 3);
    CHECK(p.coefficient({}) == -7);
    CHECK(p.coefficient({{"x", 1}}) == 0);
  }

  TEST_CASE("substitution is simultaneous") {
    const MPoly p = MPoly::parse("x^2 + y");
    CHECK(substitute(p, {{"x", v("y")}, {"y", v("x")}}) == MPoly::parse("y^2 + x"));
    CHECK(substitute(MPoly::parse("x^0*y + x"), {{"x", MPoly(0)}}) == v("y"));
    CHECK(substitute(MPoly(1), {{"x", MPoly(0)}}) == MPoly(1));
  }

  TEST_CASE("evaluation") {
    const MPoly p = MPoly::parse("x^2 - y");
    CHECK(evaluate(p, {{"x", Rational(1, 2)}, {"y", 3}}) == Rational(-11, 4));
    CHECK_THROWS_AS(evaluate(p, {{"x", 1}}), std::invalid_argument);
  }

  TEST_CASE("exact division") {
    const MPoly d = MPoly::parse("x - 1");
    const MPoly q = MPoly::parse("x^2*y + 3*z - 2");
    CHECK(exact_divide(q * d, d) == q);
    CHECK(exact_divide(MPoly(), d).is_zero());
    CHECK_THROWS_AS(exact_divide(q * d + 1, d), DivisionError);
    CHECK_THROWS_AS(exact_divide(q, MPoly()), DivisionError);
  }

  TEST_CASE("rationals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
  }
}
