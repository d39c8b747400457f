#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace eep {

class PolyBuilder;

using Integer = mpz_class;
using Rational = mpq_class;

/// Fixed total order on variable names: x, y, z, q, v, lambda, tau, u, omega, w,
/// then the indexed families t_*, u_*, v_*, x_*, y_* (natural order on the index),
/// then anything else alphabetically.
bool variable_less(std::string_view a, std::string_view b);

/// Thrown by exact_divide when the divisor does not divide exactly.
class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Values are normalized: the variable list holds exactly the variables that
/// occur with a positive exponent, sorted by variable_less; terms are sorted
/// graded-lex descending and carry nonzero coefficients. Structural equality
/// is therefore polynomial equality.
class MPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  struct Term {
    Exponents exps;  // parallel to vars()
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MPoly() = default;
  MPoly(long c) : MPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  explicit MPoly(const Integer& c);

  static MPoly variable(const std::string& name);
  /// `vars` may be in any order and may repeat; exponents of repeats add up.
  static MPoly from_terms(const std::vector<std::string>& vars,
                          const std::vector<std::pair<Exponents, Integer>>& terms);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Exponent of `var` in every position; absent variables have degree 0.
  std::uint32_t degree_in(std::string_view var) const;
  std::uint32_t total_degree() const;
  /// Coefficient of the monomial given as (variable, exponent) pairs.
  Integer coefficient(const std::vector<std::pair<std::string, std::uint32_t>>& monomial) const;

  MPoly operator-() const;
  MPoly pow(std::uint32_t k) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Canonical text, e.g. `x^3 + 2*x^2*y - z`. `lambda` is written `l`.
  std::string to_string() const;
  static MPoly parse(std::string_view text);

  /// {"vars": [...], "terms": [{"exp": [...], "coeff": "<decimal>"}]}
  nlohmann::json to_json() const;
  static MPoly from_json(const nlohmann::json& j);

 private:
  friend class PolyBuilder;
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

/// Simultaneous substitution; unbound variables stay as they are. 0^0 = 1.
MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& bindings);

/// Exact value at a rational point. Throws std::invalid_argument on an unbound variable.
Rational evaluate(const MPoly& p, const std::map<std::string, Rational>& point);

/// Quotient q with p == q * d. Throws DivisionError on a nonzero remainder or d == 0.
MPoly exact_divide(const MPoly& p, const MPoly& d);

/// Rational written as "a" or "a/b"; parse_rational accepts the same plus decimals like "0.25".
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace eep
