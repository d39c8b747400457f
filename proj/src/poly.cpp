#include "eep/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <optional>

namespace eep {

namespace {

struct GrlexDesc {
  bool operator()(const MPoly::Exponents& a, const MPoly::Exponents& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db;
    return b < a;
  }
};

using TermMap = std::map<MPoly::Exponents, Integer, GrlexDesc>;

constexpr std::array<std::string_view, 10> kBaseNames = {"x", "y", "z", "q", "v", "lambda", "tau", "u", "omega", "w"};
constexpr std::array<std::string_view, 5> kFamilies = {"t_", "u_", "v_", "x_", "y_"};

struct VariableRank {
  int group;
  std::string_view index;
};

VariableRank rank_of(std::string_view name) {
  for (std::size_t i = 0; i < kBaseNames.size(); ++i)
    if (name == kBaseNames[i]) return {static_cast<int>(i), {}};
  for (std::size_t i = 0; i < kFamilies.size(); ++i)
    if (name.size() > kFamilies[i].size() && name.substr(0, kFamilies[i].size()) == kFamilies[i])
      return {100 + static_cast<int>(i), name.substr(kFamilies[i].size())};
  return {1000, name};
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Numeric indices first, by value; then the rest lexicographically.
bool index_less(std::string_view a, std::string_view b) {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na != nb) return na;
  if (na) {
    auto strip = [](std::string_view s) {
      auto pos = s.find_first_not_of('0');
      return pos == std::string_view::npos ? std::string_view{} : s.substr(pos);
    };
    auto sa = strip(a);
    auto sb = strip(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

std::vector<std::string> merged_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
             [](const std::string& x, const std::string& y) { return variable_less(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Position of each of `from` inside `to` (which must contain them all).
std::vector<std::size_t> embedding(const std::vector<std::string>& from, const std::vector<std::string>& to) {
  std::vector<std::size_t> idx(from.size());
  for (std::size_t i = 0; i < from.size(); ++i)
    idx[i] = static_cast<std::size_t>(std::find(to.begin(), to.end(), from[i]) - to.begin());
  return idx;
}

MPoly::Exponents lift(const MPoly::Exponents& e, const std::vector<std::size_t>& idx, std::size_t width) {
  MPoly::Exponents out(width, 0);
  for (std::size_t i = 0; i < e.size(); ++i) out[idx[i]] = e[i];
  return out;
}

std::string display_name(const std::string& var) { return var == "lambda" ? "l" : var; }
std::string internal_name(const std::string& var) { return var == "l" ? "lambda" : var; }

Rational rational_pow(const Rational& base, std::uint32_t k) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  out.canonicalize();
  return out;
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  if (a == b) return false;
  const VariableRank ra = rank_of(a);
  const VariableRank rb = rank_of(b);
  if (ra.group != rb.group) return ra.group < rb.group;
  return index_less(ra.index, rb.index);
}

// Builds a normalized polynomial out of an accumulated term map.
class PolyBuilder {
 public:
  static MPoly build(const std::vector<std::string>& vars, const TermMap& terms) {
    std::vector<bool> used(vars.size(), false);
    for (const auto& [e, c] : terms) {
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) used[i] = true;
    }
    MPoly out;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (used[i]) out.vars_.push_back(vars[i]);
    for (const auto& [e, c] : terms) {
      if (sgn(c) == 0) continue;
      MPoly::Exponents kept;
      kept.reserve(out.vars_.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        if (used[i]) kept.push_back(e[i]);
      out.terms_.push_back({std::move(kept), c});
    }
    return out;
  }

  static void accumulate(TermMap& into, const MPoly& p, const std::vector<std::string>& target, const Integer& scale = 1) {
    const auto idx = embedding(p.vars(), target);
    for (const auto& t : p.terms()) into[lift(t.exps, idx, target.size())] += scale * t.coeff;
  }
};

MPoly::MPoly(const Integer& c) {
  if (sgn(c) != 0) terms_.push_back({{}, c});
}

MPoly MPoly::variable(const std::string& name) {
  MPoly p;
  p.vars_ = {name};
  p.terms_.push_back({{1}, 1});
  return p;
}

MPoly MPoly::from_terms(const std::vector<std::string>& vars, const std::vector<std::pair<Exponents, Integer>>& terms) {
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end(), [](const std::string& a, const std::string& b) { return variable_less(a, b); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto idx = embedding(vars, sorted);
  TermMap acc;
  for (const auto& [e, c] : terms) {
    if (e.size() != vars.size()) throw std::invalid_argument("exponent vector length does not match variable list");
    Exponents lifted(sorted.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) lifted[idx[i]] += e[i];
    acc[lifted] += c;
  }
  return PolyBuilder::build(sorted, acc);
}

std::uint32_t MPoly::degree_in(std::string_view var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[i]);
  return d;
}

std::uint32_t MPoly::total_degree() const {
  return terms_.empty() ? 0 : std::accumulate(terms_.front().exps.begin(), terms_.front().exps.end(), std::uint32_t{0});
}

Integer MPoly::coefficient(const std::vector<std::pair<std::string, std::uint32_t>>& monomial) const {
  Exponents want(vars_.size(), 0);
  for (const auto& [name, e] : monomial) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      if (e != 0) return 0;
      continue;
    }
    want[static_cast<std::size_t>(it - vars_.begin())] += e;
  }
  for (const auto& t : terms_)
    if (t.exps == want) return t.coeff;
  return 0;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MPoly MPoly::pow(std::uint32_t k) const {
  MPoly result(1);
  MPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const auto vars = merged_vars(a.vars_, b.vars_);
  TermMap acc;
  PolyBuilder::accumulate(acc, a, vars);
  PolyBuilder::accumulate(acc, b, vars);
  return PolyBuilder::build(vars, acc);
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return a;
  const auto vars = merged_vars(a.vars_, b.vars_);
  TermMap acc;
  PolyBuilder::accumulate(acc, a, vars);
  PolyBuilder::accumulate(acc, b, vars, -1);
  return PolyBuilder::build(vars, acc);
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto vars = merged_vars(a.vars_, b.vars_);
  const auto ia = embedding(a.vars_, vars);
  const auto ib = embedding(b.vars_, vars);
  std::vector<MPoly::Exponents> la;
  std::vector<MPoly::Exponents> lb;
  for (const auto& t : a.terms_) la.push_back(lift(t.exps, ia, vars.size()));
  for (const auto& t : b.terms_) lb.push_back(lift(t.exps, ib, vars.size()));
  TermMap acc;
  MPoly::Exponents e(vars.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    for (std::size_t j = 0; j < lb.size(); ++j) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = la[i][k] + lb[j][k];
      acc[e] += a.terms_[i].coeff * b.terms_[j].coeff;
    }
  }
  return PolyBuilder::build(vars, acc);
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    Integer magnitude = abs(t.coeff);
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += display_name(vars_[i]);
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty()) out += magnitude.get_str();
    else if (magnitude == 1) out += mono;
    else out += magnitude.get_str() + "*" + mono;
  }
  return out;
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  MPoly parse() {
    skip();
    MPoly result;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    result = term();
    if (negative) result = -result;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      MPoly t = term();
      result = op == '+' ? result + t : result - t;
    }
    return result;
  }

 private:
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  MPoly factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return MPoly(Integer(digits()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      MPoly v = MPoly::variable(internal_name(std::string(s_.substr(start, pos_ - start))));
      if (peek() == '^') {
        ++pos_;
        const std::string e = digits();
        return v.pow(static_cast<std::uint32_t>(std::stoul(e)));
      }
      return v;
    }
    fail("expected a number or variable");
  }

  MPoly term() {
    MPoly t = factor();
    while (peek() == '*') {
      ++pos_;
      t = t * factor();
    }
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text) { return TextParser(text).parse(); }

nlohmann::json MPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : terms_) terms.push_back({{"exp", t.exps}, {"coeff", t.coeff.get_str()}});
  return {{"vars", vars_}, {"terms", terms}};
}

MPoly MPoly::from_json(const nlohmann::json& j) {
  try {
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<std::pair<Exponents, Integer>> terms;
    for (const auto& t : j.at("terms")) terms.emplace_back(t.at("exp").get<Exponents>(), Integer(t.at("coeff").get<std::string>()));
    return from_terms(vars, terms);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed structured polynomial: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed structured polynomial: ") + e.what());
  }
}

MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& bindings) {
  std::vector<std::string> target;
  std::vector<const MPoly*> bound(p.vars().size(), nullptr);
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = bindings.find(p.vars()[i]);
    if (it == bindings.end()) {
      target = merged_vars(target, {p.vars()[i]});
    } else {
      bound[i] = &it->second;
      target = merged_vars(target, it->second.vars());
    }
  }

  std::vector<std::map<std::uint32_t, MPoly>> powers(p.vars().size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const MPoly& {
    auto& cache = powers[i];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    MPoly base = bound[i] ? *bound[i] : MPoly::variable(p.vars()[i]);
    return cache.emplace(e, base.pow(e)).first->second;
  };

  TermMap acc;
  for (const auto& t : p.terms()) {
    MPoly product(t.coeff);
    for (std::size_t i = 0; i < t.exps.size() && !product.is_zero(); ++i)
      if (t.exps[i] != 0) product = product * power(i, t.exps[i]);
    PolyBuilder::accumulate(acc, product, target);
  }
  return PolyBuilder::build(target, acc);
}

Rational evaluate(const MPoly& p, const std::map<std::string, Rational>& point) {
  std::vector<const Rational*> values;
  for (const auto& var : p.vars()) {
    auto it = point.find(var);
    if (it == point.end()) throw std::invalid_argument("unbound variable '" + var + "'");
    values.push_back(&it->second);
  }
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational term = t.coeff;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (t.exps[i] != 0) term *= rational_pow(*values[i], t.exps[i]);
    sum += term;
  }
  return sum;
}

MPoly exact_divide(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw DivisionError("division by the zero polynomial");
  const auto& lead = d.terms().front();
  MPoly remainder = p;
  MPoly quotient;
  while (!remainder.is_zero()) {
    const auto vars = merged_vars(remainder.vars(), d.vars());
    const auto top = lift(remainder.terms().front().exps, embedding(remainder.vars(), vars), vars.size());
    const auto div = lift(lead.exps, embedding(d.vars(), vars), vars.size());
    MPoly::Exponents step(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (top[i] < div[i]) throw DivisionError("nonzero remainder: " + remainder.to_string());
      step[i] = top[i] - div[i];
    }
    const Integer& top_coeff = remainder.terms().front().coeff;
    if (!mpz_divisible_p(top_coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
      throw DivisionError("nonzero remainder: " + remainder.to_string());
    MPoly t = MPoly::from_terms(vars, {{step, Integer(top_coeff / lead.coeff)}});
    remainder = remainder - t * d;
    quotient += t;
  }
  return quotient;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw bad();
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      if (negative || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
      if (whole.empty()) whole = "0";
      if (frac.empty() || !all_digits(frac) || !all_digits(whole)) throw bad();
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      Rational r(Integer(whole) * den + Integer(frac), den);
      r.canonicalize();
      return negative ? Rational(-r) : r;
    }
    auto slash = s.find('/');
    auto check_int = [&](std::string part) {
      if (!part.empty() && (part[0] == '-' || part[0] == '+')) part = part.substr(1);
      if (!all_digits(part)) throw bad();
    };
    if (slash == std::string::npos) {
      check_int(s);
      return Rational(Integer(s[0] == '+' ? s.substr(1) : s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    check_int(num);
    if (!all_digits(den)) throw bad();
    Integer dz(den);
    if (dz == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(Integer(num[0] == '+' ? num.substr(1) : num), dz);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

}  // namespace eep
