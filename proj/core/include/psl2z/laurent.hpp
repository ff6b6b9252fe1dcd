#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psl2z/field.hpp"
#include "psl2z/rational.hpp"

namespace psl2z {

enum class Var { c1, c2 };

std::string to_string(Var v);
Var other(Var v);

struct Exponent {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  std::int64_t of(Var v) const { return v == Var::c1 ? e1 : e2; }
  auto operator<=>(const Exponent&) const = default;
};

struct Term {
  Exponent exp;
  Rational coef;
};

// Sparse Laurent polynomial in c1, c2 over Q; terms sorted lexicographically by (e1, e2), no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long v);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(const Rational& c, std::int64_t e1, std::int64_t e2);
  static LaurentPoly variable(Var v);
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  LaurentPoly zero_like() const { return {}; }
  LaurentPoly one_like() const { return LaurentPoly(1); }

  // True when no exponent is negative.
  bool is_polynomial() const;
  bool is_polynomial_in(Var v) const;
  // True when every term has exponent zero in the other variable.
  bool is_univariate_in(Var v) const;

  std::int64_t degree(Var v) const;
  std::int64_t min_degree(Var v) const;
  std::int64_t total_degree() const;

  LaurentPoly coeff(Var v, std::int64_t k) const;
  LaurentPoly leading_coeff(Var v) const;

  // Positive rational c with this / c having coprime integer coefficients.
  Rational content() const;
  // this / content, sign-normalized so the lexicographically largest term is positive.
  LaurentPoly primitive() const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(std::int64_t d1, std::int64_t d2) const;
  LaurentPoly pow(long long e) const;

  std::string str() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

inline const LaurentPoly C1 = LaurentPoly::variable(Var::c1);
inline const LaurentPoly C2 = LaurentPoly::variable(Var::c2);

// q with a = q * b, or nullopt; q must be a polynomial when a and b are. Throws std::domain_error when b is zero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);
// As exact_div, throwing std::domain_error when b does not divide a.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

struct SpremStep {
  LaurentPoly m;
  LaurentPoly q;
  LaurentPoly r;
  Var var = Var::c2;
  unsigned divisions = 0;
};

// m * a = q * b + r with deg_var(r) < deg_var(b); m = lc_var(b)^divisions.
SpremStep sprem(const LaurentPoly& a, const LaurentPoly& b, Var var);

// Monic gcd over Q[var] of two polynomials univariate in var once monomial content is removed.
LaurentPoly gcd_univariate(const LaurentPoly& a, const LaurentPoly& b, Var var);

// Ascending dense coefficients of a polynomial univariate in var.
std::vector<Rational> univariate_coefficients(const LaurentPoly& p, Var var);
LaurentPoly from_univariate(const std::vector<Rational>& coeffs, Var var);

Scalar evaluate(const LaurentPoly& p, const Scalar& c1v, const Scalar& c2v);

}  // namespace psl2z
