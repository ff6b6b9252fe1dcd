#include "psl2z/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

namespace psl2z {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

Exponent operator+(const Exponent& a, const Exponent& b) { return {checked_add(a.e1, b.e1), checked_add(a.e2, b.e2)}; }

Integer lcm_denominators(const std::vector<Term>& terms) {
  Integer l = 1;
  for (const auto& t : terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den().get_mpz_t());
  return l;
}

}  // namespace

std::string to_string(Var v) { return v == Var::c1 ? "c1" : "c2"; }
Var other(Var v) { return v == Var::c1 ? Var::c2 : Var::c1; }

LaurentPoly::LaurentPoly(long v) {
  if (v != 0) terms_.push_back({{0, 0}, Rational(v)});
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(const Rational& c, std::int64_t e1, std::int64_t e2) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({{e1, e2}, c});
  return p;
}

LaurentPoly LaurentPoly::variable(Var v) { return v == Var::c1 ? monomial(1, 1, 0) : monomial(1, 0, 1); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty polynomial", 0);
  std::size_t pos = 0;
  std::vector<Term> terms;
  auto parse_factor = [&](Exponent& e) {
    std::size_t at = pos;
    if (text.substr(pos, 2) != "c1" && text.substr(pos, 2) != "c2") throw ParseError("expected c1 or c2", at);
    bool first = text[pos + 1] == '1';
    pos += 2;
    std::int64_t k = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) throw ParseError("expected exponent", digits);
      try {
        k = std::stoll(std::string(text.substr(start, pos - start)));
      } catch (const std::out_of_range&) {
        throw ParseError("exponent out of range", start);
      }
    }
    (first ? e.e1 : e.e2) = checked_add(first ? e.e1 : e.e2, k);
  };
  while (true) {
    Term t{{0, 0}, 1};
    bool need_factor = false;
    if (text.substr(pos, 2) == "-c") {
      t.coef = -1;
      ++pos;
    }
    if (pos < text.size() && text[pos] == 'c') {
      need_factor = true;
    } else {
      t.coef = parse_rational(text, pos);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        need_factor = true;
      }
    }
    if (need_factor) {
      parse_factor(t.exp);
      while (pos < text.size() && text[pos] == '*') {
        ++pos;
        parse_factor(t.exp);
      }
    }
    terms.push_back(std::move(t));
    if (pos == text.size()) break;
    if (text[pos] == '+') {
      ++pos;
    } else if (text[pos] != '-') {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
  }
  return from_terms(std::move(terms));
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{}); }

bool LaurentPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp.e1 >= 0 && t.exp.e2 >= 0; });
}

bool LaurentPoly::is_polynomial_in(Var v) const {
  return std::all_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.exp.of(v) >= 0; });
}

bool LaurentPoly::is_univariate_in(Var v) const {
  Var o = other(v);
  return std::all_of(terms_.begin(), terms_.end(), [o](const Term& t) { return t.exp.of(o) == 0; });
}

std::int64_t LaurentPoly::degree(Var v) const {
  if (terms_.empty()) return std::numeric_limits<std::int64_t>::min();
  std::int64_t d = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : terms_) d = std::max(d, t.exp.of(v));
  return d;
}

std::int64_t LaurentPoly::min_degree(Var v) const {
  if (terms_.empty()) return std::numeric_limits<std::int64_t>::max();
  std::int64_t d = std::numeric_limits<std::int64_t>::max();
  for (const auto& t : terms_) d = std::min(d, t.exp.of(v));
  return d;
}

std::int64_t LaurentPoly::total_degree() const {
  if (terms_.empty()) return std::numeric_limits<std::int64_t>::min();
  std::int64_t d = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : terms_) d = std::max(d, checked_add(t.exp.e1, t.exp.e2));
  return d;
}

LaurentPoly LaurentPoly::coeff(Var v, std::int64_t k) const {
  LaurentPoly p;
  for (const auto& t : terms_) {
    if (t.exp.of(v) != k) continue;
    Term c = t;
    (v == Var::c1 ? c.exp.e1 : c.exp.e2) = 0;
    p.terms_.push_back(std::move(c));
  }
  return p;
}

LaurentPoly LaurentPoly::leading_coeff(Var v) const {
  if (terms_.empty()) return {};
  return coeff(v, degree(v));
}

Rational LaurentPoly::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num().get_mpz_t());
  Rational c(g, lcm_denominators(terms_));
  c.canonicalize();
  return c;
}

LaurentPoly LaurentPoly::primitive() const {
  if (terms_.empty()) return {};
  Rational c = content();
  if (terms_.back().coef < 0) c = -c;
  return scaled(1 / c);
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

LaurentPoly LaurentPoly::shifted(std::int64_t d1, std::int64_t d2) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp = t.exp + Exponent{d1, d2};
  return p;
}

LaurentPoly LaurentPoly::pow(long long e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  if (terms_.size() == 1) {
    const Term& t = terms_[0];
    Rational c;
    mpz_pow_ui(c.get_num_mpz_t(), t.coef.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(c.get_den_mpz_t(), t.coef.get_den_mpz_t(), static_cast<unsigned long>(e));
    return monomial(c, checked_mul(t.exp.e1, e), checked_mul(t.exp.e2, e));
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    std::string mono;
    auto factor = [&](const char* name, std::int64_t k) {
      if (k == 0) return;
      if (!mono.empty()) mono += '*';
      mono += name;
      if (k != 1) mono += "^" + std::to_string(k);
    };
    factor("c1", t.exp.e1);
    factor("c2", t.exp.e2);
    if (mono.empty()) {
      out += t.coef.get_str();
    } else if (t.coef == 1) {
      out += mono;
    } else {
      out += t.coef.get_str() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

namespace {

template <class Combine>
LaurentPoly merge(const std::vector<Term>& a, const std::vector<Term>& b, Combine combine, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back(b[j++]);
      if (negate_b) out.back().coef = -out.back().coef;
    } else {
      Rational c = combine(a[i].coef, b[j].coef);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a.terms_, b.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); }, false);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return a;
  return merge(a.terms_, b.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); }, true);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& mono = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& other_poly = a.terms_.size() == 1 ? b : a;
    LaurentPoly p = other_poly;
    const Term& m = mono.terms_[0];
    for (auto& t : p.terms_) {
      t.exp = t.exp + m.exp;
      t.coef *= m.coef;
    }
    return p;
  }
  // Integer accumulation over the common denominator, into a dense box when it is small.
  Integer la = lcm_denominators(a.terms_);
  Integer lb = lcm_denominators(b.terms_);
  auto integerize = [](const std::vector<Term>& ts, const Integer& l) {
    std::vector<Integer> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(Integer(t.coef.get_num() * (l / t.coef.get_den())));
    return out;
  };
  std::vector<Integer> ai = integerize(a.terms_, la);
  std::vector<Integer> bi = integerize(b.terms_, lb);
  std::int64_t min1 = checked_add(a.min_degree(Var::c1), b.min_degree(Var::c1));
  std::int64_t max1 = checked_add(a.degree(Var::c1), b.degree(Var::c1));
  std::int64_t min2 = checked_add(a.min_degree(Var::c2), b.min_degree(Var::c2));
  std::int64_t max2 = checked_add(a.degree(Var::c2), b.degree(Var::c2));
  unsigned __int128 w1 = static_cast<unsigned __int128>(max1 - min1) + 1;
  unsigned __int128 w2 = static_cast<unsigned __int128>(max2 - min2) + 1;
  Integer denom = la * lb;
  std::vector<Term> out;
  if (w1 * w2 <= (1u << 21)) {
    std::size_t width = static_cast<std::size_t>(w2);
    std::vector<Integer> acc(static_cast<std::size_t>(w1 * w2));
    for (std::size_t i = 0; i < ai.size(); ++i) {
      const Exponent& ea = a.terms_[i].exp;
      for (std::size_t j = 0; j < bi.size(); ++j) {
        const Exponent& eb = b.terms_[j].exp;
        std::size_t idx = static_cast<std::size_t>(ea.e1 + eb.e1 - min1) * width + static_cast<std::size_t>(ea.e2 + eb.e2 - min2);
        mpz_addmul(acc[idx].get_mpz_t(), ai[i].get_mpz_t(), bi[j].get_mpz_t());
      }
    }
    for (std::size_t idx = 0; idx < acc.size(); ++idx) {
      if (acc[idx] == 0) continue;
      Rational c(acc[idx], denom);
      c.canonicalize();
      out.push_back({{min1 + static_cast<std::int64_t>(idx / width), min2 + static_cast<std::int64_t>(idx % width)}, std::move(c)});
    }
  } else {
    std::map<Exponent, Integer> acc;
    for (std::size_t i = 0; i < ai.size(); ++i)
      for (std::size_t j = 0; j < bi.size(); ++j) {
        Integer& slot = acc[a.terms_[i].exp + b.terms_[j].exp];
        mpz_addmul(slot.get_mpz_t(), ai[i].get_mpz_t(), bi[j].get_mpz_t());
      }
    for (auto& [e, v] : acc) {
      if (v == 0) continue;
      Rational c(v, denom);
      c.canonicalize();
      out.push_back({e, std::move(c)});
    }
  }
  LaurentPoly p;
  p.terms_ = std::move(out);
  return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

namespace {

std::optional<LaurentPoly> laurent_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  // Monomials are units: divide the monomial-free parts, then restore the shift.
  std::int64_t s1 = a.min_degree(Var::c1) - b.min_degree(Var::c1);
  std::int64_t s2 = a.min_degree(Var::c2) - b.min_degree(Var::c2);
  LaurentPoly an = a.shifted(-a.min_degree(Var::c1), -a.min_degree(Var::c2));
  LaurentPoly bn = b.shifted(-b.min_degree(Var::c1), -b.min_degree(Var::c2));
  if (bn.terms().size() == 1) return a.scaled(1 / b.terms()[0].coef).shifted(-b.terms()[0].exp.e1, -b.terms()[0].exp.e2);

  const Term& lead = bn.terms().back();
  std::int64_t bdeg2 = bn.degree(Var::c2);
  std::int64_t max_q2 = an.degree(Var::c2) - bdeg2;
  std::int64_t max_q1 = an.degree(Var::c1) - bn.degree(Var::c1);
  if (max_q1 < 0 || max_q2 < 0) return std::nullopt;
  Rational lead_inv = 1 / lead.coef;

  std::map<Exponent, Rational> rem;
  for (const auto& t : an.terms()) rem.emplace(t.exp, t.coef);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    Exponent e = it->first;
    Exponent qe{e.e1 - lead.exp.e1, e.e2 - lead.exp.e2};
    if (qe.e1 < 0 || qe.e2 < 0 || qe.e2 > max_q2) return std::nullopt;
    Rational qc = it->second * lead_inv;
    for (const auto& t : bn.terms()) {
      Exponent pos{qe.e1 + t.exp.e1, qe.e2 + t.exp.e2};
      auto [slot, inserted] = rem.try_emplace(pos, 0);
      slot->second -= qc * t.coef;
      if (slot->second == 0) rem.erase(slot);
    }
    quot.push_back({qe, std::move(qc)});
  }
  return LaurentPoly::from_terms(std::move(quot)).shifted(s1, s2);
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = laurent_div(a, b);
  if (q && a.is_polynomial() && b.is_polynomial() && !q->is_polynomial()) return std::nullopt;
  return q;
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = exact_div(a, b);
  if (!q) throw std::domain_error("polynomial division is not exact");
  return *q;
}

SpremStep sprem(const LaurentPoly& a, const LaurentPoly& b, Var var) {
  if (!a.is_polynomial_in(var) || !b.is_polynomial_in(var))
    throw std::invalid_argument("sprem operands have negative exponents in " + to_string(var));
  std::int64_t db = b.degree(var);
  if (b.is_zero() || db < 1) throw std::invalid_argument("sprem divisor is constant in " + to_string(var));
  LaurentPoly lc = b.leading_coeff(var);
  SpremStep step{LaurentPoly(1), LaurentPoly{}, a, var, 0};
  while (!step.r.is_zero() && step.r.degree(var) >= db) {
    std::int64_t d = step.r.degree(var) - db;
    LaurentPoly t = step.r.leading_coeff(var).shifted(var == Var::c1 ? d : 0, var == Var::c2 ? d : 0);
    step.r = lc * step.r - t * b;
    step.q = lc * step.q + t;
    step.m = lc * step.m;
    ++step.divisions;
  }
  return step;
}

std::vector<Rational> univariate_coefficients(const LaurentPoly& p, Var var) {
  if (!p.is_univariate_in(var) || !p.is_polynomial_in(var))
    throw std::invalid_argument("polynomial is not univariate in " + to_string(var));
  if (p.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(p.degree(var)) + 1, 0);
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.exp.of(var))] = t.coef;
  return c;
}

LaurentPoly from_univariate(const std::vector<Rational>& coeffs, Var var) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    std::int64_t e = static_cast<std::int64_t>(k);
    terms.push_back({var == Var::c1 ? Exponent{e, 0} : Exponent{0, e}, coeffs[k]});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Scalar evaluate(const LaurentPoly& p, const Scalar& c1v, const Scalar& c2v) {
  if (c1v.field() != c2v.field()) throw std::invalid_argument("evaluation point mixes fields");
  const Field& f = c1v.field();
  Scalar total = f.zero();
  std::map<std::int64_t, Scalar> p1, p2;
  auto power = [](std::map<std::int64_t, Scalar>& cache, const Scalar& base, std::int64_t e) -> const Scalar& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    if (e < 0 && base.is_zero()) throw std::domain_error("zero substituted into a negative exponent");
    return cache.emplace(e, base.pow(e)).first->second;
  };
  for (const auto& t : p.terms()) {
    Scalar coef = f.from_rational(t.coef);
    total += coef * power(p1, c1v, t.exp.e1) * power(p2, c2v, t.exp.e2);
  }
  return total;
}

}  // namespace psl2z
