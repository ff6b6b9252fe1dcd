#include "psl2z/elimination.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <thread>

namespace psl2z {

std::string to_string(Family f) { return f == Family::A1 ? "A1" : "B1"; }

LMat x_double_prime() {
  LMat x(6, 6, LaurentPoly(0));
  for (std::size_t i = 0; i < 6; ++i) x(i, (i + 3) % 6) = 1;
  return x;
}

LMat y_prime() {
  LMat y(6, 6, LaurentPoly(0));
  y(0, 4) = C1;
  y(1, 5) = 1;
  y(2, 0) = C2;
  y(3, 1) = 1;
  y(4, 2) = LaurentPoly::monomial(1, -1, -1);
  y(5, 3) = 1;
  return y;
}

LMat lambda_double_prime() {
  LMat x = x_double_prime(), y = y_prime();
  return x * y * x * y * y;
}

LMat gamma_double_prime() {
  LMat x = x_double_prime(), y = y_prime();
  return x * y * y * x * y;
}

const std::vector<std::pair<std::size_t, std::size_t>>& cycle_positions() {
  static const std::vector<std::pair<std::size_t, std::size_t>> pos{{5, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  return pos;
}

namespace {

LMat parse_rows(const std::vector<std::vector<const char*>>& rows) {
  LMat m(6, 6, LaurentPoly(0));
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = LaurentPoly::parse(rows[r][c]);
  return m;
}

}  // namespace

LMat reference_matrix(Family family) {
  if (family == Family::A1) {
    return parse_rows({
        {"1", "c2", "c1*c2^2", "c1*c2", "c2^2", "c1^2*c2^2"},
        {"c1", "1", "c2", "c1*c2", "c1^-1", "c1*c2^2"},
        {"1", "c1^-1*c2^-1", "c1^-2*c2^-1", "c1^-1", "c1^-2*c2^-2", "c1^-2"},
        {"c2", "1", "c1^-1*c2^-1", "c1^-1", "c2^-1", "c1^-2*c2^-1"},
        {"1", "c1", "c1*c2^-1", "c2^-1", "c1^2", "c2^-2"},
        {"c1^-1*c2^-1", "1", "c1", "c2^-1", "c1*c2", "c1*c2^-1"},
    });
  }
  return parse_rows({
      {"1", "c1^-1", "c2", "c1*c2", "c1*c2^2", "c2^2"},
      {"c1", "c2^-1", "1", "c1*c2", "c2", "c1^-1"},
      {"1", "c2^-1", "c1^-1*c2^-1", "c1^-1", "c1^-2*c2^-1", "c1^-2*c2^-2"},
      {"c2", "c1*c2", "1", "c1^-1", "c1^-1*c2^-1", "c2^-1"},
      {"1", "c1*c2", "c1", "c2^-1", "c1*c2^-1", "c1^2"},
      {"c1^-1*c2^-1", "c1^-1", "1", "c2^-1", "c1", "c1*c2"},
  });
}

MonomialSystem build_monomial_system(Family family) {
  LMat x = x_double_prime(), y = y_prime();
  LMat l = lambda_double_prime(), g = gamma_double_prime();
  LMat yx = y * x;
  MonomialSystem s;
  s.family = family;
  if (family == Family::A1) {
    s.word_names = {"YX", "LYX", "LGYX", "GYX", "LLYX", "GGYX"};
    s.words = {yx, l * yx, l * g * yx, g * yx, l * l * yx, g * g * yx};
  } else {
    s.word_names = {"YX", "YXL", "LYX", "GYX", "LGYX", "LLYX"};
    s.words = {yx, yx * l, l * yx, g * yx, l * g * yx, l * l * yx};
  }
  const auto& cyc = cycle_positions();
  for (std::size_t k = 0; k < 6; ++k) {
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        bool on_cycle = std::find(cyc.begin(), cyc.end(), std::make_pair(i, j)) != cyc.end();
        if (on_cycle == s.words[k](i, j).is_zero())
          throw EliminationError(to_string(family) + ": word " + s.word_names[k] + " is not supported on the cycle");
      }
  }
  s.matrix = LMat(6, 6, LaurentPoly(0));
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t k = 0; k < 6; ++k) s.matrix(r, k) = s.words[k](cyc[r].first, cyc[r].second);
  LMat ref = reference_matrix(family);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t k = 0; k < 6; ++k)
      if (s.matrix(r, k) != ref(r, k))
        throw EliminationError(to_string(family) + " entry (" + std::to_string(r + 1) + "," + std::to_string(k + 1) +
                               ") is " + s.matrix(r, k).str() + ", reference " + ref(r, k).str());
  return s;
}

Mat evaluate(const LMat& m, const Scalar& c1v, const Scalar& c2v) {
  std::vector<Scalar> entries;
  entries.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(evaluate(m(i, j), c1v, c2v));
  return Mat(m.rows(), m.cols(), std::move(entries));
}

RPoly compute_R(Family family) {
  MonomialSystem s = build_monomial_system(family);
  LMat cleared = s.matrix;
  std::int64_t s1 = 0, s2 = 0;
  for (std::size_t r = 0; r < 6; ++r) {
    std::int64_t m1 = 0, m2 = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      m1 = std::min(m1, cleared(r, k).min_degree(Var::c1));
      m2 = std::min(m2, cleared(r, k).min_degree(Var::c2));
    }
    for (std::size_t k = 0; k < 6; ++k) cleared(r, k) = cleared(r, k).shifted(-m1, -m2);
    s1 += -m1;
    s2 += -m2;
  }
  RPoly out;
  out.family = family;
  out.det = det_bareiss(cleared).shifted(-s1, -s2);
  out.clear_c1 = family == Family::A1 ? 6 : 5;
  out.clear_c2 = out.clear_c1;
  out.minimal_c1 = std::max<std::int64_t>(0, -out.det.min_degree(Var::c1));
  out.minimal_c2 = std::max<std::int64_t>(0, -out.det.min_degree(Var::c2));
  out.value = out.det.shifted(out.clear_c1, out.clear_c2);
  if (!out.value.is_polynomial())
    throw EliminationError("R for " + to_string(family) + " keeps negative exponents after clearing");
  return out;
}

const LaurentPoly& R1() {
  static const LaurentPoly r = compute_R(Family::A1).value;
  return r;
}

const LaurentPoly& R2() {
  static const LaurentPoly r = compute_R(Family::B1).value;
  return r;
}

namespace {

LaurentPoly r1_linear_factors() {
  return (C2 - C1) * (C1 * C1 * C2 - 1) * (C1 * C2 * C2 - 1);
}

}  // namespace

const LaurentPoly& R3() {
  static const LaurentPoly r = exact_quotient(R1(), r1_linear_factors());
  return r;
}

LaurentPoly F1() { return LaurentPoly::parse("c1^2*c2^2-c1^2*c2+c1^2-c1*c2-c1+1"); }
LaurentPoly F2() { return LaurentPoly::parse("c1^2*c2^2-c1*c2^2+c2^2-c1*c2-c2+1"); }

LaurentPoly F3() {
  return LaurentPoly::parse(
      "c1^4*c2^4+c1^4*c2^3+c1^4*c2^2+c1^3*c2^4-c1^3*c2^3-c1^3*c2^2+c1^3*c2+c1^2*c2^4-c1^2*c2^3-6*c1^2*c2^2"
      "-c1^2*c2+c1^2+c1*c2^3-c1*c2^2-c1*c2+c1+c2^2+c2+1");
}

LaurentPoly F3_duplicated_term() {
  return LaurentPoly::parse(
      "c1^4*c2^4+c1^4*c2^3+c1^4*c2^2+c1^3*c2^4-c1^3*c2^3-c1^3*c2^2+c1^3*c2+c1^2*c2^4-c1^2*c2^2-6*c1^2*c2^2"
      "-c1^2*c2+c1^2+c1*c2^3-c1*c2^2-c1*c2+c1+c2^2+c2+1");
}

LaurentPoly cyc3() { return C1 * C1 + C1 + 1; }
LaurentPoly cyc6() { return C1 * C1 - C1 + 1; }

namespace {

// Divide out the monomial content and normalize the sign and content.
LaurentPoly normalized(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted(-p.min_degree(Var::c1), -p.min_degree(Var::c2)).primitive();
}

enum class Sub { c1_to_one, c2_to_one, c1_to_inverse_c2 };

LaurentPoly substitute(const LaurentPoly& p, Sub s) {
  std::map<Exponent, Rational> acc;
  for (const Term& t : p.terms()) {
    Exponent e = t.exp;
    if (s == Sub::c1_to_one) e.e1 = 0;
    if (s == Sub::c2_to_one) e.e2 = 0;
    if (s == Sub::c1_to_inverse_c2) e = {0, t.exp.e2 - t.exp.e1};
    acc[e] += t.coef;
  }
  std::vector<Term> terms;
  for (auto& [e, c] : acc)
    if (c != 0) terms.push_back({e, c});
  return LaurentPoly::from_terms(std::move(terms));
}

// Constant c with a = c * b, if any.
std::optional<Rational> constant_ratio(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  Rational c = a.terms().back().coef / b.terms().back().coef;
  if (a != b.scaled(c)) return std::nullopt;
  return c;
}

}  // namespace

bool FactorizationReport::ok() const {
  bool subs = std::all_of(substitutions.begin(), substitutions.end(), [](const SubstitutionCheck& s) { return s.holds; });
  return r2_identity && r1_divisible && r3_total_degree == 14 && special_pairs_vanish && subs;
}

FactorizationReport verify_factorizations() {
  FactorizationReport rep;
  rep.r1_info = compute_R(Family::A1);
  rep.r2_info = compute_R(Family::B1);
  const LaurentPoly& r1 = rep.r1_info.value;
  const LaurentPoly& r2 = rep.r2_info.value;

  LaurentPoly product = (1 - C1) * (C2 - 1) * (C1 * C2 - 1) * F1() * F2() * F3();
  if (auto c = constant_ratio(r2, product)) {
    rep.r2_identity = true;
    rep.r2_constant = *c;
  }
  if (auto q = exact_div(r1, r1_linear_factors())) {
    rep.r1_divisible = true;
    rep.r3 = *q;
    rep.r3_total_degree = q->total_degree();
  }

  const Field& q = Field::rationals();
  rep.special_pairs_vanish = true;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
    Scalar x = q.from_int(a), y = q.from_int(b);
    if (!evaluate(r1, x, y).is_zero() || !evaluate(r2, x, y).is_zero()) rep.special_pairs_vanish = false;
  }

  LaurentPoly in_c2 = (C2 - 1).pow(6) * (C2 * C2 - 1).pow(3);
  LaurentPoly in_c1 = (C1 - 1).pow(6) * (C1 * C1 - 1).pow(3);
  auto add = [&](std::string name, Sub s, const LaurentPoly& expected) {
    SubstitutionCheck chk;
    chk.name = std::move(name);
    chk.expected = expected;
    chk.computed = substitute(r1, s);
    chk.holds = !chk.computed.is_zero() && normalized(chk.computed) == normalized(expected);
    rep.substitutions.push_back(std::move(chk));
  };
  add("R1(1,c2)", Sub::c1_to_one, in_c2);
  add("R1(c1,1)", Sub::c2_to_one, in_c1);
  add("R1(1/c2,c2)", Sub::c1_to_inverse_c2, in_c2);
  return rep;
}

std::string to_string(ChainId id) {
  switch (id) {
    case ChainId::R1F1: return "R1F1";
    case ChainId::R1F2: return "R1F2";
    case ChainId::R1F3_direct: return "R1F3_direct";
    case ChainId::R1F3_c2_minus_c1: return "R1F3_factored(c2-c1)";
    case ChainId::R1F3_c1sq_c2_minus_1: return "R1F3_factored(c1^2*c2-1)";
    case ChainId::R1F3_c1_c2sq_minus_1: return "R1F3_factored(c1*c2^2-1)";
    case ChainId::R1F3_R3: return "R1F3_factored(R3)";
    case ChainId::R1_cyc3: return "R1_cyc3";
    case ChainId::R2_cyc3: return "R2_cyc3";
    case ChainId::R1_cyc6: return "R1_cyc6";
    case ChainId::R2_cyc6: return "R2_cyc6";
  }
  return "?";
}

const std::vector<ChainId>& all_chains() {
  static const std::vector<ChainId> ids{ChainId::R1F1,
                                        ChainId::R1F2,
                                        ChainId::R1F3_direct,
                                        ChainId::R1F3_c2_minus_c1,
                                        ChainId::R1F3_c1sq_c2_minus_1,
                                        ChainId::R1F3_c1_c2sq_minus_1,
                                        ChainId::R1F3_R3,
                                        ChainId::R1_cyc3,
                                        ChainId::R2_cyc3,
                                        ChainId::R1_cyc6,
                                        ChainId::R2_cyc6};
  return ids;
}

std::optional<ChainId> parse_chain_id(const std::string& text) {
  for (ChainId id : all_chains())
    if (to_string(id) == text) return id;
  return std::nullopt;
}

namespace {

struct Script {
  Var var;
  std::string a_name, b_name;
  LaurentPoly a, b;
  std::vector<std::array<std::string, 3>> steps;  // target, dividend, divisor
};

Script script_for(ChainId id) {
  LaurentPoly lin1 = C2 - C1;
  LaurentPoly lin2 = C1 * C1 * C2 - 1;
  LaurentPoly lin3 = C1 * C2 * C2 - 1;
  switch (id) {
    case ChainId::R1F1: return {Var::c2, "R1", "F1", R1(), F1(), {{{"A1", "R1", "F1"}}, {{"final", "F1", "A1"}}}};
    case ChainId::R1F2: return {Var::c2, "R1", "F2", R1(), F2(), {{{"A2", "R1", "F2"}}, {{"final", "F2", "A2"}}}};
    case ChainId::R1F3_direct:
      return {Var::c2, "R1", "F3", R1(), F3(),
              {{{"A3", "R1", "F3"}}, {{"A4", "F3", "A3"}}, {{"A5", "A3", "A4"}}, {{"final", "A4", "A5"}}}};
    case ChainId::R1F3_c2_minus_c1: return {Var::c2, "F3", "c2-c1", F3(), lin1, {{{"final", "F3", "c2-c1"}}}};
    case ChainId::R1F3_c1sq_c2_minus_1:
      return {Var::c2, "F3", "c1^2*c2-1", F3(), lin2, {{{"final", "F3", "c1^2*c2-1"}}}};
    case ChainId::R1F3_c1_c2sq_minus_1:
      return {Var::c2, "F3", "c1*c2^2-1", F3(), lin3, {{{"A6", "F3", "c1*c2^2-1"}}, {{"final", "c1*c2^2-1", "A6"}}}};
    case ChainId::R1F3_R3:
      return {Var::c2, "R3", "F3", R3(), F3(),
              {{{"A7", "R3", "F3"}}, {{"A8", "F3", "A7"}}, {{"A9", "A7", "A8"}}, {{"final", "A8", "A9"}}}};
    case ChainId::R1_cyc3: return {Var::c1, "R1", "cyc3", R1(), cyc3(), {{{"B1", "R1", "cyc3"}}, {{"final", "cyc3", "B1"}}}};
    case ChainId::R2_cyc3: return {Var::c1, "R2", "cyc3", R2(), cyc3(), {{{"B2", "R2", "cyc3"}}, {{"final", "cyc3", "B2"}}}};
    case ChainId::R1_cyc6: return {Var::c1, "R1", "cyc6", R1(), cyc6(), {{{"B3", "R1", "cyc6"}}, {{"final", "cyc6", "B3"}}}};
    case ChainId::R2_cyc6: return {Var::c1, "R2", "cyc6", R2(), cyc6(), {{{"B4", "R2", "cyc6"}}, {{"final", "cyc6", "B4"}}}};
  }
  throw std::invalid_argument("unknown chain");
}

struct Tracked {
  LaurentPoly value, u, v;
};

}  // namespace

ChainResult run_sprem_chain(ChainId id, bool track_cofactors) {
  Script s = script_for(id);
  ChainResult out;
  out.id = id;
  out.var = s.var;
  out.a0_name = s.a_name;
  out.b0_name = s.b_name;
  out.a0 = s.a;
  out.b0 = s.b;
  out.cofactors_tracked = track_cofactors;

  std::map<std::string, Tracked> vals;
  vals[s.a_name] = {s.a, 1, 0};
  vals[s.b_name] = {s.b, 0, 1};
  for (const auto& [target, dividend, divisor] : s.steps) {
    const Tracked& a = vals.at(dividend);
    const Tracked& b = vals.at(divisor);
    if (b.value.degree(s.var) <= 0)
      throw EliminationError(to_string(id) + ": divisor " + divisor + " is constant in " + to_string(s.var));
    SpremStep st = sprem(a.value, b.value, s.var);
    Tracked t;
    t.value = st.r;
    if (track_cofactors) {
      t.u = st.m * a.u - st.q * b.u;
      t.v = st.m * a.v - st.q * b.v;
    }
    out.steps.push_back({target, dividend, divisor, st});
    vals[target] = std::move(t);
  }
  const Tracked& fin = vals.at(s.steps.back()[0]);
  out.final_remainder = fin.value;
  out.univariate = out.final_remainder.is_univariate_in(other(s.var));
  if (track_cofactors) {
    out.u = fin.u;
    out.v = fin.v;
    out.cofactor_check = out.final_remainder == out.u * out.a0 + out.v * out.b0;
  }
  return out;
}

std::string to_string(ClaimMode m) {
  switch (m) {
    case ClaimMode::exact_constant_multiple: return "exact-constant-multiple";
    case ClaimMode::divisibility_plus_degree: return "divisibility-plus-degree";
    case ClaimMode::gcd_root_set: return "gcd-root-set";
  }
  return "?";
}

std::string MembershipClaim::product_text() const {
  std::string out;
  for (const auto& f : product) {
    if (!out.empty()) out += '*';
    out += "(" + f.poly.str() + ")";
    if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out.empty() ? "1" : out;
}

namespace {

LaurentPoly c2poly(const char* text) { return LaurentPoly::parse(text); }

}  // namespace

MembershipClaim claim_for(ChainId id) {
  Script s = script_for(id);
  MembershipClaim c;
  c.chain = id;
  c.a_name = s.a_name;
  c.b_name = s.b_name;
  c.eliminated = s.var;
  LaurentPoly plus = C1 + 1, minus = C1 - 1;
  switch (id) {
    case ChainId::R1F1: c.product = {{C1, 34}, {minus, 24}, {cyc3(), 6}}; break;
    case ChainId::R1F2: c.product = {{minus, 24}, {cyc3(), 6}, {cyc6(), 11}}; break;
    case ChainId::R1F3_direct:
      c.product = {{C1, 186}, {plus, 36}, {minus, 56}, {cyc3(), 57}};
      c.mode = ClaimMode::divisibility_plus_degree;
      c.cofactor_degree = 4 * 28 + 2 * 40;
      break;
    case ChainId::R1F3_c2_minus_c1: c.product = {{plus, 2}, {minus, 2}, {cyc3(), 2}}; break;
    case ChainId::R1F3_c1sq_c2_minus_1: c.product = {{C1, 2}, {plus, 2}, {minus, 2}, {cyc3(), 2}}; break;
    case ChainId::R1F3_c1_c2sq_minus_1: c.product = {{C1, 5}, {minus, 4}, {cyc3(), 2}}; break;
    case ChainId::R1F3_R3:
      c.product = {{C1, 110}, {plus, 16}, {minus, 44}, {cyc3(), 31}};
      c.mode = ClaimMode::divisibility_plus_degree;
      c.cofactor_degree = 4 * 16 + 2 * 26;
      break;
    case ChainId::R1_cyc3:
      c.product = {{c2poly("c2^2-c2+1"), 1},
                   {c2poly("c2^6-5*c2^5+23*c2^4-8*c2^3-c2^2-2*c2+1"), 1},
                   {c2poly("c2^2+c2+1"), 5},
                   {c2poly("c2^6-2*c2^5-c2^4-8*c2^3+23*c2^2-5*c2+1"), 1}};
      break;
    case ChainId::R2_cyc3:
      c.product = {{LaurentPoly(27), 1},
                   {C2, 2},
                   {c2poly("c2^2-2*c2+4"), 1},
                   {c2poly("4*c2^2-2*c2+1"), 1},
                   {C2 - 1, 2},
                   {c2poly("c2^2+c2+1"), 5}};
      break;
    case ChainId::R1_cyc6:
      c.product = {{c2poly("c2^2-c2+1"), 1},
                   {c2poly("c2^2+c2+1"), 1},
                   {c2poly("c2^4-c2^2+1"), 1},
                   {c2poly("c2^8-3*c2^7+9*c2^5+4*c2^4-18*c2^3+15*c2^2-6*c2+1"), 1},
                   {c2poly("c2^8-6*c2^7+15*c2^6-18*c2^5+4*c2^4+9*c2^3-3*c2+1"), 1}};
      break;
    case ChainId::R2_cyc6:
      c.product = {{C2, 2},
                   {c2poly("3*c2^2-3*c2+1"), 1},
                   {c2poly("c2^2-3*c2+3"), 1},
                   {c2poly("c2^2-c2+1"), 1},
                   {C2 - 1, 2},
                   {c2poly("4*c2^4+6*c2^3+c2^2-3*c2+1"), 1},
                   {c2poly("c2^4-3*c2^3+c2^2+6*c2+4"), 1}};
      break;
  }
  return c;
}

namespace {

unsigned multiplicity(LaurentPoly p, const LaurentPoly& f) {
  if (f.is_constant() || p.is_zero()) return 0;
  unsigned k = 0;
  while (auto q = exact_div(p, f)) {
    p = std::move(*q);
    ++k;
  }
  return k;
}

LaurentPoly product_of(const std::vector<ClaimFactor>& fs) {
  LaurentPoly p = 1;
  for (const auto& f : fs) p *= f.poly.pow(f.multiplicity);
  return p;
}

std::int64_t univariate_span(const LaurentPoly& p, Var v) {
  if (p.is_zero()) return -1;
  return p.degree(v) - p.min_degree(v);
}

}  // namespace

ClaimVerdict verify_membership_claim(const ChainResult& chain, const MembershipClaim& claim) {
  ClaimVerdict out;
  const LaurentPoly& fin = chain.final_remainder;
  Var keep = other(claim.eliminated);
  for (const auto& f : claim.product) {
    if (f.poly.is_constant()) continue;
    out.multiplicities.push_back({f.poly.str(), f.multiplicity, multiplicity(fin, f.poly)});
  }
  if (fin.is_zero()) {
    out.detail = "final remainder is zero";
    return out;
  }
  if (!fin.is_univariate_in(keep)) {
    out.detail = "final remainder is not univariate in " + to_string(keep);
    return out;
  }
  switch (claim.mode) {
    case ClaimMode::exact_constant_multiple: {
      LaurentPoly target = product_of(claim.product);
      if (auto c = constant_ratio(fin, target)) {
        out.holds = true;
        out.constant = *c;
        out.residual_degree = 0;
        out.detail = "final remainder = " + to_string(*c) + " * claimed product";
      } else {
        out.detail = "final remainder is not a constant multiple of the claimed product";
      }
      break;
    }
    case ClaimMode::divisibility_plus_degree: {
      LaurentPoly rest = fin;
      bool divisible = true;
      for (const auto& f : claim.product) {
        auto q = exact_div(rest, f.poly.pow(f.multiplicity));
        if (!q) {
          divisible = false;
          break;
        }
        rest = std::move(*q);
      }
      if (!divisible) {
        out.detail = "claimed factors do not divide the final remainder";
        break;
      }
      out.residual_degree = univariate_span(rest, keep);
      out.constant = rest.content();
      out.holds = out.residual_degree == claim.cofactor_degree;
      out.detail = "cofactor degree " + std::to_string(out.residual_degree) + ", claimed " +
                   std::to_string(claim.cofactor_degree);
      break;
    }
    case ClaimMode::gcd_root_set:
      out.detail = "root-set claims need verify_root_set";
      break;
  }
  return out;
}

MembershipClaim root_set_claim() {
  MembershipClaim c;
  c.chain = ChainId::R1F3_direct;
  c.a_name = "R1";
  c.b_name = "F3";
  c.mode = ClaimMode::gcd_root_set;
  c.product = {{C1, 186}, {C1 + 1, 36}, {C1 - 1, 56}, {cyc3(), 57}};
  return c;
}

ClaimVerdict verify_root_set(const ChainResult& direct, const std::vector<ChainResult>& factored) {
  ClaimVerdict out;
  LaurentPoly prod = 1;
  for (const auto& c : factored) prod *= c.final_remainder;
  LaurentPoly g = gcd_univariate(direct.final_remainder, prod, Var::c1);
  MembershipClaim claim = root_set_claim();
  LaurentPoly rest = g;
  std::string text;
  for (const auto& f : claim.product) {
    unsigned k = multiplicity(g, f.poly);
    out.multiplicities.push_back({f.poly.str(), f.multiplicity, k});
    rest = exact_quotient(rest, f.poly.pow(k));
    if (!text.empty()) text += '*';
    text += "(" + f.poly.str() + ")^" + std::to_string(k);
  }
  // Degree of the part of the gcd with roots outside the claimed set.
  out.residual_degree = univariate_span(rest, Var::c1);
  out.holds = exact_div(product_of(claim.product), g).has_value();
  out.constant = 1;
  out.detail = "gcd = " + text + (out.residual_degree > 0 ? " * (" + rest.str() + ")" : "");
  return out;
}

bool EliminationReport::all_verified() const {
  if (!a1_matches || !b1_matches || !factorization.ok()) return false;
  for (const auto& c : chains) {
    if (!c.verdict.holds || !c.chain.univariate) return false;
    if (c.chain.cofactors_tracked && !c.chain.cofactor_check) return false;
  }
  return !root_set || root_set->holds;
}

EliminationReport run_elimination(const std::vector<ChainId>& only, unsigned jobs, bool track_cofactors) {
  EliminationReport rep;
  auto matches = [](Family f) {
    try {
      build_monomial_system(f);
      return true;
    } catch (const EliminationError&) {
      return false;
    }
  };
  rep.a1_matches = matches(Family::A1);
  rep.b1_matches = matches(Family::B1);
  rep.factorization = verify_factorizations();

  std::vector<ChainId> ids = only.empty() ? all_chains() : only;
  rep.chains.resize(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      ChainOutcome o;
      o.chain = run_sprem_chain(ids[i], track_cofactors);
      o.claim = claim_for(ids[i]);
      o.verdict = verify_membership_claim(o.chain, o.claim);
      rep.chains[i] = std::move(o);
    }
  };
  // Force the shared polynomials before threads start reading them.
  (void)R1();
  (void)R2();
  (void)R3();
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs) && t < ids.size(); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const ChainResult* direct = nullptr;
  std::vector<ChainResult> factored;
  for (const auto& c : rep.chains) {
    switch (c.chain.id) {
      case ChainId::R1F3_direct: direct = &c.chain; break;
      case ChainId::R1F3_c2_minus_c1:
      case ChainId::R1F3_c1sq_c2_minus_1:
      case ChainId::R1F3_c1_c2sq_minus_1:
      case ChainId::R1F3_R3: factored.push_back(c.chain); break;
      default: break;
    }
  }
  if (direct && factored.size() == 4) rep.root_set = verify_root_set(*direct, factored);
  return rep;
}

Field exception_field(std::uint64_t characteristic) {
  if (characteristic == 0) return Field(FieldSpec::cube_roots(0));
  if (characteristic == 3 || characteristic % 3 == 1) return Field(FieldSpec::prime(characteristic));
  return Field(FieldSpec::cube_roots(characteristic));
}

ExceptionSet solve_exception_set(std::uint64_t characteristic, const EliminationReport& report) {
  if (report.chains.size() != all_chains().size() || !report.root_set)
    throw EliminationError("exception set needs every certificate chain");
  if (!report.all_verified()) throw EliminationError("exception set needs verified certificates");

  ExceptionSet out{exception_field(characteristic), {}, 0, 0, false};
  const Field& f = out.field;
  std::vector<Scalar> values{f.one(), f.minus_one()};
  if (auto z = f.zeta()) {
    Scalar z2 = *z * *z;
    for (const Scalar& s : {*z, z2, -*z, -z2}) values.push_back(s);
  }
  std::vector<Scalar> uniq;
  for (const auto& v : values)
    if (std::none_of(uniq.begin(), uniq.end(), [&](const Scalar& u) { return u == v; })) uniq.push_back(v);

  const LaurentPoly& r1 = R1();
  const LaurentPoly& r2 = R2();
  for (const Scalar& a : uniq) {
    for (const Scalar& b : uniq) {
      ++out.candidates_checked;
      for (const auto& c : report.chains) {
        if (!evaluate(c.chain.a0, a, b).is_zero() || !evaluate(c.chain.b0, a, b).is_zero()) continue;
        ++out.certificate_checks;
        if (!evaluate(c.chain.final_remainder, a, b).is_zero())
          throw EliminationError("candidate (" + a.str() + "," + b.str() + ") contradicts certificate " +
                                 to_string(c.chain.id));
      }
      if (evaluate(r1, a, b).is_zero() && evaluate(r2, a, b).is_zero()) out.pairs.emplace_back(a, b);
    }
  }

  std::vector<ParamPair> expected = excluded_pairs(f);
  auto same = [](std::vector<ParamPair> x, std::vector<ParamPair> y) {
    auto key = [](const ParamPair& p) { return p.str(); };
    auto by_key = [&](const ParamPair& l, const ParamPair& r) { return key(l) < key(r); };
    std::sort(x.begin(), x.end(), by_key);
    std::sort(y.begin(), y.end(), by_key);
    return x == y;
  };
  out.matches_catalog = same(out.pairs, expected);
  return out;
}

}  // namespace psl2z
