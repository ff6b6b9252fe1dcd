#include <doctest.h>

#include <fstream>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "psl2z/elimination.hpp"

using namespace psl2z;

namespace {

nlohmann::json golden() {
  std::ifstream in(std::string(PSL2Z_GOLDEN_DIR) + "/monomial_systems.json");
  REQUIRE(in);
  return nlohmann::json::parse(in);
}

LaurentPoly parse_spaced(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return LaurentPoly::parse(s);
}

// Leibniz expansion; slow but shares nothing with the elimination code.
Scalar leibniz_det(const Mat& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = m(0, 0).zero_like();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar t = m(0, 0).one_like();
    for (std::size_t i = 0; i < n; ++i) t *= m(i, perm[i]);
    total += inversions % 2 ? -t : t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

const EliminationReport& full_report() {
  static const EliminationReport r = run_elimination({}, 4);
  return r;
}

}  // namespace

TEST_CASE("monomial systems match the reference matrices") {
  auto g = golden();
  for (Family fam : {Family::A1, Family::B1}) {
    MonomialSystem s = build_monomial_system(fam);
    const auto& rows = g[to_string(fam)];
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t k = 0; k < 6; ++k) {
        auto e = rows[r][k];
        CHECK(s.matrix(r, k) == LaurentPoly::monomial(1, e[0].get<int>(), e[1].get<int>()));
      }
  }
  MonomialSystem a = build_monomial_system(Family::A1);
  CHECK(a.matrix(0, 0) == LaurentPoly(1));
  CHECK(a.matrix(0, 1) == C2);
  MonomialSystem b = build_monomial_system(Family::B1);
  CHECK(b.matrix(5, 5) == C1 * C2);
  CHECK(F1() == parse_spaced(g["F1"]));
  CHECK(F2() == parse_spaced(g["F2"]));
}

TEST_CASE("R polynomials after clearing") {
  RPoly r1 = compute_R(Family::A1), r2 = compute_R(Family::B1);
  CHECK(r1.value.is_polynomial());
  CHECK(r2.value.is_polynomial());
  CHECK(r1.clear_c1 == 6);
  CHECK(r1.clear_c2 == 6);
  CHECK(r2.clear_c1 == 5);
  CHECK(r2.clear_c2 == 5);
  CHECK(r1.minimal_c1 <= 6);
  CHECK(r2.minimal_c2 <= 5);
  CHECK(r1.value == R1());
  CHECK(r2.value == R2());

  const Field& q = Field::rationals();
  CHECK(evaluate(R1(), q.one(), q.one()).is_zero());
  CHECK(evaluate(R2(), q.one(), q.from_int(2)).is_zero());
  CHECK(evaluate(R2(), q.one(), q.from_int(5)).is_zero());
  Field z(FieldSpec::cube_roots(0));
  CHECK_FALSE(evaluate(R1(), *z.zeta(), z.zeta()->pow(2)).is_zero());
}

TEST_CASE("R polynomials agree with a determinant oracle") {
  std::mt19937_64 rng(61);
  Field f(FieldSpec::prime(10007));
  LMat a = reference_matrix(Family::A1), b = reference_matrix(Family::B1);
  for (int i = 0; i < 200; ++i) {
    Scalar x = f.random_nonzero(rng), y = f.random_nonzero(rng);
    CHECK(evaluate(R1(), x, y) == x.pow(6) * y.pow(6) * leibniz_det(evaluate(a, x, y)));
    CHECK(evaluate(R2(), x, y) == x.pow(5) * y.pow(5) * leibniz_det(evaluate(b, x, y)));
  }
}

TEST_CASE("nonvanishing R forces the full span") {
  std::mt19937_64 rng(62);
  Field f(FieldSpec::prime(10007));
  for (int i = 0; i < 200; ++i) {
    ParamPair p = oracle::random_valid_pair(f, rng);
    bool generic = !evaluate(R1(), p.c1, p.c2).is_zero() || !evaluate(R2(), p.c1, p.c2).is_zero();
    if (generic) CHECK(burnside_span_dim(Rep(family_x(f), family_y(p))) == 36);
  }
  for (std::uint64_t ch : {0ull, 2ull, 3ull, 7ull}) {
    Field g = exception_field(ch);
    for (const auto& p : excluded_pairs(g)) {
      CHECK(evaluate(R1(), p.c1, p.c2).is_zero());
      CHECK(evaluate(R2(), p.c1, p.c2).is_zero());
    }
  }
}

TEST_CASE("U and L are reachable where A1 is invertible") {
  std::mt19937_64 rng(63);
  Field f(FieldSpec::prime(10007));
  MonomialSystem s = build_monomial_system(Family::A1);
  int done = 0;
  while (done < 20) {
    Scalar x = f.random_nonzero(rng), y = f.random_nonzero(rng);
    Mat a = evaluate(s.matrix, x, y);
    if (rank(a) < 6) continue;
    std::vector<Mat> words;
    for (const auto& w : s.words) words.push_back(evaluate(w, x, y));
    for (int which = 0; which < 2; ++which) {
      std::vector<Scalar> rhs(6, f.zero());
      if (which == 0)
        for (std::size_t k = 1; k < 6; ++k) rhs[k] = f.one();
      else
        rhs[0] = f.one();
      auto coeffs = solve(a, rhs);
      REQUIRE(coeffs.has_value());
      Mat sum(6, 6, f.zero());
      for (std::size_t k = 0; k < 6; ++k) sum = sum + (*coeffs)[k] * words[k];
      // The combination lives on the cycle and carries the requested entries there.
      const auto& cyc = cycle_positions();
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
          auto at = std::find(cyc.begin(), cyc.end(), std::make_pair(i, j));
          if (at == cyc.end()) CHECK(sum(i, j).is_zero());
          else CHECK(sum(i, j) == rhs[static_cast<std::size_t>(at - cyc.begin())]);
        }
    }
    ++done;
  }
}

TEST_CASE("factorization identities") {
  FactorizationReport r = verify_factorizations();
  CHECK(r.ok());
  CHECK(r.r2_identity);
  CHECK(r.r2_constant == Rational(1));
  CHECK(r.r1_divisible);
  CHECK(r.r3_total_degree == 14);
  CHECK(r.special_pairs_vanish);
  CHECK(r.substitutions.size() == 3);
  CHECK(R1() == (C2 - C1) * (C1 * C1 * C2 - 1) * (C1 * C2 * C2 - 1) * R3());
  CHECK(exact_div(R2(), F3()).has_value());
  CHECK_FALSE(exact_div(R2(), F3_duplicated_term()).has_value());
  CHECK_FALSE(exact_div(R2(), F1() + 1).has_value());
}

TEST_CASE("elimination chains and claims") {
  const EliminationReport& rep = full_report();
  CHECK(rep.a1_matches);
  CHECK(rep.b1_matches);
  REQUIRE(rep.chains.size() == all_chains().size());
  for (const auto& c : rep.chains) {
    INFO(to_string(c.chain.id));
    CHECK(c.chain.univariate);
    CHECK(c.chain.cofactor_check);
    CHECK(c.chain.final_remainder == c.chain.u * c.chain.a0 + c.chain.v * c.chain.b0);
    CHECK(c.verdict.holds);
    if (c.claim.mode == ClaimMode::divisibility_plus_degree) CHECK(c.verdict.residual_degree == c.claim.cofactor_degree);
  }
  CHECK(claim_for(ChainId::R1F3_direct).cofactor_degree == 192);
  CHECK(claim_for(ChainId::R1F3_R3).cofactor_degree == 116);
  REQUIRE(rep.root_set.has_value());
  CHECK(rep.root_set->holds);
  CHECK(rep.all_verified());
}

TEST_CASE("a wrong claim is rejected with a multiplicity diff") {
  ChainResult c = run_sprem_chain(ChainId::R1F1, false);
  MembershipClaim claim = claim_for(ChainId::R1F1);
  REQUIRE_FALSE(claim.product.empty());
  claim.product[0].multiplicity += 1;
  ClaimVerdict v = verify_membership_claim(c, claim);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.multiplicities.empty());
}

TEST_CASE("chain ids") {
  for (ChainId id : all_chains()) CHECK(parse_chain_id(to_string(id)) == id);
  CHECK_FALSE(parse_chain_id("R1F4").has_value());
}

TEST_CASE("exception sets") {
  const EliminationReport& rep = full_report();
  for (std::uint64_t ch : {0ull, 2ull, 3ull, 7ull}) {
    INFO(ch);
    ExceptionSet e = solve_exception_set(ch, rep);
    CHECK(e.matches_catalog);
    std::set<std::string> ours, theirs;
    for (const auto& p : e.pairs) ours.insert(p.str());
    for (const auto& p : excluded_pairs(e.field)) theirs.insert(p.str());
    CHECK(ours == theirs);
    for (const auto& p : e.pairs) CHECK(burnside_span_dim(Rep(family_x(e.field), family_y(p))) < 36);
  }
  CHECK(solve_exception_set(2, rep).pairs.size() == 3);
  CHECK(solve_exception_set(3, rep).pairs.size() == 4);
  CHECK(solve_exception_set(0, rep).pairs.size() == 6);
  EliminationReport partial = run_elimination({ChainId::R1F1}, 1);
  CHECK_THROWS_AS(solve_exception_set(0, partial), EliminationError);
}

TEST_CASE("every chain step re-multiplies exactly") {
  for (const auto& c : full_report().chains) {
    std::map<std::string, LaurentPoly> vals{{c.chain.a0_name, c.chain.a0}, {c.chain.b0_name, c.chain.b0}};
    for (const auto& s : c.chain.steps) {
      const LaurentPoly& a = vals.at(s.dividend);
      const LaurentPoly& b = vals.at(s.divisor);
      CHECK(s.step.m * a == s.step.q * b + s.step.r);
      CHECK(s.step.m == b.leading_coeff(c.chain.var).pow(s.step.divisions));
      vals[s.target] = s.step.r;
    }
    CHECK(vals.at(c.chain.steps.back().target) == c.chain.final_remainder);
  }
}
