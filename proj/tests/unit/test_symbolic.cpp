#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "psl2z/laurent.hpp"

using namespace psl2z;

TEST_CASE("canonical text round trip") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    LaurentPoly p = oracle::random_laurent(rng, 6, -4, 4);
    CHECK(LaurentPoly::parse(p.str()) == p);
  }
  CHECK(LaurentPoly::parse("c1-c2").str() == "-1*c2+c1");
  CHECK(LaurentPoly::parse("-c1^2*c2+c1^-1") == LaurentPoly::parse("c1^-1+-1*c1^2*c2"));
  CHECK(LaurentPoly::parse("2*c1*c1") == LaurentPoly::monomial(2, 2, 0));
  CHECK(LaurentPoly::parse("c1+-c1").is_zero());
  CHECK_THROWS_AS(LaurentPoly::parse("c3"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse("c1+"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse(""), ParseError);
}

TEST_CASE("ring identities") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = oracle::random_laurent(rng, 4, -3, 3), b = oracle::random_laurent(rng, 4, -3, 3),
                c = oracle::random_laurent(rng, 4, -3, 3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == LaurentPoly());
  }
  CHECK((C1 + 1).pow(3) == LaurentPoly::parse("c1^3+3*c1^2+3*c1+1"));
  CHECK_THROWS_AS(C1.pow(-1), std::invalid_argument);
  auto huge = LaurentPoly::monomial(1, std::numeric_limits<std::int64_t>::max(), 0);
  CHECK_THROWS(huge * C1);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(23);
  Field f(FieldSpec::prime(10007));
  for (int i = 0; i < 500; ++i) {
    LaurentPoly a = oracle::random_laurent(rng, 5, -3, 3), b = oracle::random_laurent(rng, 5, -3, 3);
    Scalar x = f.random_nonzero(rng), y = f.random_nonzero(rng);
    CHECK(evaluate(a * b, x, y) == evaluate(a, x, y) * evaluate(b, x, y));
    CHECK(evaluate(a + b, x, y) == evaluate(a, x, y) + evaluate(b, x, y));
    CHECK(evaluate(a, x, y) == oracle::eval_naive(a, x, y));
  }
  const Field& q = Field::rationals();
  CHECK(evaluate(LaurentPoly::monomial(1, 1, -1), q.from_int(2), q.from_int(3)) == q.parse("2/3"));
  CHECK_THROWS(evaluate(LaurentPoly::monomial(1, -1, 0), q.zero(), q.one()));
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 500; ++i) {
    LaurentPoly a = oracle::random_laurent(rng, 4, -2, 3), b = oracle::random_laurent(rng, 3, -2, 3);
    if (b.is_zero()) continue;
    auto q = exact_div(a * b, b);
    if ((a * b).is_polynomial() && b.is_polynomial() && !a.is_polynomial()) {
      // Monomial units are not allowed to make polynomial division succeed.
      CHECK_FALSE(q.has_value());
      continue;
    }
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  CHECK_FALSE(exact_div(C1 + 1, C2).has_value());
  CHECK(exact_div(C1 * C2 + C2, C2) == std::optional<LaurentPoly>(C1 + 1));
  CHECK_FALSE(exact_div(C1 * C1 + 1, C1 + 1).has_value());
  CHECK_THROWS_AS(exact_div(C1, LaurentPoly()), std::domain_error);
  CHECK_THROWS_AS(exact_quotient(C1 + 1, C1 - 1), std::domain_error);
}

TEST_CASE("sprem re-multiplication") {
  std::mt19937_64 rng(25);
  int checked = 0;
  while (checked < 200) {
    LaurentPoly a = oracle::random_laurent(rng, 6, 0, 5), b = oracle::random_laurent(rng, 4, 0, 3);
    Var v = checked % 2 ? Var::c1 : Var::c2;
    if (b.degree(v) <= 0 || a.is_zero()) continue;
    SpremStep s = sprem(a, b, v);
    CHECK(s.m * a == s.q * b + s.r);
    CHECK((s.r.is_zero() || s.r.degree(v) < b.degree(v)));
    CHECK(s.m == b.leading_coeff(v).pow(s.divisions));
    ++checked;
  }
  SpremStep s = sprem(C1 * C2 * C2 + 1, C2 - C1, Var::c2);
  CHECK(s.m == LaurentPoly(1));
  CHECK(s.q == C1 * C2 + C1 * C1);
  CHECK(s.r == C1.pow(3) + 1);
  CHECK_THROWS(sprem(C2, C1 + 1, Var::c2));
  CHECK_THROWS(sprem(LaurentPoly::monomial(1, 0, -1), C2 + 1, Var::c2));
}

TEST_CASE("univariate gcd") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 100; ++i) {
    auto f = oracle::random_laurent(rng, 3, 0, 4, 5);
    auto g = oracle::random_laurent(rng, 3, 0, 4, 5);
    auto h = oracle::random_laurent(rng, 3, 0, 4, 5);
    // Univariate in c1 with a nonzero constant term.
    f = f.coeff(Var::c2, 0).shifted(1, 0) + C1.pow(5) + 1;
    g = g.coeff(Var::c2, 0).shifted(1, 0) + 1;
    h = h.coeff(Var::c2, 0).shifted(1, 0) + 2;
    LaurentPoly a = f * g, b = f * h;
    LaurentPoly d = gcd_univariate(a, b, Var::c1);
    CHECK(exact_div(a, d).has_value());
    CHECK(exact_div(b, d).has_value());
    CHECK(exact_div(d, f).has_value());
    LaurentPoly rest = gcd_univariate(exact_quotient(a, d), exact_quotient(b, d), Var::c1);
    CHECK(rest.is_constant());
  }
  CHECK(gcd_univariate((C1 - 1) * (C1 + 2), (C1 - 1) * (C1 + 3), Var::c1) == C1 - 1);
  CHECK(gcd_univariate((C2 * C2 - 1) * C1, C2 + 1, Var::c2) == C2 + 1);
}

TEST_CASE("degrees and coefficients") {
  LaurentPoly p = LaurentPoly::parse("3*c1^2*c2^-1+c1*c2^4-7");
  CHECK(p.degree(Var::c1) == 2);
  CHECK(p.min_degree(Var::c2) == -1);
  CHECK(p.total_degree() == 5);
  CHECK(p.coeff(Var::c1, 2) == LaurentPoly::monomial(3, 0, -1));
  CHECK(p.leading_coeff(Var::c2) == C1);
  CHECK_FALSE(p.is_polynomial());
  CHECK(p.is_polynomial_in(Var::c1));
  CHECK(LaurentPoly::parse("6*c1+4").content() == 2);
  CHECK(LaurentPoly::parse("-6*c1+4").primitive() == LaurentPoly::parse("3*c1-2"));
}
