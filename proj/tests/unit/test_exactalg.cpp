#include <doctest.h>

#include "oracles.hpp"
#include "psl2z/laurent.hpp"
#include "psl2z/matrix.hpp"
#include "psl2z/rep.hpp"

using namespace psl2z;

namespace {

std::vector<Field> test_fields() {
  return {Field(FieldSpec::rationals()), Field(FieldSpec::cube_roots(0)), Field(FieldSpec::prime(7)),
          Field(FieldSpec::cube_roots(2)), Field(FieldSpec::prime(3)),   Field(FieldSpec::prime(10007))};
}

template <class T>
concept HasNullspace = requires(const Matrix<T>& m) { nullspace(m); };

}  // namespace

static_assert(RingElement<LaurentPoly>);
static_assert(!FieldElement<LaurentPoly>);
static_assert(FieldElement<Scalar>);
static_assert(HasNullspace<Scalar>);
static_assert(!HasNullspace<LaurentPoly>, "nullspace needs division");

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("12")) == "12");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("3x"), ParseError);
  CHECK(reduce_mod(parse_rational("1/2"), 7) == 4);
  CHECK(reduce_mod(parse_rational("-1"), 7) == 6);
  CHECK_THROWS_AS(reduce_mod(parse_rational("1/7"), 7), std::domain_error);
}

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == oracle::trial_prime(n));
  CHECK(is_prime(4611686018427387847ULL));
  CHECK_FALSE(is_prime(4611686018427387847ULL * 3));
}

TEST_CASE("field construction") {
  CHECK_THROWS_AS(Field(FieldSpec::prime(4)), FieldError);
  CHECK_THROWS_AS(Field(FieldSpec{0, {-1, 0, 1}, ""}), FieldError);   // x^2 - 1
  CHECK_THROWS_AS(Field(FieldSpec::cube_roots(7)), FieldError);      // splits mod 7
  CHECK_THROWS_AS(Field(FieldSpec{0, {4, 0, 5, 0, 1}, ""}), FieldError);  // (x^2+1)(x^2+4)
  CHECK_THROWS_AS(Field(FieldSpec{0, {1, 2}, ""}), FieldError);      // not monic
  CHECK_NOTHROW(Field(FieldSpec{3, {1, 0, 1}, ""}));
  CHECK_NOTHROW(Field(FieldSpec{0, {2, 0, 0, 1}, ""}));               // cube root of 2
}

TEST_CASE("cube roots of unity") {
  for (const Field& f : test_fields()) {
    auto z = f.zeta();
    if (f.characteristic() == 3 || (f.degree() == 1 && f.characteristic() % 3 != 1)) {
      CHECK_FALSE(z.has_value());
      continue;
    }
    REQUIRE(z.has_value());
    CHECK_FALSE(z->is_one());
    CHECK(z->pow(3).is_one());
  }
  CHECK(Field(FieldSpec::cube_roots(0)).zeta()->str() == "z");
  CHECK(Field(FieldSpec::prime(7)).zeta()->str() == "4");
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (const Field& f : test_fields()) {
    CAPTURE(f.name());
    for (int i = 0; i < 1000; ++i) {
      Scalar a = f.random(rng), b = f.random(rng), c = f.random(rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == f.zero());
      REQUIRE(a * f.one() == a);
      if (!a.is_zero()) {
        REQUIRE(a * a.inverse() == f.one());
        REQUIRE((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("prime field arithmetic matches machine integers") {
  std::mt19937_64 rng(5);
  const std::uint64_t p = 10007;
  Field f(FieldSpec::prime(p));
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t a = d(rng), b = d(rng);
    Scalar x = f.from_int(static_cast<long long>(a)), y = f.from_int(static_cast<long long>(b));
    CHECK((x * y).str() == std::to_string(oracle::mul_mod(a, b, p)));
    CHECK((x + y).str() == std::to_string((a + b) % p));
    if (a) CHECK(x.inverse().str() == std::to_string(oracle::pow_mod(a, p - 2, p)));
  }
}

TEST_CASE("Q(zeta) multiplication follows z^2 = -1 - z") {
  std::mt19937_64 rng(6);
  Field f(FieldSpec::cube_roots(0));
  std::uniform_int_distribution<int> d(-20, 20);
  for (int i = 0; i < 500; ++i) {
    long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    Scalar x = f.element({a, b}), y = f.element({c, e});
    CHECK(x * y == f.element({a * c - b * e, a * e + b * c - b * e}));
  }
}

TEST_CASE("scalar text round trip") {
  std::mt19937_64 rng(8);
  for (const Field& f : test_fields())
    for (int i = 0; i < 200; ++i) {
      Scalar a = f.random(rng);
      CHECK(f.parse(a.str()) == a);
    }
  Field q(FieldSpec::cube_roots(0));
  CHECK(q.parse("3/2*z^2").str() == "-3/2+-3/2*z");
  CHECK(q.parse("z^-1") == q.parse("z^2"));
  CHECK(q.parse("-1-z") == q.parse("z^2"));
  CHECK(q.parse("-z-1") == q.parse("-1+-1*z"));
  CHECK(q.parse("2-3*z") == q.element({2, -3}));
  CHECK_THROWS_AS(q.parse("1-"), ParseError);
  CHECK_THROWS_AS(q.parse("1*-z"), ParseError);
  CHECK_THROWS_AS(Field::rationals().parse("z"), ParseError);
  CHECK_THROWS_AS(Field(FieldSpec::prime(7)).parse("1/7"), ParseError);
}

TEST_CASE("mixing fields is rejected") {
  Field a(FieldSpec::prime(7)), b(FieldSpec::prime(11));
  CHECK_THROWS(a.one() + b.one());
  CHECK_THROWS((void)(a.one() == b.one()));
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(12);
  auto fields = test_fields();
  for (int i = 0; i < 200; ++i) {
    const Field& f = fields[static_cast<std::size_t>(i) % fields.size()];
    std::size_t n = 1 + static_cast<std::size_t>(i % 5);
    Mat a = oracle::random_matrix(f, n, rng), b = oracle::random_matrix(f, n, rng);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(i % 6);
    Field f = i % 2 ? Field(FieldSpec::prime(7)) : Field(FieldSpec::rationals());
    Mat a = oracle::random_matrix(f, n, rng);
    CHECK(det_bareiss(a) == det_cofactor(a));
    CHECK(det_gauss(a) == det_cofactor(a));
  }
  std::mt19937_64 prng(14);
  for (int i = 0; i < 10; ++i) {
    Matrix<LaurentPoly> m(4, 4, LaurentPoly(0));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = oracle::random_laurent(prng, 3, 0, 2, 3);
    CHECK(det_bareiss(m) == det_cofactor(m));
  }
}

TEST_CASE("rank, nullspace, inverse, solve") {
  std::mt19937_64 rng(15);
  Field f(FieldSpec::prime(10007));
  for (int i = 0; i < 50; ++i) {
    Mat a = oracle::random_matrix(f, 5, rng);
    Mat b(5, 5, f.zero());
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) b(r, c) = r < 3 ? a(r, c) : a(r - 3, c) + a(r - 2, c);
    CHECK(rank(b) <= 3);
    auto ns = nullspace(b);
    CHECK(rank(b) + ns.size() == 5);
    for (const auto& v : ns)
      for (const auto& x : psl2z::apply(b, v)) CHECK(x.is_zero());
    if (rank(a) == 5) {
      CHECK((inverse(a) * a).is_identity());
      std::vector<Scalar> rhs{f.one(), f.zero(), f.from_int(2), f.zero(), f.one()};
      auto sol = solve(a, rhs);
      REQUIRE(sol);
      CHECK(psl2z::apply(a, *sol) == rhs);
    }
  }
  Mat sing = from_ints(f, 2, {1, 2, 2, 4});
  CHECK_THROWS_AS(inverse(sing), SingularMatrixError);
  CHECK_FALSE(solve(sing, {f.one(), f.zero()}).has_value());
  CHECK_THROWS_AS(Mat(2, 3, f.zero()) * Mat(2, 3, f.zero()), ShapeError);
}
