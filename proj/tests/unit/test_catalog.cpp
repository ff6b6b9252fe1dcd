#include <doctest.h>

#include "oracles.hpp"
#include "psl2z/catalog.hpp"

using namespace psl2z;

TEST_CASE("catalog size per characteristic") {
  CHECK(enumerate_catalog(Field::rationals()).finite.size() == 11);
  CHECK(enumerate_catalog(Field(FieldSpec::prime(7))).finite.size() == 11);
  CHECK(enumerate_catalog(Field(FieldSpec::prime(2))).finite.size() == 6);
  CHECK(enumerate_catalog(Field(FieldSpec::prime(3))).finite.size() == 4);
  CHECK(enumerate_catalog(Field(FieldSpec::prime(3))).family_exclusions.size() == 4);
  CHECK(enumerate_catalog(Field(FieldSpec::cube_roots(0))).family_exclusions.size() == 6);

  auto q = enumerate_catalog(Field::rationals());
  std::size_t ext = 0;
  for (const auto& e : q.finite) ext += e.requires_extension;
  CHECK(ext == 7);
}

TEST_CASE("admissibility") {
  CHECK_FALSE(admissible(CatalogLabel::three(1), 2));
  CHECK_FALSE(admissible(CatalogLabel::one(-1, 0), 2));
  CHECK_FALSE(admissible(CatalogLabel::two(Dim2Variant::one_zeta), 3));
  CHECK(admissible(CatalogLabel::three(-1), 3));
  CHECK_THROWS_AS(make_catalog_rep(CatalogLabel::two(Dim2Variant::one_zeta), Field::rationals()), InadmissibleLabel);
  CHECK_THROWS_AS(make_catalog_rep(CatalogLabel::three(1), Field(FieldSpec::prime(2))), InadmissibleLabel);
  CHECK_NOTHROW(make_catalog_rep(CatalogLabel::two(Dim2Variant::zeta_zeta2), Field(FieldSpec::prime(7))));
}

TEST_CASE("every finite entry is valid and irreducible") {
  for (std::uint64_t ch : {0ull, 2ull, 3ull, 7ull}) {
    Field f(ch == 0 ? FieldSpec::cube_roots(0) : ch == 2 ? FieldSpec::cube_roots(2) : FieldSpec::prime(ch));
    for (const auto& e : enumerate_catalog(f).finite) {
      Rep r = make_catalog_rep(e.label, f);
      CHECK(validate(r).in_hypothesis());
      CHECK(burnside_span_dim(r) == r.dim() * r.dim());
    }
  }
}

TEST_CASE("family members and exclusions") {
  std::mt19937_64 rng(41);
  Field f(FieldSpec::prime(10007));
  for (int i = 0; i < 20; ++i) {
    ParamPair p = oracle::random_valid_pair(f, rng);
    Rep r(family_x(f), family_y(p));
    ValidationReport v = validate(r);
    CHECK(v.in_hypothesis());
    CHECK(burnside_span_dim(r) == 36);
  }
  for (std::uint64_t ch : {0ull, 2ull, 3ull, 7ull}) {
    Field g = ch == 0 || ch == 2 ? Field(FieldSpec::cube_roots(ch)) : Field(FieldSpec::prime(ch));
    for (const auto& p : excluded_pairs(g)) {
      CHECK(param_excluded(p));
      CHECK(burnside_span_dim(Rep(family_x(g), family_y(p))) < 36);
    }
  }
  CHECK_THROWS(ParamPair(f.zero(), f.one()));
}

TEST_CASE("orbit intertwiners") {
  std::mt19937_64 rng(42);
  Field f(FieldSpec::prime(10007));
  for (int i = 0; i < 50; ++i) {
    ParamPair p = oracle::random_valid_pair(f, rng);
    Mat x = family_x(f), y = family_y(p);
    auto images = orbit(p);
    REQUIRE(images.size() == 6);
    CHECK(images[0] == p);
    for (int k = 1; k <= 6; ++k) {
      Mat q = intertwiner_Q(k, p);
      CHECK(rank(q) == 6);
      CHECK(q * x == x * q);
      CHECK(q * y == family_y(orbit_map(k, p)) * q);
      CHECK(canonical_param(orbit_map(k, p)) == canonical_param(p));
    }
  }
}

TEST_CASE("dims 1 to 3 are separated by traces") {
  Field f(FieldSpec::prime(7));
  auto listing = enumerate_catalog(f);
  std::vector<std::pair<Scalar, Scalar>> seen;
  for (const auto& e : listing.finite) {
    Rep r = make_catalog_rep(e.label, f);
    seen.emplace_back(trace(r.X()), trace(r.Y()));
  }
  for (std::size_t i = 0; i < listing.finite.size(); ++i)
    for (std::size_t j = i + 1; j < listing.finite.size(); ++j) {
      Rep a = make_catalog_rep(listing.finite[i].label, f), b = make_catalog_rep(listing.finite[j].label, f);
      if (a.dim() == b.dim()) CHECK(seen[i] != seen[j]);
    }
}

TEST_CASE("classification round trip") {
  std::mt19937_64 rng(43);
  Field f(FieldSpec::prime(10007));
  for (int i = 0; i < 20; ++i) {
    ParamPair p = oracle::random_valid_pair(f, rng);
    Rep r = Rep(family_x(f), family_y(p)).conjugated(oracle::random_monomial(f, 6, rng));
    ClassificationResult c = classify(r);
    REQUIRE(c.status == ClassificationStatus::classified);
    REQUIRE(c.canonical_params.has_value());
    CHECK(*c.canonical_params == canonical_param(p));
    REQUIRE(c.witness.has_value());
    Mat w = *c.witness;
    Rep target = make_catalog_rep(*c.label, f);
    CHECK(w * r.X() == target.X() * w);
    CHECK(w * r.Y() == target.Y() * w);
  }
  Field g(FieldSpec::prime(7));
  for (const auto& e : enumerate_catalog(g).finite) {
    Rep r = make_catalog_rep(e.label, g);
    Rep moved = r.conjugated(oracle::random_monomial(g, r.dim(), rng));
    ClassificationResult c = classify(moved);
    REQUIRE(c.status == ClassificationStatus::classified);
    CHECK(*c.label == e.label);
  }
  Rep reducible(family_x(g), family_y(ParamPair(g.one(), g.one())));
  CHECK(classify(reducible).status == ClassificationStatus::reducible);
}

TEST_CASE("canonical representatives") {
  std::mt19937_64 rng(44);
  Field f(FieldSpec::prime(10007));
  for (int i = 0; i < 100; ++i) {
    ParamPair p = oracle::random_valid_pair(f, rng);
    ParamPair c = canonical_param(p);
    CHECK(canonical_param(c) == c);
    for (const auto& m : orbit(p)) CHECK(canonical_param(m) == c);
  }
  const Field& q = Field::rationals();
  ParamPair p(q.from_int(2), q.from_int(3));
  CHECK(orbit_map(2, p) == ParamPair(q.parse("1/2"), q.parse("1/3")));
  CHECK(orbit_map(6, p) == ParamPair(q.from_int(6), q.parse("1/2")));
  CHECK_THROWS_AS(orbit_map(0, p), std::out_of_range);
}

TEST_CASE("general conjugation leaves the hypothesis") {
  std::mt19937_64 rng(45);
  const Field& q = Field::rationals();
  Rep r = Rep(family_x(q), family_y(ParamPair(q.from_int(2), q.from_int(3)))).conjugated(oracle::random_invertible(q, 6, rng));
  CHECK(validate(r).relations_hold());
  CHECK(classify(r).status == ClassificationStatus::outside_hypothesis);
  Rep broken(from_ints(q, 2, {1, 1, 0, 1}), from_ints(q, 2, {1, 0, 0, 1}));
  CHECK_THROWS_AS(classify(broken), ValidationFailure);
}
