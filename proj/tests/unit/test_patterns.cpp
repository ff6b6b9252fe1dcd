#include <doctest.h>

#include "oracles.hpp"
#include "psl2z/patterns.hpp"

using namespace psl2z;

namespace {

ZeroPattern random_mask(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution bit(density);
  ZeroPattern z(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z.set(i, j, bit(rng));
  return z;
}

Mat on_mask(const ZeroPattern& z, const Field& f, std::mt19937_64& rng) {
  Mat m(z.size(), z.size(), f.zero());
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j)
      if (z(i, j)) m(i, j) = f.random_nonzero(rng);
  return m;
}

}  // namespace

TEST_CASE("eigenvalue pattern feasibility") {
  CHECK(eigenpattern_feasible({{0, 0, 0}, {0}}) == PatternVerdict::infeasible_scalar);
  CHECK(eigenpattern_feasible({{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}}) == PatternVerdict::monomial);
  CHECK(eigenpattern_feasible({{0, 0, 0, 1, 1, 1}, {1, 0}}) == PatternVerdict::needs_monoid_bound);
  CHECK(eigenpattern_feasible({{0, 1, 2, 3}, {0, 1, 2, 3}}) == PatternVerdict::infeasible_inverse);
  CHECK(eigenpattern_feasible({{0, 0, 1, 2}, {1, 0, 2}}) == PatternVerdict::infeasible_inverse);
  CHECK(eigenpattern_feasible({{0, 0, 0, 0, 1, 2}, {0, 2, 1}}) == PatternVerdict::needs_census);
  CHECK(eigenpattern_feasible({{0, 0, 0, 0, 1, 2}, {0, 2, 1}}, 1) == PatternVerdict::needs_census);
  CHECK(eigenpattern_feasible({{0, 0, 1, 1, 2, 3}, {0, 1, 3, 2}}, 1) == PatternVerdict::infeasible_inverse);
  CHECK_THROWS_AS(EigenPattern({{0, 2}, {0, 1}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(EigenPattern({{0, 1}, {1, 1}}).validate(), std::invalid_argument);
}

TEST_CASE("arrangement enumeration matches a brute-force recount") {
  for (CaseId c : all_cases()) {
    EigenPattern p = case_pattern(c);
    auto ours = enumerate_gamma_arrangements(p);
    auto ref = oracle::arrangements(p.classes);
    CHECK(ours.size() == ref.size());
    CHECK(std::set<std::vector<int>>(ours.begin(), ours.end()) == ref);
    CHECK(std::is_sorted(ours.begin(), ours.end()));
  }
}

TEST_CASE("arrangement counts are multinomial for every shape") {
  // Partitions of 6 into at most 5 parts.
  std::vector<std::vector<int>> shapes{{5, 1}, {4, 2}, {3, 3}, {4, 1, 1}, {3, 2, 1}, {2, 2, 2}, {3, 1, 1, 1}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}};
  auto fact = [](int n) { std::size_t r = 1; for (int k = 2; k <= n; ++k) r *= static_cast<std::size_t>(k); return r; };
  for (const auto& shape : shapes) {
    EigenPattern p;
    std::size_t expect = fact(6);
    for (std::size_t c = 0; c < shape.size(); ++c) {
      p.classes.insert(p.classes.end(), static_cast<std::size_t>(shape[c]), static_cast<int>(c));
      p.inverse.push_back(-1);
      expect /= fact(shape[c]);
    }
    CHECK(enumerate_gamma_arrangements(p).size() == expect);
  }
}

TEST_CASE("masks follow simultaneous relabeling") {
  std::mt19937_64 rng(54);
  for (CaseId c : all_cases()) {
    EigenPattern p = case_pattern(c);
    for (const auto& g : enumerate_gamma_arrangements(p)) {
      std::vector<std::size_t> perm(6);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      EigenPattern q = p;
      GammaArrangement h(6);
      for (std::size_t i = 0; i < 6; ++i) {
        q.classes[perm[i]] = p.classes[i];
        h[perm[i]] = g[i];
      }
      MaskPair a = derive_zero_patterns(p, g), b = derive_zero_patterns(q, h);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
          CHECK(a.x(i, j) == b.x(perm[i], perm[j]));
          CHECK(a.y(i, j) == b.y(perm[i], perm[j]));
        }
    }
  }
}

TEST_CASE("mask derivation") {
  EigenPattern p = case_pattern(CaseId::case7);
  MaskPair m = derive_zero_patterns(p, p.classes);
  // Class 0 is self-inverse, classes 1 and 2 are mutual inverses.
  CHECK(m.x.rows() == std::vector<std::string>{"110000", "110000", "000011", "000011", "001100", "001100"});
  CHECK(m.y.rows() == std::vector<std::string>{"110000", "110000", "000011", "000011", "001100", "001100"});
  CHECK(ZeroPattern::identity(3).count() == 3);
  CHECK(ZeroPattern::full(3).count() == 9);
  CHECK(ZeroPattern::from_rows({"10", "01"}) == ZeroPattern::identity(2));
  CHECK_THROWS(ZeroPattern::from_rows({"10", "0"}));
}

TEST_CASE("perfect matching agrees with brute force") {
  for (CaseId c : all_cases()) {
    EigenPattern p = case_pattern(c);
    for (const auto& g : enumerate_gamma_arrangements(p)) {
      MaskPair m = derive_zero_patterns(p, g);
      CHECK(has_perfect_matching(m.x) == oracle::brute_matching(m.x));
      CHECK(has_perfect_matching(m.y) == oracle::brute_matching(m.y));
    }
  }
  std::mt19937_64 rng(51);
  for (int i = 0; i < 500; ++i) {
    ZeroPattern z = random_mask(2 + static_cast<std::size_t>(i % 6), 0.35, rng);
    CHECK(has_perfect_matching(z) == oracle::brute_matching(z));
  }
}

TEST_CASE("closure bound agrees with word supports") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 2 + static_cast<std::size_t>(i % 5);
    ZeroPattern x = random_mask(n, 0.25, rng), y = random_mask(n, 0.25, rng);
    CHECK(closure_span_bound(x, y) == oracle::word_support(x, y));
  }
}

TEST_CASE("closure bound is sound for concrete matrices") {
  std::mt19937_64 rng(53);
  Field f(FieldSpec::prime(10007));
  int checked = 0;
  for (CaseId c : all_cases()) {
    EigenPattern p = case_pattern(c);
    for (const auto& g : enumerate_gamma_arrangements(p)) {
      if (checked >= 50) break;
      MaskPair m = derive_zero_patterns(p, g);
      if (!has_perfect_matching(m.x) || !has_perfect_matching(m.y)) continue;
      Mat x = on_mask(m.x, f, rng), y = on_mask(m.y, f, rng);
      CHECK(burnside_span_dim(Rep(x, y)) <= closure_span_bound(m.x, m.y));
      ++checked;
    }
  }
  CHECK(checked == 50);
}

TEST_CASE("census counts") {
  struct Expect {
    CaseId id;
    std::size_t arrangements, nonsingular;
  };
  for (Expect e : {Expect{CaseId::case5, 30, 14}, Expect{CaseId::case7, 90, 22}, Expect{CaseId::case8, 120, 20},
                   Expect{CaseId::case9a, 180, 20}, Expect{CaseId::case9b, 180, 44}, Expect{CaseId::case10, 360, 24}}) {
    CaseReport r = run_case_census(e.id);
    CHECK(r.arrangement_count == e.arrangements);
    CHECK(r.nonsingular_count == e.nonsingular);
    CHECK(r.golden_match());
    CHECK(r.survivor_count <= r.nonsingular_count);
    CHECK(r.nonsingular_count <= r.arrangement_count);
    CHECK(r.survivors_match());

    // Independent recount of nonsingular arrangements.
    std::size_t nonsingular = 0;
    for (const auto& g : oracle::arrangements(r.pattern.classes)) {
      MaskPair m = derive_zero_patterns(r.pattern, g);
      nonsingular += oracle::brute_matching(m.x) && oracle::brute_matching(m.y);
    }
    CHECK(nonsingular == e.nonsingular);
  }
}

TEST_CASE("characteristic two rejects patterns with two self-inverse classes") {
  CaseReport r = run_case_census(CaseId::case9a, 2);
  CHECK(r.survivor_count == 0);
  for (const auto& d : r.arrangements) CHECK(d.verdict == "infeasible-pattern");
  CHECK(run_case_census(CaseId::case5, 2).survivor_count == 12);
}

TEST_CASE("case ids") {
  CHECK(parse_case_id("9b") == CaseId::case9b);
  CHECK_FALSE(parse_case_id("6").has_value());
  CHECK(to_string(CaseId::case10) == "10");
  EigenPattern p = case_pattern(CaseId::case5);
  CHECK(arrangement_text(p, p.classes) == "(l1,l1,l1,l1,l5,l6)");
}
