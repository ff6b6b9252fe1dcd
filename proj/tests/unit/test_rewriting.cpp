#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "psl2z/rewriting.hpp"

using namespace psl2z;

namespace {

Mat word_matrix(const Word& w, const Mat& a, const Mat& b) {
  Mat m = identity(a.rows(), a(0, 0).field());
  for (char c : w) m = m * (c == 'a' ? a : b);
  return m;
}

// Elements of the matrix monoid generated by a and b, as flattened entry text.
std::size_t matrix_monoid_size(const Mat& a, const Mat& b) {
  std::set<std::vector<std::string>> seen;
  std::vector<Mat> frontier{identity(a.rows(), a(0, 0).field())};
  auto key = [](const Mat& m) {
    std::vector<std::string> k;
    for (const auto& s : oracle::flatten(m)) k.push_back(s.str());
    return k;
  };
  seen.insert(key(frontier[0]));
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& m : frontier)
      for (const Mat* g : {&a, &b}) {
        Mat p = m * *g;
        if (seen.insert(key(p)).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

Mat block(const Field& f, std::vector<long long> two, long long scalar) {
  return from_ints(f, 3, {two[0], two[1], 0, two[2], two[3], 0, 0, 0, scalar});
}

}  // namespace

TEST_CASE("shortlex order") {
  CHECK(shortlex_less("b", "aa"));
  CHECK(shortlex_less("ab", "ba"));
  CHECK_FALSE(shortlex_less("ab", "ab"));
  CHECK(shortlex_less("", "a"));
}

TEST_CASE("preset bounds") {
  MonoidBound cube = monoid_span_bound(MonoidPreset::case234_cube);
  CHECK(cube.exact());
  CHECK(cube.bound == 48);
  MonoidBound center = monoid_span_bound(MonoidPreset::case234_cube_mod_center);
  CHECK(center.exact());
  CHECK(center.bound == 24);
  MonoidBound square = monoid_span_bound(MonoidPreset::case4_square);
  CHECK(square.exact());
  CHECK(square.bound == 18);
  MonoidBound trivial = monoid_span_bound(MonoidPreset::trivial);
  CHECK(trivial.bound == 1);
  CHECK(trivial.normal_forms == std::vector<Word>{""});
}

TEST_CASE("normal forms are irreducible, distinct, and respect the relations") {
  for (MonoidPreset p : {MonoidPreset::case234_cube, MonoidPreset::case234_cube_mod_center, MonoidPreset::case4_square}) {
    RewriteSystem sys = complete(preset_relations(p));
    REQUIRE(sys.confluent);
    MonoidBound b = monoid_span_bound(p);
    std::set<Word> distinct(b.normal_forms.begin(), b.normal_forms.end());
    CHECK(distinct.size() == b.normal_forms.size());
    for (const auto& w : b.normal_forms) CHECK(sys.irreducible(w));
    for (const auto& [l, r] : preset_relations(p)) {
      CHECK(sys.reduce(l) == sys.reduce(r));
      for (const auto& w : b.normal_forms) CHECK(sys.reduce(w + l) == sys.reduce(w + r));
    }
    for (const auto& [l, r] : sys.rules) CHECK(shortlex_less(r, l));
  }
}

TEST_CASE("matrix witnesses meet the bounds") {
  Field f(FieldSpec::prime(7));
  Mat a = block(f, {0, 1, 3, 2}, 3), b = block(f, {2, 2, 5, 0}, 3);
  for (const auto& [l, r] : preset_relations(MonoidPreset::case234_cube))
    CHECK(word_matrix(l, a, b) == word_matrix(r, a, b));
  CHECK(matrix_monoid_size(a, b) == 48);

  Mat s = from_ints(f, 2, {0, 1, 2, 0}), t = from_ints(f, 2, {0, 2, 1, 0});
  for (const auto& [l, r] : preset_relations(MonoidPreset::case4_square))
    CHECK(word_matrix(l, s, t) == word_matrix(r, s, t));
  CHECK(matrix_monoid_size(s, t) == 18);
}

TEST_CASE("infinite monoids hit the length cap") {
  MonoidBound b = monoid_span_bound({{"ba", "ab"}}, 10);
  CHECK(b.confluent);
  CHECK_FALSE(b.finite);
  CHECK_FALSE(b.exact());
  // Normal forms a^i b^j with i + j <= 10.
  CHECK(b.bound == 66);
}

TEST_CASE("preset names") {
  for (MonoidPreset p : {MonoidPreset::case234_cube, MonoidPreset::case234_cube_mod_center, MonoidPreset::case4_square,
                         MonoidPreset::trivial})
    CHECK(parse_monoid_preset(to_string(p)) == p);
  CHECK_THROWS_AS(parse_monoid_preset("cube"), std::invalid_argument);
}
