#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "psl2z/json_io.hpp"

using namespace psl2z;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(PSL2Z_GOLDEN_DIR) + "/reps/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_location(const std::string& text) {
  try {
    parse_rep(text);
  } catch (const RepFileError& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST_CASE("rep round trip") {
  std::mt19937_64 rng(71);
  for (Field f : {Field(FieldSpec::rationals()), Field(FieldSpec::cube_roots(0)), Field(FieldSpec::prime(10007)),
                  Field(FieldSpec::cube_roots(2))}) {
    for (int i = 0; i < 10; ++i) {
      Rep r(oracle::random_matrix(f, 3, rng), oracle::random_matrix(f, 3, rng));
      Rep back = parse_rep(rep_to_json(r).dump());
      CHECK(back.field() == f);
      CHECK(back.X() == r.X());
      CHECK(back.Y() == r.Y());
    }
  }
}

TEST_CASE("golden rep files") {
  Rep r = parse_rep(read_golden("dim3_plus.json"));
  CHECK(r.dim() == 3);
  CHECK(validate(r).in_hypothesis());
  CHECK(error_location(read_golden("malformed.json")) == "line 5");
  CHECK(error_location(read_golden("bad_scalar.json")).rfind("/", 0) == 0);
}

TEST_CASE("error locations") {
  CHECK(error_location(R"({"field":{"char":0},"n":2,"X":[["1","0"],["0","1"]]})") == "/Y");
  CHECK(error_location(R"({"field":{"char":0},"n":2,"X":[["1","0"],["0"]],"Y":[["1","0"],["0","1"]]})") == "/X/1");
  CHECK(error_location(R"({"field":{"char":0},"n":2,"X":[["1","0"],["0","1"]],"Y":[["q","0"],["0","1"]]})") == "/Y/0/0");
  CHECK(error_location(R"({"field":{"char":4},"n":1,"X":[["1"]],"Y":[["1"]]})") == "/field");
  CHECK(error_location(R"({"field":{"char":-1},"n":1,"X":[["1"]],"Y":[["1"]]})") == "/field/char");
  CHECK(error_location(R"({"field":{"char":0},"n":0,"X":[],"Y":[]})") == "/n");
  CHECK(error_location("{\n\"field\": }") == "line 2");
}

TEST_CASE("field descriptions") {
  Field z = field_from_json(Json{{"char", 0}, {"extension", {1, 1, 1}}});
  CHECK(z.degree() == 2);
  CHECK(z.zeta().has_value());
  CHECK(field_from_json(field_to_json(z)) == z);
  CHECK(field_from_json(Json{{"char", 7}}).characteristic() == 7);
}

TEST_CASE("report shapes") {
  Json c = to_json(run_case_census(CaseId::case5), false);
  CHECK(c["case"] == "5");
  CHECK(c["arrangements"] == 30);
  CHECK(c["nonsingular"] == 14);
  CHECK_FALSE(c.contains("detail"));
  CHECK(to_json(run_case_census(CaseId::case5))["detail"].size() == 30);

  Json m = to_json(monoid_span_bound(MonoidPreset::case4_square));
  CHECK(m["bound"] == 18);

  const Field& q = Field::rationals();
  Json p = to_json(ParamPair(q.from_int(2), q.parse("1/3")));
  CHECK(p == Json::array({"2", "1/3"}));

  Json listing = to_json(enumerate_catalog(q));
  CHECK(listing["finite"].size() == 11);
  CHECK(listing["family"]["dim"] == 6);
}
