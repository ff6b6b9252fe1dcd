#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "psl2z/json_io.hpp"

namespace psl2z::cli {

struct SuiteOptions {
  std::optional<std::uint64_t> characteristic;  // restrict to one characteristic
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t sweep = 50;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  Json detail;
};

// Q, Q(zeta), GF(7), GF(2)(zeta), GF(3), GF(10007), or the ones matching the characteristic.
std::vector<Field> sweep_fields(const std::optional<std::uint64_t>& characteristic);

// Every valid pair when the field has at most 64 elements.
std::optional<std::vector<ParamPair>> small_field_pairs(const Field& f);
ParamPair random_valid_pair(const Field& f, std::mt19937_64& rng);

// Listing plus relation and span checks per entry; samples random family members as well.
Json catalog_report(const Field& f, std::size_t samples, std::mt19937_64& rng, bool& pass);

// Orbit images, the six witnesses, and a canonical representative for one pair.
Json orbit_report(const ParamPair& p, bool& pass);

SuiteResult suite_catalog(const SuiteOptions& o);
SuiteResult suite_orbits(const SuiteOptions& o);
SuiteResult suite_census(const SuiteOptions& o);
SuiteResult suite_monoid(const SuiteOptions& o);
SuiteResult suite_elimination(const SuiteOptions& o);

}  // namespace psl2z::cli
