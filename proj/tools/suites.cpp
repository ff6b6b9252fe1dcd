#include "suites.hpp"

#include <algorithm>

namespace psl2z::cli {

std::vector<Field> sweep_fields(const std::optional<std::uint64_t>& characteristic) {
  std::vector<FieldSpec> specs{FieldSpec::rationals(),  FieldSpec::cube_roots(0), FieldSpec::prime(7),
                               FieldSpec::cube_roots(2), FieldSpec::prime(3),      FieldSpec::prime(10007)};
  std::vector<Field> out;
  for (auto& s : specs)
    if (!characteristic || s.characteristic == *characteristic) out.emplace_back(s);
  if (out.empty() && characteristic) out.push_back(exception_field(*characteristic));
  return out;
}

std::optional<std::vector<ParamPair>> small_field_pairs(const Field& f) {
  std::uint64_t p = f.characteristic();
  if (p == 0) return std::nullopt;
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    order *= p;
    if (order > 64) return std::nullopt;
  }
  std::vector<Scalar> nonzero;
  for (std::uint64_t k = 1; k < order; ++k) {
    std::vector<Rational> coords;
    for (std::uint64_t r = k; coords.size() < f.degree(); r /= p) coords.emplace_back(static_cast<unsigned long>(r % p));
    nonzero.push_back(f.element(coords));
  }
  std::vector<ParamPair> out;
  for (const auto& a : nonzero)
    for (const auto& b : nonzero) {
      ParamPair q(a, b);
      if (!param_excluded(q)) out.push_back(q);
    }
  return out;
}

ParamPair random_valid_pair(const Field& f, std::mt19937_64& rng) {
  if (auto all = small_field_pairs(f)) {
    if (all->empty()) throw std::invalid_argument("field " + f.name() + " has no valid family parameters");
    return (*all)[std::uniform_int_distribution<std::size_t>(0, all->size() - 1)(rng)];
  }
  while (true) {
    ParamPair p(f.random_nonzero(rng), f.random_nonzero(rng));
    if (!param_excluded(p)) return p;
  }
}

namespace {

Json check_rep(const Rep& r, bool& pass) {
  ValidationReport v = validate(r);
  std::size_t span = burnside_span_dim(r);
  bool ok = v.in_hypothesis() && span == r.dim() * r.dim();
  pass = pass && ok;
  return {{"relations", v.relations_hold()},
          {"commutators_diagonal", v.lambda_diagonal && v.gamma_diagonal},
          {"span", span},
          {"irreducible", span == r.dim() * r.dim()},
          {"ok", ok}};
}

}  // namespace

Json catalog_report(const Field& f, std::size_t samples, std::mt19937_64& rng, bool& pass) {
  CatalogListing listing = enumerate_catalog(f);
  Json j = to_json(listing);
  j["field"] = f.name();
  Json& entries = j["finite"];
  for (std::size_t i = 0; i < listing.finite.size(); ++i) {
    const auto& e = listing.finite[i];
    Field host = e.requires_extension ? Field(FieldSpec::cube_roots(f.characteristic())) : f;
    entries[i]["checked_in"] = host.name();
    entries[i]["check"] = check_rep(make_catalog_rep(e.label, host), pass);
  }
  Json excluded = Json::array();
  for (const auto& p : excluded_pairs(f)) {
    Rep r(family_x(f), family_y(p));
    std::size_t span = burnside_span_dim(r);
    bool ok = validate(r).in_hypothesis() && span < 36;
    pass = pass && ok;
    excluded.push_back({{"params", to_json(p)}, {"span", span}, {"ok", ok}});
  }
  j["family"]["excluded_checks"] = excluded;
  std::size_t failures = 0;
  auto small = small_field_pairs(f);
  if (small && small->empty()) samples = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    ParamPair p = random_valid_pair(f, rng);
    bool ok = true;
    check_rep(Rep(family_x(f), family_y(p)), ok);
    if (!ok) ++failures;
  }
  pass = pass && failures == 0;
  j["family"]["samples"] = samples;
  j["family"]["sample_failures"] = failures;
  return j;
}

Json orbit_report(const ParamPair& p, bool& pass) {
  Json j;
  j["params"] = to_json(p);
  j["excluded"] = param_excluded(p);
  j["canonical"] = to_json(canonical_param(p));
  Json images = Json::array();
  const Field& f = p.field();
  Mat x = family_x(f);
  for (int i = 1; i <= 6; ++i) {
    ParamPair q = orbit_map(i, p);
    Mat w = intertwiner_Q(i, p);
    bool witness = rank(w) == 6 && w * x == x * w && w * family_y(p) == family_y(q) * w;
    pass = pass && witness;
    images.push_back({{"map", i}, {"params", to_json(q)}, {"witness", witness}});
  }
  j["orbit"] = images;
  return j;
}

SuiteResult suite_catalog(const SuiteOptions& o) {
  SuiteResult r{"catalog", true, Json::array()};
  std::mt19937_64 rng(o.seed);
  for (const Field& f : sweep_fields(o.characteristic)) r.detail.push_back(catalog_report(f, 100, rng, r.pass));
  return r;
}

namespace {

Field orbit_field(const SuiteOptions& o) {
  if (!o.characteristic) return Field(FieldSpec::prime(10007));
  // GF(3) has no valid parameters; GF(9) does.
  if (*o.characteristic == 3) return Field(FieldSpec{3, {1, 0, 1}, ""});
  return sweep_fields(o.characteristic).back();
}

}  // namespace

SuiteResult suite_orbits(const SuiteOptions& o) {
  SuiteResult r{"orbits", true, {}};
  Field f = orbit_field(o);
  std::mt19937_64 rng(o.seed ^ 0x6f72626974ULL);
  std::size_t equivalent_fail = 0, witness_fail = 0, disjoint_fail = 0, disjoint_checked = 0;
  Mat x = family_x(f);
  for (std::size_t s = 0; s < o.sweep; ++s) {
    ParamPair p = random_valid_pair(f, rng);
    bool witnesses = true;
    orbit_report(p, witnesses);
    if (!witnesses) ++witness_fail;
    auto images = orbit(p);
    for (std::size_t a = 0; a < images.size(); ++a)
      for (std::size_t b = a + 1; b < images.size(); ++b) {
        auto basis = intertwiner_space(Rep(x, family_y(images[a])), Rep(x, family_y(images[b])));
        if (basis.size() != 1 || rank(basis[0]) != 6) ++equivalent_fail;
      }
    ParamPair q = random_valid_pair(f, rng);
    auto qo = orbit(q);
    bool disjoint = std::none_of(qo.begin(), qo.end(), [&](const ParamPair& z) {
      return std::find(images.begin(), images.end(), z) != images.end();
    });
    if (disjoint) {
      ++disjoint_checked;
      if (!intertwiner_space(Rep(x, family_y(p)), Rep(x, family_y(q))).empty()) ++disjoint_fail;
    }
  }
  // Finite classes are told apart by trace pairs.
  Field host = f.zeta() ? f : Field(FieldSpec::cube_roots(f.characteristic()));
  std::vector<std::pair<std::string, std::string>> traces;
  for (const auto& e : enumerate_catalog(host).finite) {
    Rep rep = make_catalog_rep(e.label, host);
    traces.emplace_back(trace(rep.X()).str(), trace(rep.Y()).str() + "/" + std::to_string(rep.dim()));
  }
  auto sorted = traces;
  std::sort(sorted.begin(), sorted.end());
  bool traces_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  r.pass = equivalent_fail == 0 && witness_fail == 0 && disjoint_fail == 0 && traces_distinct;
  r.detail = {{"field", f.name()},
              {"samples", o.sweep},
              {"equivalence_failures", equivalent_fail},
              {"witness_failures", witness_fail},
              {"disjoint_checked", disjoint_checked},
              {"disjoint_failures", disjoint_fail},
              {"finite_traces_distinct", traces_distinct}};
  return r;
}

SuiteResult suite_census(const SuiteOptions& o) {
  SuiteResult r{"census", true, Json::array()};
  std::uint64_t ch = o.characteristic.value_or(0);
  for (CaseId c : all_cases()) {
    CaseReport rep = run_case_census(c, ch);
    if (ch != 2) r.pass = r.pass && rep.golden_match();
    r.detail.push_back(to_json(rep, false));
  }
  return r;
}

SuiteResult suite_monoid(const SuiteOptions&) {
  SuiteResult r{"monoid", true, Json::object()};
  MonoidBound cube = monoid_span_bound(MonoidPreset::case234_cube);
  MonoidBound square = monoid_span_bound(MonoidPreset::case4_square);
  MonoidBound center = monoid_span_bound(MonoidPreset::case234_cube_mod_center);
  r.detail["case234_cube"] = to_json(cube);
  r.detail["case234_cube"]["target"] = 24;
  r.detail["case4_square"] = to_json(square);
  r.detail["case4_square"]["target"] = 18;
  r.detail["case234_cube_mod_center"] = to_json(center);
  r.pass = cube.bound <= 24 && square.bound <= 18;
  return r;
}

SuiteResult suite_elimination(const SuiteOptions& o) {
  SuiteResult r{"elimination", true, Json::object()};
  EliminationReport rep = run_elimination({}, o.jobs, true);
  r.detail = to_json(rep);
  r.pass = rep.all_verified();
  Json sets = Json::array();
  std::vector<std::uint64_t> chars{0, 2, 3, 7};
  if (o.characteristic) chars = {*o.characteristic};
  for (std::uint64_t ch : chars) {
    try {
      ExceptionSet e = solve_exception_set(ch, rep);
      r.pass = r.pass && e.matches_catalog;
      sets.push_back(to_json(e));
    } catch (const EliminationError& err) {
      r.pass = false;
      sets.push_back({{"characteristic", ch}, {"error", err.what()}});
    }
  }
  r.detail["exception_sets"] = sets;
  return r;
}

}  // namespace psl2z::cli
