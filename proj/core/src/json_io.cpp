#include "psl2z/json_io.hpp"

#include <algorithm>

namespace psl2z {

namespace {

Rational coefficient_from_json(const Json& c, const std::string& where) {
  if (c.is_number_integer()) return Rational(std::to_string(c.get<long long>()));
  if (c.is_string()) {
    try {
      return parse_rational(c.get<std::string>());
    } catch (const ParseError& e) {
      throw RepFileError(where, e.what());
    }
  }
  throw RepFileError(where, "coefficient must be an integer or a rational string");
}

}  // namespace

Field field_from_json(const Json& j) {
  if (!j.is_object()) throw RepFileError("/field", "expected an object");
  if (!j.contains("char") || !j["char"].is_number_integer() || j["char"].get<long long>() < 0)
    throw RepFileError("/field/char", "expected a non-negative integer");
  FieldSpec spec;
  spec.characteristic = j["char"].get<std::uint64_t>();
  if (j.contains("extension") && !j["extension"].is_null()) {
    const Json& e = j["extension"];
    if (!e.is_array()) throw RepFileError("/field/extension", "expected a coefficient list");
    for (std::size_t i = 0; i < e.size(); ++i)
      spec.extension.push_back(coefficient_from_json(e[i], "/field/extension/" + std::to_string(i)));
  }
  try {
    return Field(std::move(spec));
  } catch (const FieldError& err) {
    throw RepFileError("/field", err.what());
  }
}

Json field_to_json(const Field& f) {
  Json j;
  j["char"] = f.characteristic();
  if (!f.spec().extension.empty()) {
    Json e = Json::array();
    for (const auto& c : f.spec().extension) e.push_back(to_string(c));
    j["extension"] = e;
  }
  j["name"] = f.name();
  return j;
}

namespace {

Mat matrix_from_json(const Json& j, const Field& f, std::size_t n, const std::string& key) {
  std::string base = "/" + key;
  if (!j.is_array() || j.size() != n) throw RepFileError(base, "expected " + std::to_string(n) + " rows");
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = j[i];
    std::string rw = base + "/" + std::to_string(i);
    if (!row.is_array() || row.size() != n) throw RepFileError(rw, "expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      std::string at = rw + "/" + std::to_string(k);
      const Json& cell = row[k];
      try {
        if (cell.is_number_integer()) {
          entries.push_back(f.from_int(cell.get<long long>()));
        } else if (cell.is_string()) {
          entries.push_back(f.parse(cell.get<std::string>()));
        } else {
          throw RepFileError(at, "expected a scalar string");
        }
      } catch (const ParseError& e) {
        throw RepFileError(at, e.what());
      } catch (const FieldError& e) {
        throw RepFileError(at, e.what());
      } catch (const std::domain_error& e) {
        throw RepFileError(at, e.what());
      }
    }
  }
  return Mat(n, n, std::move(entries));
}

}  // namespace

Rep rep_from_json(const Json& j) {
  if (!j.is_object()) throw RepFileError("/", "expected an object");
  for (const char* key : {"field", "n", "X", "Y"})
    if (!j.contains(key)) throw RepFileError("/" + std::string(key), "missing");
  Field f = field_from_json(j["field"]);
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw RepFileError("/n", "expected a positive integer");
  auto n = j["n"].get<std::size_t>();
  Mat x = matrix_from_json(j["X"], f, n, "X");
  Mat y = matrix_from_json(j["Y"], f, n, "Y");
  return Rep(std::move(x), std::move(y));
}

Rep parse_rep(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t byte = std::min(e.byte, text.size());
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte > 0 ? byte - 1 : 0), '\n'));
    throw RepFileError("line " + std::to_string(line), "invalid JSON");
  }
  return rep_from_json(j);
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

Json rep_to_json(const Rep& r) {
  Json j;
  Json f = field_to_json(r.field());
  f.erase("name");
  j["field"] = f;
  j["n"] = r.dim();
  j["X"] = matrix_to_json(r.X());
  j["Y"] = matrix_to_json(r.Y());
  return j;
}

Json to_json(const ParamPair& p) { return Json::array({p.c1.str(), p.c2.str()}); }

Json to_json(const CatalogListing& c) {
  Json j;
  j["characteristic"] = c.characteristic;
  Json entries = Json::array();
  for (const auto& e : c.finite) {
    Json x;
    x["label"] = e.label.name();
    x["dim"] = e.label.dim;
    x["requires_extension"] = e.requires_extension;
    entries.push_back(x);
  }
  j["finite"] = entries;
  j["family"] = {{"dim", 6}, {"excluded", c.family_exclusions}};
  return j;
}

Json to_json(const ClassificationResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["dim"] = r.dim;
  j["label"] = r.label ? Json(r.label->name()) : Json(nullptr);
  j["canonical_params"] = r.canonical_params ? to_json(*r.canonical_params) : Json(nullptr);
  j["witness"] = r.witness ? matrix_to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const EigenPattern& p) { return {{"classes", p.classes}, {"inverse", p.inverse}}; }

Json to_json(const CaseReport& r, bool detail) {
  Json j;
  j["case"] = to_string(r.id);
  j["pattern"] = to_json(r.pattern);
  j["characteristic"] = r.characteristic;
  j["arrangements"] = r.arrangement_count;
  j["nonsingular"] = r.nonsingular_count;
  j["survivors"] = r.survivor_count;
  j["expected"] = {{"arrangements", r.expected_arrangements}, {"nonsingular", r.expected_nonsingular}};
  j["golden_match"] = r.golden_match();
  j["reference_survivors"] = r.reference_survivors;
  j["survivors_match"] = r.survivors_match();
  if (detail) {
    Json rows = Json::array();
    for (const auto& d : r.arrangements) {
      Json x;
      x["index"] = d.index;
      x["gamma"] = arrangement_text(r.pattern, d.gamma);
      x["x_mask"] = d.masks.x.rows();
      x["y_mask"] = d.masks.y.rows();
      x["x_nonsingular"] = d.x_nonsingular;
      x["y_nonsingular"] = d.y_nonsingular;
      x["closure_bound"] = d.closure_bound ? Json(*d.closure_bound) : Json(nullptr);
      x["verdict"] = d.verdict;
      x["reason"] = d.reason;
      rows.push_back(x);
    }
    j["detail"] = rows;
  }
  return j;
}

Json to_json(const MonoidBound& b) {
  return {{"bound", b.bound}, {"confluent", b.confluent}, {"finite", b.finite}, {"rules", b.rule_count}};
}

Json to_json(const FactorizationReport& r) {
  Json j;
  auto rinfo = [](const RPoly& p) {
    return Json{{"clearing", {p.clear_c1, p.clear_c2}},
                {"minimal_clearing", {p.minimal_c1, p.minimal_c2}},
                {"polynomial", p.value.is_polynomial()},
                {"total_degree", p.value.total_degree()},
                {"terms", p.value.size()}};
  };
  j["R1"] = rinfo(r.r1_info);
  j["R2"] = rinfo(r.r2_info);
  j["R2_identity"] = r.r2_identity;
  j["R2_constant"] = to_string(r.r2_constant);
  j["R1_divisible"] = r.r1_divisible;
  j["R3_total_degree"] = r.r3_total_degree;
  j["special_pairs_vanish"] = r.special_pairs_vanish;
  Json subs = Json::array();
  for (const auto& s : r.substitutions) subs.push_back({{"name", s.name}, {"holds", s.holds}});
  j["substitutions"] = subs;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const ClaimVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["constant"] = to_string(v.constant);
  j["residual_degree"] = v.residual_degree;
  Json m = Json::array();
  for (const auto& d : v.multiplicities) m.push_back({{"factor", d.factor}, {"claimed", d.claimed}, {"computed", d.computed}});
  j["multiplicities"] = m;
  j["detail"] = v.detail;
  return j;
}

Json to_json(const ChainOutcome& c, bool with_cofactors) {
  Json j;
  j["script"] = to_string(c.chain.id);
  j["variable"] = to_string(c.chain.var);
  j["generators"] = {c.chain.a0_name, c.chain.b0_name};
  Json steps = Json::array();
  for (const auto& s : c.chain.steps) {
    steps.push_back({{"target", s.target},
                     {"dividend", s.dividend},
                     {"divisor", s.divisor},
                     {"m", s.step.m.str()},
                     {"divisions", s.step.divisions},
                     {"q_degree", s.step.q.degree(s.step.var)},
                     {"r_degree", s.step.r.is_zero() ? -1 : s.step.r.degree(s.step.var)}});
  }
  j["steps"] = steps;
  j["final_degree"] = c.chain.final_remainder.degree(other(c.chain.var));
  j["final_remainder"] = c.chain.final_remainder.str();
  j["univariate"] = c.chain.univariate;
  j["cofactor_check"] = c.chain.cofactors_tracked ? Json(c.chain.cofactor_check) : Json(nullptr);
  if (with_cofactors && c.chain.cofactors_tracked) {
    j["u"] = c.chain.u.str();
    j["v"] = c.chain.v.str();
  }
  j["claim"] = {{"mode", to_string(c.claim.mode)}, {"product", c.claim.product_text()}};
  if (c.claim.mode == ClaimMode::divisibility_plus_degree) j["claim"]["cofactor_degree"] = c.claim.cofactor_degree;
  j["verdict"] = to_json(c.verdict);
  return j;
}

Json to_json(const EliminationReport& r) {
  Json j;
  j["A1_matches"] = r.a1_matches;
  j["B1_matches"] = r.b1_matches;
  j["factorizations"] = to_json(r.factorization);
  Json chains = Json::array();
  for (const auto& c : r.chains) chains.push_back(to_json(c));
  j["chains"] = chains;
  j["root_set"] = r.root_set ? to_json(*r.root_set) : Json(nullptr);
  j["all_verified"] = r.all_verified();
  return j;
}

Json to_json(const ExceptionSet& e) {
  Json j;
  j["field"] = field_to_json(e.field);
  Json pairs = Json::array();
  for (const auto& p : e.pairs) pairs.push_back(to_json(p));
  j["pairs"] = pairs;
  j["candidates_checked"] = e.candidates_checked;
  j["certificate_checks"] = e.certificate_checks;
  j["matches_catalog"] = e.matches_catalog;
  return j;
}

}  // namespace psl2z
