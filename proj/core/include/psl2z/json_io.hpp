#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "psl2z/catalog.hpp"
#include "psl2z/elimination.hpp"
#include "psl2z/patterns.hpp"
#include "psl2z/rewriting.hpp"

namespace psl2z {

using Json = nlohmann::ordered_json;

// Malformed rep file; where() is "line N" for syntax errors or a JSON pointer such as "/X/1/2".
class RepFileError : public std::runtime_error {
 public:
  RepFileError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// {"char": p, "extension": [a0, a1, ..., 1]}; coefficients are integers or rational strings.
Field field_from_json(const Json& j);
Json field_to_json(const Field& f);

Rep parse_rep(std::string_view text);
Rep rep_from_json(const Json& j);
Json rep_to_json(const Rep& r);
Json matrix_to_json(const Mat& m);

Json to_json(const ParamPair& p);
Json to_json(const CatalogListing& c);
Json to_json(const ClassificationResult& r);
Json to_json(const EigenPattern& p);
Json to_json(const CaseReport& r, bool detail = true);
Json to_json(const MonoidBound& b);
Json to_json(const FactorizationReport& r);
Json to_json(const ChainOutcome& c, bool with_cofactors = false);
Json to_json(const ClaimVerdict& v);
Json to_json(const EliminationReport& r);
Json to_json(const ExceptionSet& e);

}  // namespace psl2z
