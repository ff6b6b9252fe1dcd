#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psl2z/rep.hpp"

namespace psl2z {

class InadmissibleLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ParamPair {
  Scalar c1;
  Scalar c2;

  ParamPair(Scalar a, Scalar b);
  const Field& field() const { return c1.field(); }
  std::string str() const { return "(" + c1.str() + "," + c2.str() + ")"; }
  friend bool operator==(const ParamPair& a, const ParamPair& b) { return a.c1 == b.c1 && a.c2 == b.c2; }
  friend bool operator!=(const ParamPair& a, const ParamPair& b) { return !(a == b); }
};

enum class Dim2Variant { one_zeta, one_zeta2, zeta_zeta2 };

struct CatalogLabel {
  int dim = 1;
  int sign = 1;        // dim 1: a = sign; dim 3: the sign of X
  int zeta_power = 0;  // dim 1: b = zeta^k
  Dim2Variant variant = Dim2Variant::one_zeta;
  std::optional<ParamPair> params;

  static CatalogLabel one(int a, int zeta_power);
  static CatalogLabel two(Dim2Variant v);
  static CatalogLabel three(int sign);
  static CatalogLabel six(ParamPair p);

  bool needs_zeta() const;
  std::string name() const;
  friend bool operator==(const CatalogLabel& a, const CatalogLabel& b);
};

// Throws InadmissibleLabel when the label does not exist in the field's characteristic,
// or when it needs a cube root of unity the field lacks.
Rep make_catalog_rep(const CatalogLabel& label, const Field& f);
bool admissible(const CatalogLabel& label, std::uint64_t characteristic);

// The six-dimensional family at symbolic-free concrete parameters.
Mat family_x(const Field& f);
Mat family_y(const ParamPair& p);

bool param_excluded(const ParamPair& p);
// Excluded pairs of the field's characteristic that exist in the field.
std::vector<ParamPair> excluded_pairs(const Field& f);

// sigma_1..sigma_6 in order: identity, inverse, (c2, 1/(c1c2)), (1/c2, c1c2), (1/(c1c2), c1), (c1c2, 1/c1).
ParamPair orbit_map(int i, const ParamPair& p);
std::vector<ParamPair> orbit(const ParamPair& p);
ParamPair canonical_param(const ParamPair& p);

// Q_i with Q_i X = X Q_i and Q_i Y(p) = Y(sigma_i(p)) Q_i.
Mat intertwiner_Q(int i, const ParamPair& p);

struct CatalogEntry {
  CatalogLabel label;
  bool requires_extension = false;
};

struct CatalogListing {
  std::uint64_t characteristic = 0;
  std::vector<CatalogEntry> finite;
  std::vector<std::string> family_exclusions;
};

CatalogListing enumerate_catalog(const Field& f);

enum class ClassificationStatus { classified, reducible, outside_hypothesis };
std::string to_string(ClassificationStatus s);

struct ClassificationResult {
  ClassificationStatus status = ClassificationStatus::outside_hypothesis;
  std::size_t dim = 0;
  std::optional<CatalogLabel> label;
  std::optional<ParamPair> canonical_params;
  std::optional<Mat> witness;  // Q with Q X Q^-1 = X_catalog, Q Y Q^-1 = Y_catalog
};

class ValidationFailure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ClassificationResult classify(const Rep& r);

}  // namespace psl2z
