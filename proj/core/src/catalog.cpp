#include "psl2z/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace psl2z {

namespace {

bool is_primitive_cube_root(const Scalar& s) {
  return !s.is_one() && (s * s + s + s.one_like()).is_zero();
}

Scalar require_zeta(const Field& f, const std::string& what) {
  auto z = f.zeta();
  if (!z) throw InadmissibleLabel(what + " needs a primitive cube root of unity, absent from " + f.name());
  return *z;
}

std::vector<std::string> sorted_text(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ParamPair::ParamPair(Scalar a, Scalar b) : c1(std::move(a)), c2(std::move(b)) {
  if (c1.field() != c2.field()) throw std::invalid_argument("parameters from different fields");
  if (c1.is_zero() || c2.is_zero()) throw std::invalid_argument("parameters must be nonzero");
}

CatalogLabel CatalogLabel::one(int a, int zeta_power) {
  CatalogLabel l;
  l.dim = 1;
  l.sign = a;
  l.zeta_power = zeta_power;
  return l;
}

CatalogLabel CatalogLabel::two(Dim2Variant v) {
  CatalogLabel l;
  l.dim = 2;
  l.variant = v;
  return l;
}

CatalogLabel CatalogLabel::three(int sign) {
  CatalogLabel l;
  l.dim = 3;
  l.sign = sign;
  return l;
}

CatalogLabel CatalogLabel::six(ParamPair p) {
  CatalogLabel l;
  l.dim = 6;
  l.params = std::move(p);
  return l;
}

bool CatalogLabel::needs_zeta() const { return (dim == 1 && zeta_power != 0) || dim == 2; }

std::string CatalogLabel::name() const {
  static const char* powers[] = {"1", "zeta", "zeta^2"};
  switch (dim) {
    case 1:
      return std::string("dim1/(") + (sign > 0 ? "1" : "-1") + "," + powers[zeta_power] + ")";
    case 2:
      switch (variant) {
        case Dim2Variant::one_zeta: return "dim2/(1,zeta)";
        case Dim2Variant::one_zeta2: return "dim2/(1,zeta^2)";
        case Dim2Variant::zeta_zeta2: return "dim2/(zeta,zeta^2)";
      }
      break;
    case 3:
      return sign > 0 ? "dim3/+" : "dim3/-";
    case 6:
      return params ? "dim6/" + params->str() : "dim6";
  }
  return "unknown";
}

bool operator==(const CatalogLabel& a, const CatalogLabel& b) {
  if (a.dim != b.dim) return false;
  switch (a.dim) {
    case 1: return a.sign == b.sign && a.zeta_power == b.zeta_power;
    case 2: return a.variant == b.variant;
    case 3: return a.sign == b.sign;
    default: return a.params.has_value() == b.params.has_value() && (!a.params || *a.params == *b.params);
  }
}

bool admissible(const CatalogLabel& label, std::uint64_t characteristic) {
  switch (label.dim) {
    case 1:
      if (characteristic == 2 && label.sign < 0) return false;
      if (characteristic == 3 && label.zeta_power != 0) return false;
      return (label.sign == 1 || label.sign == -1) && label.zeta_power >= 0 && label.zeta_power <= 2;
    case 2:
      return characteristic != 3;
    case 3:
      return characteristic != 2 && (label.sign == 1 || label.sign == -1);
    case 6:
      return label.params.has_value();
  }
  return false;
}

Mat family_x(const Field& f) {
  return from_ints(f, 6, {0, 1, 0, 0, 0, 0,  //
                          1, 0, 0, 0, 0, 0,  //
                          0, 0, 0, 1, 0, 0,  //
                          0, 0, 1, 0, 0, 0,  //
                          0, 0, 0, 0, 0, 1,  //
                          0, 0, 0, 0, 1, 0});
}

Mat family_y(const ParamPair& p) {
  const Field& f = p.field();
  Mat y(6, 6, f.zero());
  y(0, 4) = p.c1;
  y(1, 5) = f.one();
  y(2, 0) = p.c2;
  y(3, 1) = f.one();
  y(4, 2) = (p.c1 * p.c2).inverse();
  y(5, 3) = f.one();
  return y;
}

Rep make_catalog_rep(const CatalogLabel& label, const Field& f) {
  if (!admissible(label, f.characteristic()))
    throw InadmissibleLabel("label " + label.name() + " does not exist in characteristic " + std::to_string(f.characteristic()));
  switch (label.dim) {
    case 1: {
      Scalar b = label.zeta_power == 0 ? f.one() : require_zeta(f, label.name()).pow(label.zeta_power);
      return Rep(Mat(1, 1, f.from_int(label.sign)), Mat(1, 1, b));
    }
    case 2: {
      Scalar z = require_zeta(f, label.name());
      Scalar a = label.variant == Dim2Variant::zeta_zeta2 ? z : f.one();
      Scalar b = label.variant == Dim2Variant::one_zeta ? z : z * z;
      return Rep(from_ints(f, 2, {0, 1, 1, 0}), Mat::diagonal({a, b}));
    }
    case 3: {
      Mat x = from_ints(f, 3, {1, 0, 0, 0, -1, 0, 0, 0, -1});
      if (label.sign < 0) x = -x;
      return Rep(x, from_ints(f, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
    }
    default:
      if (label.params->field() != f) throw std::invalid_argument("parameters are not in the requested field");
      return Rep(family_x(f), family_y(*label.params));
  }
}

bool param_excluded(const ParamPair& p) {
  std::uint64_t ch = p.field().characteristic();
  auto unit = [](const Scalar& s) { return s.is_one() || (-s).is_one(); };
  if (ch != 2 && unit(p.c1) && unit(p.c2)) return true;
  if (ch == 2 && p.c1.is_one() && p.c2.is_one()) return true;
  if (ch != 3 && p.c1 == p.c2 && is_primitive_cube_root(p.c1)) return true;
  return false;
}

std::vector<ParamPair> excluded_pairs(const Field& f) {
  std::vector<ParamPair> out;
  auto add = [&](const Scalar& a, const Scalar& b) {
    ParamPair p(a, b);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  std::uint64_t ch = f.characteristic();
  Scalar one = f.one();
  Scalar minus = f.minus_one();
  add(one, one);
  if (ch != 2) {
    add(one, minus);
    add(minus, one);
    add(minus, minus);
  }
  if (ch != 3) {
    if (auto z = f.zeta()) {
      add(*z, *z);
      add(*z * *z, *z * *z);
    }
  }
  return out;
}

ParamPair orbit_map(int i, const ParamPair& p) {
  const Scalar& a = p.c1;
  const Scalar& b = p.c2;
  switch (i) {
    case 1: return p;
    case 2: return {a.inverse(), b.inverse()};
    case 3: return {b, (a * b).inverse()};
    case 4: return {b.inverse(), a * b};
    case 5: return {(a * b).inverse(), a};
    case 6: return {a * b, a.inverse()};
  }
  throw std::out_of_range("orbit map index must be in 1..6");
}

std::vector<ParamPair> orbit(const ParamPair& p) {
  std::vector<ParamPair> out;
  for (int i = 1; i <= 6; ++i) {
    ParamPair q = orbit_map(i, p);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

ParamPair canonical_param(const ParamPair& p) {
  auto key = [](const ParamPair& q) { return std::make_pair(q.c1.str(), q.c2.str()); };
  auto members = orbit(p);
  return *std::min_element(members.begin(), members.end(),
                           [&](const ParamPair& a, const ParamPair& b) { return key(a) < key(b); });
}

Mat intertwiner_Q(int i, const ParamPair& p) {
  if (i < 1 || i > 6) throw std::out_of_range("intertwiner index must be in 1..6");
  const Field& f = p.field();
  Mat q(6, 6, f.zero());
  auto block = [&](int br, int bc, const Scalar& t, bool swap) {
    std::size_t r = 2 * static_cast<std::size_t>(br);
    std::size_t c = 2 * static_cast<std::size_t>(bc);
    if (swap) {
      q(r, c + 1) = t;
      q(r + 1, c) = t;
    } else {
      q(r, c) = t;
      q(r + 1, c + 1) = t;
    }
  };
  Scalar one = f.one();
  switch (i) {
    case 1:
      return identity(6, f);
    case 2:
      block(0, 0, one, true);
      block(1, 1, p.c2.inverse(), true);
      block(2, 2, p.c1, true);
      break;
    case 3:
      block(0, 1, one, false);
      block(1, 2, one, false);
      block(2, 0, one, false);
      break;
    case 4:
      block(0, 1, one, true);
      block(1, 2, p.c1 * p.c2, true);
      block(2, 0, p.c2, true);
      break;
    case 5:
      block(0, 2, one, false);
      block(1, 0, one, false);
      block(2, 1, one, false);
      break;
    case 6:
      block(0, 2, p.c1 * p.c2, true);
      block(1, 0, p.c2, true);
      block(2, 1, one, true);
      break;
  }
  return q;
}

CatalogListing enumerate_catalog(const Field& f) {
  CatalogListing listing;
  listing.characteristic = f.characteristic();
  std::vector<CatalogLabel> labels;
  for (int a : {1, -1})
    for (int k : {0, 1, 2}) labels.push_back(CatalogLabel::one(a, k));
  for (auto v : {Dim2Variant::one_zeta, Dim2Variant::one_zeta2, Dim2Variant::zeta_zeta2}) labels.push_back(CatalogLabel::two(v));
  for (int s : {1, -1}) labels.push_back(CatalogLabel::three(s));
  bool has_zeta = f.zeta().has_value();
  for (auto& l : labels) {
    if (!admissible(l, f.characteristic())) continue;
    listing.finite.push_back({l, l.needs_zeta() && !has_zeta});
  }
  std::uint64_t ch = f.characteristic();
  listing.family_exclusions.push_back("(1,1)");
  if (ch != 2) {
    listing.family_exclusions.push_back("(1,-1)");
    listing.family_exclusions.push_back("(-1,1)");
    listing.family_exclusions.push_back("(-1,-1)");
  }
  if (ch != 3) {
    listing.family_exclusions.push_back("(zeta,zeta)");
    listing.family_exclusions.push_back("(zeta^2,zeta^2)");
  }
  return listing;
}

std::string to_string(ClassificationStatus s) {
  switch (s) {
    case ClassificationStatus::classified: return "classified";
    case ClassificationStatus::reducible: return "reducible";
    case ClassificationStatus::outside_hypothesis: return "outside-hypothesis";
  }
  return "unknown";
}

namespace {

std::optional<Mat> invertible_intertwiner(const Rep& from, const Rep& to) {
  auto basis = intertwiner_space(from, to);
  if (basis.size() != 1) return std::nullopt;
  if (rank(basis.front()) != from.dim()) return std::nullopt;
  return basis.front();
}

}  // namespace

ClassificationResult classify(const Rep& r) {
  ValidationReport v = validate(r);
  if (!v.relations_hold()) throw ValidationFailure("input does not satisfy X^2 = I and Y^3 = I");
  ClassificationResult result;
  result.dim = r.dim();
  if (!v.lambda_diagonal || !v.gamma_diagonal) return result;
  std::size_t n = r.dim();
  if (burnside_span_dim(r) < n * n) {
    result.status = ClassificationStatus::reducible;
    return result;
  }
  const Field& f = r.field();
  if (n == 1 || n == 2 || n == 3) {
    for (const auto& entry : enumerate_catalog(f).finite) {
      if (entry.requires_extension || static_cast<std::size_t>(entry.label.dim) != n) continue;
      Rep candidate = make_catalog_rep(entry.label, f);
      if (trace(candidate.X()) != trace(r.X()) || trace(candidate.Y()) != trace(r.Y())) continue;
      if (auto q = invertible_intertwiner(r, candidate)) {
        result.status = ClassificationStatus::classified;
        result.label = entry.label;
        result.witness = std::move(q);
        return result;
      }
    }
    throw std::logic_error("irreducible representation of dimension " + std::to_string(n) + " matches no catalog entry");
  }
  if (n != 6) return result;

  CommutatorImages comm = commutators(r);
  std::vector<Scalar> diag = comm.lambda.diagonal_entries();
  std::vector<std::string> signature = sorted_text(diag);
  std::map<std::string, Scalar> values;
  for (const auto& d : diag) {
    values.emplace(d.str(), d);
    Scalar inv = d.inverse();
    values.emplace(inv.str(), inv);
  }
  Mat x6 = family_x(f);
  for (const auto& [k1, u] : values) {
    for (const auto& [k2, w] : values) {
      ParamPair p(u, w);
      Rep candidate(x6, family_y(p));
      if (sorted_text(commutators(candidate).lambda.diagonal_entries()) != signature) continue;
      auto q = invertible_intertwiner(r, candidate);
      if (!q) continue;
      ParamPair canon = canonical_param(p);
      int i = 1;
      while (orbit_map(i, p) != canon) ++i;
      result.status = ClassificationStatus::classified;
      result.label = CatalogLabel::six(canon);
      result.canonical_params = canon;
      result.witness = intertwiner_Q(i, p) * *q;
      return result;
    }
  }
  throw std::logic_error("irreducible six-dimensional representation matches no family parameter");
}

}  // namespace psl2z
