#include "psl2z/patterns.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace psl2z {

std::size_t EigenPattern::self_inverse_count() const {
  std::size_t n = 0;
  for (std::size_t c = 0; c < inverse.size(); ++c)
    if (inverse[c] == static_cast<int>(c)) ++n;
  return n;
}

std::vector<std::size_t> EigenPattern::shape() const {
  std::vector<std::size_t> sizes(inverse.size(), 0);
  for (int c : classes) ++sizes[static_cast<std::size_t>(c)];
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

void EigenPattern::validate() const {
  if (classes.empty()) throw std::invalid_argument("empty eigenpattern");
  std::vector<bool> used(inverse.size(), false);
  for (int c : classes) {
    if (c < 0 || static_cast<std::size_t>(c) >= inverse.size()) throw std::invalid_argument("class id out of range");
    used[static_cast<std::size_t>(c)] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) throw std::invalid_argument("unused class id");
  for (std::size_t c = 0; c < inverse.size(); ++c) {
    int d = inverse[c];
    if (d == -1) continue;
    if (d < 0 || static_cast<std::size_t>(d) >= inverse.size() || inverse[static_cast<std::size_t>(d)] != static_cast<int>(c))
      throw std::invalid_argument("inverse pairing is not an involution");
  }
}

std::string to_string(PatternVerdict v) {
  switch (v) {
    case PatternVerdict::infeasible_scalar: return "infeasible-scalar";
    case PatternVerdict::infeasible_inverse: return "infeasible-inverse";
    case PatternVerdict::monomial: return "monomial";
    case PatternVerdict::needs_census: return "needs-census";
    case PatternVerdict::needs_monoid_bound: return "needs-monoid-bound";
  }
  return "unknown";
}

PatternVerdict eigenpattern_feasible(const EigenPattern& p, std::size_t max_self_inverse) {
  p.validate();
  if (p.class_count() == 1) return PatternVerdict::infeasible_scalar;
  if (p.self_inverse_count() > max_self_inverse) return PatternVerdict::infeasible_inverse;
  // Lambda X Lambda = X with X invertible needs every class matched to an equally large inverse class.
  std::vector<std::size_t> sizes(p.class_count(), 0);
  for (int c : p.classes) ++sizes[static_cast<std::size_t>(c)];
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    int d = p.inverse[c];
    if (d < 0 || sizes[static_cast<std::size_t>(d)] != sizes[c]) return PatternVerdict::infeasible_inverse;
  }
  std::vector<std::size_t> s = p.shape();
  if (s.size() == p.size()) return PatternVerdict::monomial;
  if (s.size() == 2) return PatternVerdict::needs_monoid_bound;
  return PatternVerdict::needs_census;
}

ZeroPattern ZeroPattern::identity(std::size_t n) {
  ZeroPattern z(n);
  for (std::size_t i = 0; i < n; ++i) z.set(i, i);
  return z;
}

ZeroPattern ZeroPattern::full(std::size_t n) {
  ZeroPattern z(n);
  std::fill(z.bits_.begin(), z.bits_.end(), true);
  return z;
}

ZeroPattern ZeroPattern::from_rows(const std::vector<std::string>& rows) {
  ZeroPattern z(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("mask rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != '0' && rows[i][j] != '1') throw std::invalid_argument("mask rows use '0' and '1' only");
      z.set(i, j, rows[i][j] == '1');
    }
  }
  return z;
}

std::size_t ZeroPattern::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<std::string> ZeroPattern::rows() const {
  std::vector<std::string> out(n_, std::string(n_, '0'));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j)) out[i][j] = '1';
  return out;
}

ZeroPattern operator*(const ZeroPattern& a, const ZeroPattern& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("mask size mismatch");
  ZeroPattern c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k)
      if (a(i, k))
        for (std::size_t j = 0; j < a.n_; ++j)
          if (b(k, j)) c.set(i, j);
  return c;
}

ZeroPattern operator|(const ZeroPattern& a, const ZeroPattern& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("mask size mismatch");
  ZeroPattern c(a.n_);
  for (std::size_t i = 0; i < a.bits_.size(); ++i) c.bits_[i] = a.bits_[i] || b.bits_[i];
  return c;
}

std::vector<GammaArrangement> enumerate_gamma_arrangements(const EigenPattern& p) {
  p.validate();
  GammaArrangement g = p.classes;
  std::sort(g.begin(), g.end());
  std::vector<GammaArrangement> out;
  do {
    out.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

MaskPair derive_zero_patterns(const EigenPattern& p, const GammaArrangement& g) {
  p.validate();
  std::size_t n = p.size();
  if (g.size() != n) throw std::invalid_argument("arrangement length mismatch");
  std::vector<int> a = p.classes, b = g;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("arrangement does not match the class multiset");
  auto inv = [&](int c) { return p.inverse[static_cast<std::size_t>(c)]; };
  MaskPair m{ZeroPattern(n), ZeroPattern(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool lambda_unit = inv(p.classes[j]) == p.classes[i];
      bool gamma_unit = inv(g[j]) == g[i];
      m.x.set(i, j, lambda_unit && gamma_unit);
      m.y.set(i, j, inv(g[j]) == p.classes[i]);
    }
  }
  return m;
}

bool has_perfect_matching(const ZeroPattern& z) {
  std::size_t n = z.size();
  std::vector<int> match_col(n, -1);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t row) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!z(row, c) || seen[c]) continue;
      seen[c] = true;
      if (match_col[c] < 0 || augment(static_cast<std::size_t>(match_col[c]))) {
        match_col[c] = static_cast<int>(row);
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < n; ++r) {
    seen.assign(n, false);
    if (!augment(r)) return false;
  }
  return true;
}

std::size_t closure_span_bound(const ZeroPattern& x, const ZeroPattern& y) {
  if (x.size() != y.size()) throw std::invalid_argument("mask size mismatch");
  ZeroPattern reach = ZeroPattern::identity(x.size()) | x | y;
  while (true) {
    ZeroPattern next = reach | (reach * reach);
    if (next == reach) return reach.count();
    reach = next;
  }
}

std::string to_string(CaseId c) {
  switch (c) {
    case CaseId::case5: return "5";
    case CaseId::case7: return "7";
    case CaseId::case8: return "8";
    case CaseId::case9a: return "9a";
    case CaseId::case9b: return "9b";
    case CaseId::case10: return "10";
  }
  return "?";
}

std::optional<CaseId> parse_case_id(const std::string& text) {
  for (CaseId c : all_cases())
    if (to_string(c) == text) return c;
  return std::nullopt;
}

const std::vector<CaseId>& all_cases() {
  static const std::vector<CaseId> ids{CaseId::case5, CaseId::case7, CaseId::case8, CaseId::case9a, CaseId::case9b, CaseId::case10};
  return ids;
}

EigenPattern case_pattern(CaseId c) {
  switch (c) {
    case CaseId::case5: return {{0, 0, 0, 0, 1, 2}, {0, 2, 1}};
    case CaseId::case7: return {{0, 0, 1, 1, 2, 2}, {0, 2, 1}};
    case CaseId::case8: return {{0, 0, 0, 1, 2, 3}, {0, 1, 3, 2}};
    case CaseId::case9a: return {{0, 0, 1, 1, 2, 3}, {0, 1, 3, 2}};
    case CaseId::case9b: return {{0, 0, 1, 1, 2, 3}, {1, 0, 3, 2}};
    case CaseId::case10: return {{0, 0, 1, 2, 3, 4}, {0, 2, 1, 4, 3}};
  }
  throw std::invalid_argument("unknown case");
}

namespace {

struct Reference {
  std::size_t arrangements, nonsingular, survivors;
};

Reference reference_counts(CaseId c) {
  switch (c) {
    case CaseId::case5: return {30, 14, 12};
    case CaseId::case7: return {90, 22, 16};
    case CaseId::case8: return {120, 20, 6};
    case CaseId::case9a: return {180, 20, 4};
    case CaseId::case9b: return {180, 44, 32};
    case CaseId::case10: return {360, 24, 8};
  }
  return {0, 0, 0};
}

}  // namespace

std::string arrangement_text(const EigenPattern& p, const GammaArrangement& g) {
  // Class c is named after its first position: l1, l3, ...
  std::vector<std::size_t> first(p.class_count(), 0);
  for (std::size_t i = p.size(); i-- > 0;) first[static_cast<std::size_t>(p.classes[i])] = i;
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ',';
    out += "l" + std::to_string(first[static_cast<std::size_t>(g[i])] + 1);
  }
  return out + ")";
}

CaseReport run_case_census(CaseId id, std::uint64_t characteristic) {
  CaseReport report;
  report.id = id;
  report.pattern = case_pattern(id);
  report.characteristic = characteristic;
  Reference ref = reference_counts(id);
  report.expected_arrangements = ref.arrangements;
  report.expected_nonsingular = ref.nonsingular;
  report.reference_survivors = ref.survivors;

  const EigenPattern& p = report.pattern;
  bool pattern_ok = p.self_inverse_count() <= (characteristic == 2 ? 1u : 2u);
  auto arrangements = enumerate_gamma_arrangements(p);
  report.arrangement_count = arrangements.size();
  for (std::size_t k = 0; k < arrangements.size(); ++k) {
    ArrangementDetail d;
    d.index = k;
    d.gamma = arrangements[k];
    d.masks = derive_zero_patterns(p, d.gamma);
    d.x_nonsingular = has_perfect_matching(d.masks.x);
    d.y_nonsingular = has_perfect_matching(d.masks.y);
    if (!pattern_ok) {
      d.verdict = "infeasible-pattern";
      d.reason = "too many self-inverse classes for the characteristic";
    } else if (!d.x_nonsingular || !d.y_nonsingular) {
      d.verdict = "singular";
      d.reason = !d.x_nonsingular ? "X mask has no perfect matching" : "Y mask has no perfect matching";
    } else {
      ++report.nonsingular_count;
      bool equal = d.gamma == p.classes;
      bool product_identity = true;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (d.gamma[i] != p.inverse[static_cast<std::size_t>(p.classes[i])]) product_identity = false;
      if (equal || product_identity) {
        d.verdict = "degenerate";
        d.reason = equal ? "Lambda = Gamma forces XY = YX" : "Lambda Gamma = I forces (XY)^2 = (YX)^2";
      } else {
        d.closure_bound = closure_span_bound(d.masks.x, d.masks.y);
        if (*d.closure_bound < 36) {
          d.verdict = "closure-reducible";
          d.reason = "closure span bound " + std::to_string(*d.closure_bound) + " < 36";
        } else {
          d.verdict = "survivor";
          ++report.survivor_count;
        }
      }
    }
    report.arrangements.push_back(std::move(d));
  }
  return report;
}

}  // namespace psl2z
