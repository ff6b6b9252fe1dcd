#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psl2z {

// Equality classes of diagonal positions plus the inverse pairing between classes.
struct EigenPattern {
  std::vector<int> classes;  // position -> class id, ids 0..k-1 all used
  std::vector<int> inverse;  // class -> class holding its inverse, or -1

  std::size_t size() const { return classes.size(); }
  std::size_t class_count() const { return inverse.size(); }
  std::size_t self_inverse_count() const;
  std::vector<std::size_t> shape() const;  // class sizes, descending
  void validate() const;                   // throws std::invalid_argument
};

enum class PatternVerdict { infeasible_scalar, infeasible_inverse, monomial, needs_census, needs_monoid_bound };
std::string to_string(PatternVerdict v);

// max_self_inverse is 2 in general and 1 in characteristic 2.
PatternVerdict eigenpattern_feasible(const EigenPattern& p, std::size_t max_self_inverse = 2);

class ZeroPattern {
 public:
  ZeroPattern() = default;
  explicit ZeroPattern(std::size_t n) : n_(n), bits_(n * n, false) {}
  static ZeroPattern identity(std::size_t n);
  static ZeroPattern full(std::size_t n);
  static ZeroPattern from_rows(const std::vector<std::string>& rows);

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * n_ + j] = v; }
  std::size_t count() const;
  std::vector<std::string> rows() const;

  friend ZeroPattern operator*(const ZeroPattern& a, const ZeroPattern& b);
  friend ZeroPattern operator|(const ZeroPattern& a, const ZeroPattern& b);
  friend bool operator==(const ZeroPattern& a, const ZeroPattern& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }
  friend bool operator<(const ZeroPattern& a, const ZeroPattern& b) { return a.bits_ < b.bits_; }

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

using GammaArrangement = std::vector<int>;  // position -> class id

// Distinct arrangements of the class multiset, in lexicographic order.
std::vector<GammaArrangement> enumerate_gamma_arrangements(const EigenPattern& p);

struct MaskPair {
  ZeroPattern x;
  ZeroPattern y;
};

// X(i,j) allowed iff lambda_i lambda_j = 1 and gamma_i gamma_j = 1; Y(i,j) allowed iff lambda_i gamma_j = 1.
MaskPair derive_zero_patterns(const EigenPattern& p, const GammaArrangement& g);

bool has_perfect_matching(const ZeroPattern& z);

// Positions reachable by boolean words in I, X, Y; bounds the span of any pair supported on the masks.
std::size_t closure_span_bound(const ZeroPattern& x, const ZeroPattern& y);

enum class CaseId { case5, case7, case8, case9a, case9b, case10 };
std::string to_string(CaseId c);
std::optional<CaseId> parse_case_id(const std::string& text);
const std::vector<CaseId>& all_cases();
EigenPattern case_pattern(CaseId c);

struct ArrangementDetail {
  std::size_t index = 0;
  GammaArrangement gamma;
  MaskPair masks;
  bool x_nonsingular = false;
  bool y_nonsingular = false;
  std::optional<std::size_t> closure_bound;
  std::string verdict;  // survivor | singular | degenerate | closure-reducible | infeasible-pattern
  std::string reason;
};

struct CaseReport {
  CaseId id = CaseId::case5;
  EigenPattern pattern;
  std::uint64_t characteristic = 0;
  std::size_t arrangement_count = 0;
  std::size_t nonsingular_count = 0;
  std::size_t survivor_count = 0;
  std::size_t expected_arrangements = 0;
  std::size_t expected_nonsingular = 0;
  std::size_t reference_survivors = 0;
  std::vector<ArrangementDetail> arrangements;

  bool golden_match() const {
    return arrangement_count == expected_arrangements && nonsingular_count == expected_nonsingular;
  }
  bool survivors_match() const { return survivor_count == reference_survivors; }
};

CaseReport run_case_census(CaseId id, std::uint64_t characteristic = 0);

std::string arrangement_text(const EigenPattern& p, const GammaArrangement& g);

}  // namespace psl2z
