#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psl2z/catalog.hpp"
#include "psl2z/laurent.hpp"
#include "psl2z/matrix.hpp"

namespace psl2z {

using LMat = Matrix<LaurentPoly>;

class EliminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { A1, B1 };
std::string to_string(Family f);

// Conjugated generators of the six-dimensional family with symbolic c1, c2.
LMat x_double_prime();
LMat y_prime();
LMat lambda_double_prime();
LMat gamma_double_prime();

// (row, col) positions of the cycle read by row r of the coefficient matrix.
const std::vector<std::pair<std::size_t, std::size_t>>& cycle_positions();

struct MonomialSystem {
  Family family = Family::A1;
  std::vector<std::string> word_names;
  std::vector<LMat> words;
  LMat matrix;
};

// Builds the words from the generators and checks all 36 entries against reference_matrix.
MonomialSystem build_monomial_system(Family family);
LMat reference_matrix(Family family);

Mat evaluate(const LMat& m, const Scalar& c1v, const Scalar& c2v);

struct RPoly {
  Family family = Family::A1;
  LaurentPoly det;      // determinant of the coefficient matrix
  LaurentPoly value;    // det times the clearing monomial
  std::int64_t clear_c1 = 0;     // exponents used for clearing
  std::int64_t clear_c2 = 0;
  std::int64_t minimal_c1 = 0;   // smallest exponents that make det a polynomial
  std::int64_t minimal_c2 = 0;
};

RPoly compute_R(Family family);
const LaurentPoly& R1();
const LaurentPoly& R2();
const LaurentPoly& R3();

LaurentPoly F1();
LaurentPoly F2();
LaurentPoly F3();
// F3 with its -c1^2*c2^3 term replaced by a second -c1^2*c2^2; it is not a factor of R2.
LaurentPoly F3_duplicated_term();
LaurentPoly cyc3();  // c1^2 + c1 + 1
LaurentPoly cyc6();  // c1^2 - c1 + 1

struct SubstitutionCheck {
  std::string name;
  LaurentPoly expected;
  LaurentPoly computed;
  bool holds = false;
};

struct FactorizationReport {
  bool r2_identity = false;
  Rational r2_constant;
  bool r1_divisible = false;
  LaurentPoly r3;
  std::int64_t r3_total_degree = 0;
  bool special_pairs_vanish = false;
  std::vector<SubstitutionCheck> substitutions;
  RPoly r1_info;
  RPoly r2_info;

  bool ok() const;
};

FactorizationReport verify_factorizations();

enum class ChainId {
  R1F1,
  R1F2,
  R1F3_direct,
  R1F3_c2_minus_c1,
  R1F3_c1sq_c2_minus_1,
  R1F3_c1_c2sq_minus_1,
  R1F3_R3,
  R1_cyc3,
  R2_cyc3,
  R1_cyc6,
  R2_cyc6,
};
std::string to_string(ChainId id);
std::optional<ChainId> parse_chain_id(const std::string& text);
const std::vector<ChainId>& all_chains();

struct ChainStepRecord {
  std::string target;
  std::string dividend;
  std::string divisor;
  SpremStep step;
};

struct ChainResult {
  ChainId id = ChainId::R1F1;
  Var var = Var::c2;
  std::string a0_name, b0_name;
  LaurentPoly a0, b0;
  std::vector<ChainStepRecord> steps;
  LaurentPoly final_remainder;
  LaurentPoly u, v;  // final_remainder = u * a0 + v * b0
  bool cofactors_tracked = false;
  bool cofactor_check = false;
  bool univariate = false;
};

ChainResult run_sprem_chain(ChainId id, bool track_cofactors = true);

enum class ClaimMode { exact_constant_multiple, divisibility_plus_degree, gcd_root_set };
std::string to_string(ClaimMode m);

struct ClaimFactor {
  LaurentPoly poly;
  unsigned multiplicity = 1;
};

struct MembershipClaim {
  ChainId chain = ChainId::R1F1;
  std::string a_name, b_name;
  Var eliminated = Var::c2;
  std::vector<ClaimFactor> product;
  ClaimMode mode = ClaimMode::exact_constant_multiple;
  std::int64_t cofactor_degree = 0;  // divisibility-plus-degree only

  std::string product_text() const;
};

MembershipClaim claim_for(ChainId id);

struct MultiplicityDiff {
  std::string factor;
  unsigned claimed = 0;
  unsigned computed = 0;
};

struct ClaimVerdict {
  bool holds = false;
  Rational constant;
  std::vector<MultiplicityDiff> multiplicities;
  std::int64_t residual_degree = 0;
  std::string detail;
};

ClaimVerdict verify_membership_claim(const ChainResult& chain, const MembershipClaim& claim);

// gcd of the direct output with the product of the four factored outputs must divide the claim product.
MembershipClaim root_set_claim();
ClaimVerdict verify_root_set(const ChainResult& direct, const std::vector<ChainResult>& factored);

struct ChainOutcome {
  ChainResult chain;
  MembershipClaim claim;
  ClaimVerdict verdict;
};

struct EliminationReport {
  bool a1_matches = false;
  bool b1_matches = false;
  FactorizationReport factorization;
  std::vector<ChainOutcome> chains;
  std::optional<ClaimVerdict> root_set;

  bool all_verified() const;
};

// Runs the selected chains (all when empty) on up to jobs threads.
EliminationReport run_elimination(const std::vector<ChainId>& only = {}, unsigned jobs = 1, bool track_cofactors = true);

struct ExceptionSet {
  Field field;
  std::vector<ParamPair> pairs;
  std::size_t candidates_checked = 0;
  std::size_t certificate_checks = 0;
  bool matches_catalog = false;
};

Field exception_field(std::uint64_t characteristic);

// Candidates whose coordinates are roots of the certificate factors; throws EliminationError
// when a report is incomplete or an evaluation contradicts a certificate.
ExceptionSet solve_exception_set(std::uint64_t characteristic, const EliminationReport& report);

}  // namespace psl2z
