#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "psl2z/field.hpp"
#include "psl2z/matrix.hpp"

namespace psl2z {

using Mat = Matrix<Scalar>;

Mat identity(std::size_t n, const Field& f);
Mat from_ints(const Field& f, std::size_t n, const std::vector<long long>& entries);

// A pair (X, Y) over one field. Shapes and field are checked, relations are not.
class Rep {
 public:
  Rep(Mat x, Mat y);

  const Field& field() const { return x_(0, 0).field(); }
  std::size_t dim() const { return x_.rows(); }
  const Mat& X() const { return x_; }
  const Mat& Y() const { return y_; }

  // (Q X Q^-1, Q Y Q^-1)
  Rep conjugated(const Mat& q) const;

 private:
  Mat x_;
  Mat y_;
};

struct ValidationReport {
  bool x_squared_identity = false;
  bool y_cubed_identity = false;
  bool lambda_diagonal = false;
  bool gamma_diagonal = false;
  bool lambda_scalar = false;
  bool lambda_equals_gamma = false;

  bool relations_hold() const { return x_squared_identity && y_cubed_identity; }
  bool in_hypothesis() const { return relations_hold() && lambda_diagonal && gamma_diagonal; }
};

struct CommutatorImages {
  Mat lambda;  // X Y X Y^2
  Mat gamma;   // X Y^2 X Y
  bool both_diagonal = false;
};

class ReducibleInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ValidationReport validate(const Rep& r);
CommutatorImages commutators(const Rep& r);

// Dimension of the algebra generated by X and Y; n^2 iff irreducible.
std::size_t burnside_span_dim(const Rep& r);

// Basis of {Q : Q X_a = X_b Q, Q Y_a = Y_b Q}.
std::vector<Mat> intertwiner_space(const Rep& a, const Rep& b);

// Both inputs must be irreducible.
bool equivalent(const Rep& a, const Rep& b);

// Independent row space over a field, grown one vector at a time.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t width) : width_(width) {}
  // Returns true when v was independent of the current span.
  bool insert(std::vector<Scalar> v);
  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }

 private:
  std::size_t width_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace psl2z
