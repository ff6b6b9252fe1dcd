#include "psl2z/rep.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace psl2z {

Mat identity(std::size_t n, const Field& f) { return Mat::identity(n, f.one()); }

Mat from_ints(const Field& f, std::size_t n, const std::vector<long long>& entries) {
  std::vector<Scalar> out;
  for (auto v : entries) out.push_back(f.from_int(v));
  return Mat(n, entries.size() / n, std::move(out));
}

Rep::Rep(Mat x, Mat y) : x_(std::move(x)), y_(std::move(y)) {
  if (!x_.is_square() || x_.rows() == 0 || x_.rows() != y_.rows() || !y_.is_square())
    throw ShapeError("X and Y must be square of equal size");
  const Field& f = x_(0, 0).field();
  for (const auto* m : {&x_, &y_})
    for (const auto& e : m->entries())
      if (e.field() != f) throw std::invalid_argument("X and Y entries must share one field");
}

Rep Rep::conjugated(const Mat& q) const {
  Mat qi = inverse(q);
  return Rep(q * x_ * qi, q * y_ * qi);
}

CommutatorImages commutators(const Rep& r) {
  Mat y2 = r.Y() * r.Y();
  Mat xy = r.X() * r.Y();
  CommutatorImages c{xy * r.X() * y2, r.X() * y2 * xy, false};
  c.both_diagonal = c.lambda.is_diagonal() && c.gamma.is_diagonal();
  return c;
}

ValidationReport validate(const Rep& r) {
  ValidationReport v;
  v.x_squared_identity = (r.X() * r.X()).is_identity();
  v.y_cubed_identity = pow(r.Y(), 3).is_identity();
  CommutatorImages c = commutators(r);
  v.lambda_diagonal = c.lambda.is_diagonal();
  v.gamma_diagonal = c.gamma.is_diagonal();
  v.lambda_scalar = c.lambda.is_scalar();
  v.lambda_equals_gamma = c.lambda == c.gamma;
  return v;
}

bool IncrementalSpan::insert(std::vector<Scalar> v) {
  if (v.size() != width_) throw ShapeError("vector width does not match span");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& lead = v[pivots_[i]];
    if (lead.is_zero()) continue;
    Scalar f = lead;
    for (std::size_t k = pivots_[i]; k < width_; ++k)
      if (!rows_[i][k].is_zero()) v[k] -= f * rows_[i][k];
  }
  std::size_t p = 0;
  while (p < width_ && v[p].is_zero()) ++p;
  if (p == width_) return false;
  Scalar inv = v[p].inverse();
  for (std::size_t k = p; k < width_; ++k) v[k] *= inv;
  // Keep earlier rows reduced at the new pivot so later reductions stay single-pass.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Scalar f = row[p];
    for (std::size_t k = p; k < width_; ++k)
      if (!v[k].is_zero()) row[k] -= f * v[k];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::size_t burnside_span_dim(const Rep& r) {
  std::size_t n = r.dim();
  IncrementalSpan span(n * n);
  std::deque<Mat> pending{identity(n, r.field()), r.X(), r.Y()};
  while (!pending.empty() && span.dim() < n * n) {
    Mat m = std::move(pending.front());
    pending.pop_front();
    if (!span.insert(m.entries())) continue;
    pending.push_back(r.X() * m);
    pending.push_back(r.Y() * m);
  }
  return span.dim();
}

std::vector<Mat> intertwiner_space(const Rep& a, const Rep& b) {
  if (a.dim() != b.dim()) throw ShapeError("intertwiner between representations of different dimension");
  if (a.field() != b.field()) throw std::invalid_argument("intertwiner between representations over different fields");
  std::size_t n = a.dim();
  const Field& f = a.field();
  Mat system(2 * n * n, n * n, f.zero());
  // Unknown Q(i, k) sits in column i * n + k.
  const Mat* lhs[2] = {&a.X(), &a.Y()};
  const Mat* rhs[2] = {&b.X(), &b.Y()};
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t row = g * n * n + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          system(row, i * n + k) += (*lhs[g])(k, j);
          system(row, k * n + j) -= (*rhs[g])(i, k);
        }
      }
    }
  }
  std::vector<Mat> basis;
  for (auto& v : nullspace(system)) basis.emplace_back(n, n, std::move(v));
  return basis;
}

bool equivalent(const Rep& a, const Rep& b) {
  std::size_t n = a.dim();
  if (burnside_span_dim(a) != n * n || burnside_span_dim(b) != b.dim() * b.dim())
    throw ReducibleInputError("equivalence is only decided for irreducible representations");
  if (a.dim() != b.dim()) return false;
  auto basis = intertwiner_space(a, b);
  if (basis.empty()) return false;
  if (basis.size() > 1) throw std::logic_error("intertwiner space of irreducibles has dimension " + std::to_string(basis.size()));
  if (rank(basis.front()) != n) throw std::logic_error("intertwiner of irreducibles is singular");
  return true;
}

}  // namespace psl2z
