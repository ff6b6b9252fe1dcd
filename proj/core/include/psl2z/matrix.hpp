#pragma once

#include <concepts>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace psl2z {

template <class T>
concept RingElement = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<T>;
  { a.one_like() } -> std::convertible_to<T>;
};

template <class T>
concept FieldElement = RingElement<T> && requires(const T& a) {
  { a.inverse() } -> std::convertible_to<T>;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <RingElement T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw ShapeError("entry count does not match shape");
  }

  static Matrix identity(std::size_t n, const T& like) {
    Matrix m(n, n, like.zero_like());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = like.one_like();
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    if (d.empty()) throw ShapeError("empty diagonal");
    Matrix m(d.size(), d.size(), d.front().zero_like());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<T>& entries() const { return entries_; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
  }
  std::vector<T> diagonal_entries() const {
    std::vector<T> d;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, entries_.front());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (r != c && !(*this)(r, c).is_zero()) return false;
    return true;
  }

  bool is_scalar() const {
    if (!is_square() || !is_diagonal()) return false;
    for (std::size_t i = 1; i < rows_; ++i)
      if (!((*this)(i, i) == (*this)(0, 0))) return false;
    return true;
  }

  bool is_identity() const { return is_scalar() && (*this)(0, 0) == (*this)(0, 0).one_like(); }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(entries_.front()))>;
    std::vector<U> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(f(e));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      if (!(a.entries_[i] == b.entries_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
    std::vector<T> out;
    out.reserve(a.entries_.size());
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.push_back(a.entries_[i] + b.entries_[i]);
    return Matrix(a.rows_, a.cols_, std::move(out));
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference shape mismatch");
    std::vector<T> out;
    out.reserve(a.entries_.size());
    for (std::size_t i = 0; i < a.entries_.size(); ++i) out.push_back(a.entries_[i] - b.entries_[i]);
    return Matrix(a.rows_, a.cols_, std::move(out));
  }

  Matrix operator-() const {
    return map([](const T& e) { return -e; });
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    return a.map([&](const T& e) { return s * e; });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                       " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    T zero = a.entries_.front().zero_like();
    Matrix c(a.rows_, b.cols_, zero);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          c(i, j) = c(i, j) + aik * bkj;
        }
      }
    }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

template <RingElement T>
Matrix<T> pow(const Matrix<T>& a, unsigned e) {
  if (!a.is_square()) throw ShapeError("power of a non-square matrix");
  Matrix<T> result = Matrix<T>::identity(a.rows(), a(0, 0));
  Matrix<T> base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <RingElement T>
std::vector<T> apply(const Matrix<T>& a, const std::vector<T>& v) {
  if (a.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
  std::vector<T> out(a.rows(), a(0, 0).zero_like());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!v[j].is_zero()) out[i] = out[i] + a(i, j) * v[j];
  return out;
}

template <RingElement T>
T trace(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("trace of a non-square matrix");
  T t = a(0, 0).zero_like();
  for (std::size_t i = 0; i < a.rows(); ++i) t = t + a(i, i);
  return t;
}

// Laplace expansion along the first row; exponential, for small oracles.
template <RingElement T>
T det_cofactor(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  T total = a(0, 0).zero_like();
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    std::vector<T> minor;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor.push_back(a(r, c));
    T term = a(0, j) * det_cofactor(Matrix<T>(n - 1, n - 1, std::move(minor)));
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

// Fraction-free elimination; every division is exact over an integral domain.
// exact_quotient(a, b) is found by argument-dependent lookup.
template <RingElement T>
T det_bareiss(Matrix<T> a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  std::size_t n = a.rows();
  T prev = a(0, 0).one_like();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return a(0, 0).zero_like();
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

template <FieldElement T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
  T det_factor;  // determinant of the transformation applied, for square inputs
};

template <FieldElement T>
RowEchelon<T> rref(Matrix<T> a) {
  std::vector<std::size_t> pivots;
  T det = a(0, 0).one_like();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(piv, k));
      det = -det;
    }
    T inv = a(r, c).inverse();
    det = det * a(r, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = a(r, k) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      T f = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!a(r, k).is_zero()) a(i, k) = a(i, k) - f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots), det};
}

template <FieldElement T>
std::size_t rank(const Matrix<T>& a) {
  return rref(a).pivots.size();
}

template <FieldElement T>
T det_gauss(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  auto e = rref(a);
  if (e.pivots.size() < a.rows()) return a(0, 0).zero_like();
  return e.det_factor;
}

template <RingElement T>
T det(const Matrix<T>& a) {
  if constexpr (FieldElement<T>) {
    return det_gauss(a);
  } else {
    return det_bareiss(a);
  }
}

// Basis of the right kernel, one vector per free column.
template <FieldElement T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& a) {
  auto e = rref(a);
  const T zero = a(0, 0).zero_like();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), zero);
    v[free] = zero.one_like();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <FieldElement T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("inverse of a non-square matrix");
  std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n, a(0, 0).zero_like());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a(0, 0).one_like();
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
  Matrix<T> inv(n, n, a(0, 0).zero_like());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <FieldElement T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw ShapeError("right-hand side length mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1, a(0, 0).zero_like());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), a(0, 0).zero_like());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

}  // namespace psl2z
