#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psl2z/rational.hpp"

namespace psl2z {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldSpec {
  std::uint64_t characteristic = 0;
  // Monic minimal polynomial of the adjoined root z, ascending coefficients; empty for a prime field.
  std::vector<Rational> extension;
  std::string label;

  static FieldSpec rationals();
  static FieldSpec prime(std::uint64_t p);
  // x^2 + x + 1, so z is a primitive cube root of unity.
  static FieldSpec cube_roots(std::uint64_t characteristic = 0);
  // x^2 - x + 1, so z is a primitive sixth root of unity.
  static FieldSpec sixth_roots(std::uint64_t characteristic = 0);

  std::size_t degree() const { return extension.empty() ? 1 : extension.size() - 1; }
};

class Scalar;

class Field {
 public:
  explicit Field(FieldSpec spec);
  static const Field& rationals();

  const FieldSpec& spec() const;
  std::uint64_t characteristic() const;
  std::size_t degree() const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar minus_one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const Rational& q) const;
  Scalar element(std::vector<Rational> coords) const;
  Scalar generator() const;

  // A primitive cube root of unity when the field contains one.
  std::optional<Scalar> zeta() const;

  Scalar parse(std::string_view text) const;

  Scalar random(std::mt19937_64& rng) const;
  Scalar random_nonzero(std::mt19937_64& rng) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
  friend class Scalar;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
};

class Scalar {
 public:
  Scalar() = default;

  const Field& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  Scalar zero_like() const { return field_.zero(); }
  Scalar one_like() const { return field_.one(); }

  Scalar inverse() const;
  Scalar pow(long long e) const;

  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Scalar(Field f, std::vector<Rational> coords) : field_(std::move(f)), coords_(std::move(coords)) {}
  Field field_ = Field::rationals();
  std::vector<Rational> coords_{Rational(0)};
  friend class Field;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Total order on canonical text, used to pick orbit representatives.
bool text_less(const Scalar& a, const Scalar& b);

Scalar exact_quotient(const Scalar& a, const Scalar& b);

}  // namespace psl2z
