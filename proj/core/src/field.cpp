#include "psl2z/field.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace psl2z {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer mod(const Integer& a, const Integer& p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r;
}

IntPoly poly_mod(IntPoly a, const IntPoly& f, const Integer& p) {
  trim(a);
  Integer lead_inv;
  mpz_invert(lead_inv.get_mpz_t(), f.back().get_mpz_t(), p.get_mpz_t());
  while (a.size() >= f.size()) {
    Integer c = mod(a.back() * lead_inv, p);
    std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) a[shift + i] = mod(a[shift + i] - c * f[i], p);
    trim(a);
  }
  return a;
}

IntPoly poly_mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& f, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& v : c) v = mod(v, p);
  return poly_mod(std::move(c), f, p);
}

IntPoly poly_powmod(IntPoly base, Integer e, const IntPoly& f, const Integer& p) {
  IntPoly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

IntPoly poly_gcd(IntPoly a, IntPoly b, const Integer& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IntPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool irreducible_mod_p(const IntPoly& f, const Integer& p) {
  std::size_t d = f.size() - 1;
  IntPoly h{0, 1};
  for (std::size_t k = 1; k <= d / 2; ++k) {
    h = poly_powmod(h, p, f, p);
    IntPoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = mod(diff[1] - 1, p);
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<Integer> signed_divisors(const Integer& n) {
  Integer m = abs(n);
  if (m > Integer("1000000000000")) throw FieldError("extension constant term too large for the irreducibility search");
  std::vector<Integer> out;
  for (Integer i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      out.push_back(i);
      if (i * i != m) out.push_back(m / i);
    }
  }
  std::size_t n0 = out.size();
  for (std::size_t i = 0; i < n0; ++i) out.push_back(-out[i]);
  return out;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

// f monic over Q, degree <= 4.
bool irreducible_over_q(const std::vector<Rational>& f) {
  std::size_t d = f.size() - 1;
  if (d <= 1) return true;
  Integer lcm_den = 1;
  for (const auto& c : f) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  // g(y) = L^d f(y / L) is monic with integer coefficients.
  IntPoly g(d + 1);
  Integer scale = 1;
  for (std::size_t i = d + 1; i-- > 0;) {
    Rational v = f[i] * Rational(scale);
    g[i] = v.get_num();
    scale *= lcm_den;
  }
  if (g[0] == 0) return false;
  auto eval = [&](const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = d + 1; i-- > 0;) acc = acc * x + g[i];
    return acc;
  };
  if (d == 2) return !is_square(g[1] * g[1] - 4 * g[0]);
  for (const auto& r : signed_divisors(g[0]))
    if (eval(r) == 0) return false;
  if (d == 3) return true;
  // quartic: y^4 + a y^3 + b y^2 + c y + e = (y^2 + s y + q)(y^2 + t y + u)
  const Integer& a = g[3];
  const Integer& b = g[2];
  const Integer& c = g[1];
  const Integer& e = g[0];
  for (const auto& q : signed_divisors(e)) {
    Integer u = e / q;
    if (u != q) {
      Integer num = c - q * a;
      Integer den = u - q;
      if (num % den != 0) continue;
      Integer s = num / den;
      Integer t = a - s;
      if (s * t + q + u == b) return false;
    } else {
      if (c != q * a) continue;
      if (is_square(a * a - 4 * (b - 2 * q))) return false;
    }
  }
  return true;
}

std::string poly_text(const std::vector<Rational>& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || f[i] != 1) os << f[i].get_str() << (i ? "*" : "");
    if (i) os << 'x' << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec{0, {}, "Q"}; }

FieldSpec FieldSpec::prime(std::uint64_t p) { return FieldSpec{p, {}, "GF(" + std::to_string(p) + ")"}; }

FieldSpec FieldSpec::cube_roots(std::uint64_t characteristic) {
  std::string base = characteristic == 0 ? "Q" : "GF(" + std::to_string(characteristic) + ")";
  return FieldSpec{characteristic, {1, 1, 1}, base + "(zeta)"};
}

FieldSpec FieldSpec::sixth_roots(std::uint64_t characteristic) {
  std::string base = characteristic == 0 ? "Q" : "GF(" + std::to_string(characteristic) + ")";
  return FieldSpec{characteristic, {1, -1, 1}, base + "(-zeta)"};
}

struct Field::Data {
  FieldSpec spec;
  Integer p;
  std::size_t degree = 1;
  std::vector<Rational> modulus;
  std::vector<Rational> zeta;

  Rational norm(const Rational& q) const { return p == 0 ? q : Rational(reduce_mod(q, p)); }

  Rational base_inv(const Rational& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (p == 0) return 1 / a;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
    return Rational(inv);
  }

  std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    if (degree == 1) return {norm(a[0] * b[0])};
    std::vector<Rational> c(2 * degree - 1, 0);
    for (std::size_t i = 0; i < degree; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < degree; ++j) c[i + j] += a[i] * b[j];
    }
    for (std::size_t k = c.size(); k-- > degree;) {
      if (c[k] == 0) continue;
      for (std::size_t j = 0; j < degree; ++j) c[k - degree + j] -= c[k] * modulus[j];
      c[k] = 0;
    }
    c.resize(degree);
    for (auto& v : c) v = norm(v);
    return c;
  }

  std::vector<Rational> inv(const std::vector<Rational>& a) const {
    if (degree == 1) return {base_inv(a[0])};
    // Solve (a * x) = 1 via the multiplication-by-a matrix.
    std::size_t d = degree;
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, 0));
    std::vector<Rational> col = a;
    std::vector<Rational> z(d, 0);
    z[1] = 1;
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
      col = mul(col, z);
    }
    m[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t piv = c;
      while (piv < d && m[piv][c] == 0) ++piv;
      if (piv == d) throw std::domain_error("division by zero");
      std::swap(m[piv], m[c]);
      Rational f = base_inv(m[c][c]);
      for (auto& v : m[c]) v = norm(v * f);
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rational g = m[r][c];
        for (std::size_t k = 0; k <= d; ++k) m[r][k] = norm(m[r][k] - g * m[c][k]);
      }
    }
    std::vector<Rational> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
    return x;
  }
};

Field::Field(FieldSpec spec) {
  auto data = std::make_shared<Data>();
  if (spec.characteristic != 0) {
    if (!is_prime(spec.characteristic)) throw FieldError("characteristic " + std::to_string(spec.characteristic) + " is not prime");
    if (spec.characteristic >= (1ull << 62)) throw FieldError("characteristic too large");
  }
  data->p = Integer(std::to_string(spec.characteristic));
  if (!spec.extension.empty()) {
    if (spec.extension.size() < 2) throw FieldError("extension polynomial must have degree at least 1");
    if (spec.extension.size() > 5) throw FieldError("extension degree above 4 is not supported");
    std::vector<Rational> m;
    for (const auto& c : spec.extension) {
      try {
        m.push_back(data->norm(c));
      } catch (const std::domain_error&) {
        throw FieldError("extension coefficient " + c.get_str() + " not defined in characteristic " + std::to_string(spec.characteristic));
      }
    }
    if (m.back() != 1) throw FieldError("extension polynomial must be monic");
    bool irreducible = false;
    if (data->p == 0) {
      irreducible = irreducible_over_q(m);
    } else {
      IntPoly f;
      for (const auto& c : m) f.push_back(c.get_num());
      irreducible = irreducible_mod_p(f, data->p);
    }
    if (!irreducible) throw FieldError("extension polynomial " + poly_text(spec.extension) + " is reducible");
    data->modulus = m;
    data->degree = m.size() - 1;
    spec.extension = m;
  }
  if (spec.label.empty()) {
    std::string base = spec.characteristic == 0 ? "Q" : "GF(" + std::to_string(spec.characteristic) + ")";
    spec.label = spec.extension.empty() ? base : base + "[z]/(" + poly_text(spec.extension) + ")";
  }
  data->spec = std::move(spec);
  data_ = data;

  // Cube root of unity: search the prime field first, then signed powers of z.
  auto is_cube_root = [&](const Scalar& w) { return !w.is_one() && (w * w + w + one()).is_zero(); };
  std::optional<Scalar> found;
  std::uint64_t p = data->spec.characteristic;
  if (p != 0 && p != 3 && p % 3 == 1) {
    for (long long g = 2; !found; ++g) {
      Scalar w = from_int(g).pow(static_cast<long long>((p - 1) / 3));
      if (is_cube_root(w)) found = w;
    }
  }
  if (!found && data->degree > 1) {
    Scalar z = generator();
    Scalar w = z;
    for (int k = 1; k <= 24 && !found; ++k, w = w * z) {
      if (is_cube_root(w)) found = w;
      else if (is_cube_root(-w)) found = -w;
    }
  }
  if (found) data->zeta = found->coords();
}

const Field& Field::rationals() {
  static const Field q{FieldSpec::rationals()};
  return q;
}

const FieldSpec& Field::spec() const { return data_->spec; }
std::uint64_t Field::characteristic() const { return data_->spec.characteristic; }
std::size_t Field::degree() const { return data_->degree; }
std::string Field::name() const { return data_->spec.label; }

Scalar Field::element(std::vector<Rational> coords) const {
  if (coords.size() != data_->degree) throw std::invalid_argument("coordinate count does not match field degree");
  for (auto& c : coords) c = data_->norm(c);
  return Scalar(*this, std::move(coords));
}

Scalar Field::zero() const { return Scalar(*this, std::vector<Rational>(data_->degree, 0)); }

Scalar Field::one() const {
  std::vector<Rational> c(data_->degree, 0);
  c[0] = data_->norm(1);
  return Scalar(*this, std::move(c));
}

Scalar Field::minus_one() const { return from_int(-1); }

Scalar Field::from_int(long long v) const { return from_rational(Rational(static_cast<long>(v))); }

Scalar Field::from_rational(const Rational& q) const {
  std::vector<Rational> c(data_->degree, 0);
  c[0] = data_->norm(q);
  return Scalar(*this, std::move(c));
}

Scalar Field::generator() const {
  if (data_->spec.extension.empty()) throw FieldError("field " + name() + " has no adjoined root z");
  if (data_->degree == 1) return from_rational(-data_->modulus[0]);
  std::vector<Rational> c(data_->degree, 0);
  c[1] = 1;
  return Scalar(*this, std::move(c));
}

std::optional<Scalar> Field::zeta() const {
  if (data_->zeta.empty()) return std::nullopt;
  return Scalar(*this, data_->zeta);
}

Scalar Field::parse(std::string_view text) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty scalar", 0);
  std::size_t pos = 0;
  Scalar total = zero();
  auto parse_power = [&]() -> Scalar {
    std::size_t at = pos;
    ++pos;  // 'z'
    if (data_->spec.extension.empty()) throw ParseError("field " + name() + " has no adjoined root z", at);
    long long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) throw ParseError("expected exponent", digits);
      e = std::stoll(std::string(text.substr(start, pos - start)));
    }
    return generator().pow(e);
  };
  while (true) {
    Scalar term;
    bool negate = pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == 'z';
    if (negate) ++pos;
    if (pos < text.size() && text[pos] == 'z') {
      term = parse_power();
    } else {
      std::size_t at = pos;
      Rational q = parse_rational(text, pos);
      try {
        term = from_rational(q);
      } catch (const std::domain_error& e) {
        throw ParseError(e.what(), at);
      }
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        if (pos >= text.size() || text[pos] != 'z') throw ParseError("expected 'z' after '*'", pos);
        term = term * parse_power();
      }
    }
    total += negate ? -term : term;
    if (pos == text.size()) break;
    if (text[pos] == '+') ++pos;
    else if (text[pos] != '-') throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
  }
  return total;
}

Scalar Field::random(std::mt19937_64& rng) const {
  std::vector<Rational> c(data_->degree);
  for (auto& v : c) {
    if (data_->p == 0) {
      long num = std::uniform_int_distribution<long>(-9, 9)(rng);
      long den = std::uniform_int_distribution<long>(1, 4)(rng);
      v = Rational(num, den);
      v.canonicalize();
    } else {
      std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, data_->spec.characteristic - 1)(rng);
      v = Rational(Integer(std::to_string(r)));
    }
  }
  return Scalar(*this, std::move(c));
}

Scalar Field::random_nonzero(std::mt19937_64& rng) const {
  while (true) {
    Scalar s = random(rng);
    if (!s.is_zero()) return s;
  }
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  return data_->spec.characteristic == other.data_->spec.characteristic && data_->modulus == other.data_->modulus;
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("scalars from different fields: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

bool Scalar::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool Scalar::is_one() const {
  if (coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.data_->norm(a.coords_[i] + b.coords_[i]);
  return Scalar(a.field_, std::move(c));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.data_->norm(a.coords_[i] - b.coords_[i]);
  return Scalar(a.field_, std::move(c));
}

Scalar Scalar::operator-() const {
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.data_->norm(-coords_[i]);
  return Scalar(field_, std::move(c));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.field_, a.field_.data_->mul(a.coords_, b.coords_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Scalar(field_, field_.data_->inv(coords_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a * b.inverse();
}

Scalar exact_quotient(const Scalar& a, const Scalar& b) { return a / b; }

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  Scalar result = field_.one();
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a.coords_ == b.coords_;
}

std::string Scalar::str() const {
  std::string out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool text_less(const Scalar& a, const Scalar& b) { return a.str() < b.str(); }

}  // namespace psl2z
