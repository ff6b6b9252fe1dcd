#include "psl2z/rational.hpp"

#include <cctype>

namespace psl2z {

namespace {

std::string_view take_digits(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits", start);
  return text.substr(start, pos - start);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text, std::size_t& pos) {
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  Integer num(std::string(take_digits(text, pos)));
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t at = pos;
    den = Integer(std::string(take_digits(text, pos)));
    if (den == 0) throw ParseError("zero denominator", at);
  }
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  Rational q = parse_rational(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after rational", pos);
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer reduce_mod(const Rational& q, const Integer& p) {
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  if (q.get_den() == 1) return num;
  Integer inv;
  Integer den = q.get_den() % p;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("denominator " + q.get_den().get_str() + " not invertible mod " + p.get_str());
  return Integer(num * inv % p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace psl2z
