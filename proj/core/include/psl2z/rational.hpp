#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psl2z {

using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

// '-'? digits ('/' digits)?, consuming from text[pos]; advances pos.
Rational parse_rational(std::string_view text, std::size_t& pos);
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Residue of q modulo prime p; throws std::domain_error when p divides the denominator.
Integer reduce_mod(const Rational& q, const Integer& p);

bool is_prime(std::uint64_t n);

}  // namespace psl2z
