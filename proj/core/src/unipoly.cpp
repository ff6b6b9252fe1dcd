#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "psl2z/laurent.hpp"

namespace psl2z {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const std::vector<Integer>& a, u64 p) {
  Integer pz(std::to_string(p));
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer r = a[i] % pz;
    if (r < 0) r += pz;
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

void make_monic(ModPoly& a, u64 p) {
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    make_monic(b, p);
    while (a.size() >= b.size()) {
      u64 c = a.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) make_monic(a, p);
  return a;
}

// Primitive integer coefficients of a univariate rational polynomial.
std::vector<Integer> primitive_integer(const std::vector<Rational>& c) {
  Integer l = 1;
  for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& v : c) {
    out.push_back(Integer(v.get_num() * (l / v.get_den())));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

LaurentPoly monic(const std::vector<Rational>& c, Var var) {
  std::vector<Rational> m = c;
  Rational lead = m.back();
  for (auto& v : m) v /= lead;
  return from_univariate(m, var);
}

}  // namespace

LaurentPoly gcd_univariate(const LaurentPoly& a, const LaurentPoly& b, Var var) {
  // Ordinary polynomials keep their power of var; Laurent inputs are shifted to polynomials first.
  auto prepare = [var](const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Var o = other(var);
    if (p.min_degree(o) != p.degree(o)) throw std::invalid_argument("gcd operand is not univariate in " + to_string(var));
    std::int64_t sv = std::min<std::int64_t>(p.min_degree(var), 0);
    std::int64_t so = p.min_degree(o);
    return var == Var::c1 ? p.shifted(-sv, -so) : p.shifted(-so, -sv);
  };
  LaurentPoly pa = prepare(a);
  LaurentPoly pb = prepare(b);
  if (pa.is_zero() && pb.is_zero()) return {};
  if (pa.is_zero()) return monic(univariate_coefficients(pb, var), var);
  if (pb.is_zero()) return monic(univariate_coefficients(pa, var), var);

  std::vector<Integer> ia = primitive_integer(univariate_coefficients(pa, var));
  std::vector<Integer> ib = primitive_integer(univariate_coefficients(pb, var));
  if (ia.size() == 1 || ib.size() == 1) return LaurentPoly(1);
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), ia.back().get_mpz_t(), ib.back().get_mpz_t());

  std::vector<Integer> acc;
  Integer modulus = 1;
  std::size_t best = std::min(ia.size(), ib.size());
  std::vector<Integer> last_candidate;
  for (u64 p = (1ull << 62) - 57;; p -= 2) {
    if (!is_prime(p)) continue;
    Integer pz(std::to_string(p));
    if (gamma % pz == 0) continue;
    ModPoly ga = reduce(ia, p);
    ModPoly gb = reduce(ib, p);
    if (ga.size() != ia.size() || gb.size() != ib.size()) continue;
    ModPoly g = gcd_mod(ga, gb, p);
    if (g.size() == 1) return LaurentPoly(1);
    if (g.size() > best) continue;
    u64 gmod = Integer(gamma % pz).get_ui();
    for (auto& c : g) c = mulmod(c, gmod, p);
    if (g.size() < best || acc.empty()) {
      best = g.size();
      acc.assign(g.size(), 0);
      for (std::size_t i = 0; i < g.size(); ++i) acc[i] = Integer(std::to_string(g[i]));
      modulus = pz;
      last_candidate.clear();
      continue;
    }
    // Chinese remaindering of acc (mod modulus) with g (mod p).
    Integer minv;
    Integer mm = modulus % pz;
    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < g.size(); ++i) {
      Integer diff = (Integer(std::to_string(g[i])) - acc[i]) % pz;
      if (diff < 0) diff += pz;
      Integer t = diff * minv % pz;
      acc[i] += modulus * t;
    }
    modulus *= pz;
    std::vector<Integer> candidate(acc.size());
    Integer half = modulus / 2;
    for (std::size_t i = 0; i < acc.size(); ++i) candidate[i] = acc[i] > half ? Integer(acc[i] - modulus) : acc[i];
    if (candidate != last_candidate) {
      last_candidate = candidate;
      continue;
    }
    std::vector<Rational> rc(candidate.begin(), candidate.end());
    std::vector<Integer> prim = primitive_integer(rc);
    LaurentPoly h = from_univariate(std::vector<Rational>(prim.begin(), prim.end()), var);
    if (exact_div(pa, h) && exact_div(pb, h)) return monic(std::vector<Rational>(prim.begin(), prim.end()), var);
  }
}

}  // namespace psl2z
