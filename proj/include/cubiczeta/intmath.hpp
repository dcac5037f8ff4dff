#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cubiczeta {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Int int_pow(uint64_t b, unsigned long e) { return int_pow(Int(static_cast<unsigned long>(b)), e); }

// floor(sqrt(n)), n >= 0
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  Int m(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;  // deterministic for 64-bit range
}

// q = p^r with p prime, r >= 1; returns false if q is not a prime power.
inline bool prime_power_decompose(uint64_t q, uint64_t& p, unsigned& r) {
  if (q < 2) return false;
  for (uint64_t b = 2; b * b <= q; ++b) {
    if (q % b) continue;
    uint64_t m = q;
    unsigned e = 0;
    while (m % b == 0) { m /= b; ++e; }
    if (m != 1) return false;
    p = b;
    r = e;
    return is_prime_u64(b);
  }
  p = q;
  r = 1;
  return is_prime_u64(q);
}

inline uint64_t u64_pow_checked(uint64_t b, unsigned e) {
  uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > UINT64_MAX / b) throw std::overflow_error("p^r exceeds 64 bits");
    r *= b;
  }
  return r;
}

// Sign of u + v*sqrt(q) with q > 0 not necessarily square; exact.
inline int surd_sign(const Rat& u, const Rat& v, const Int& q) {
  int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // compare u^2 vs v^2*q; sign decided by which dominates
  Rat lhs = u * u, rhs = v * v * Rat(q);
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return (c > 0) ? su : sv;
}

// floor(u + v*sqrt(q)) for exact rational u, v and integer q >= 0.
inline Int surd_floor(const Rat& u, const Rat& v, const Int& q) {
  // binary search over integers using surd_sign(u - m, v, q)
  Int lo = -1, hi = 1;
  auto ge = [&](const Int& m) { return surd_sign(u - Rat(m), v, q) >= 0; };  // u + v sqrt(q) >= m
  while (ge(hi)) hi *= 2;
  while (!ge(lo)) lo *= 2;
  // invariant: ge(lo), !ge(hi)
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (ge(mid)) lo = mid; else hi = mid;
  }
  return lo;
}

inline Int surd_ceil(const Rat& u, const Rat& v, const Int& q) {
  Int f = surd_floor(u, v, q);
  // value equals f exactly iff u - f + v sqrt(q) == 0
  if (surd_sign(u - Rat(f), v, q) == 0) return f;
  return f + 1;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace cubiczeta
