#pragma once

#include <string>
#include <vector>

#include "cubiczeta/intmath.hpp"

namespace cubiczeta {

// Univariate integer polynomials, coefficients lowest degree first.
// The zero polynomial is the empty vector; results are always trimmed.
using ZPoly = std::vector<Int>;

int zp_deg(const ZPoly& f);  // -1 for the zero polynomial
void zp_trim(ZPoly& f);
bool zp_is_zero(const ZPoly& f);
bool zp_eq(const ZPoly& a, const ZPoly& b);

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_neg(const ZPoly& a);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_scale(const ZPoly& a, const Int& c);
ZPoly zp_pow(const ZPoly& a, unsigned e);
ZPoly zp_derivative(const ZPoly& a);

Int zp_eval(const ZPoly& f, const Int& x);
Rat zp_eval(const ZPoly& f, const Rat& x);

// Coefficient vector reversed: T^deg * f(1/T).  Trims, so trailing zero
// coefficients of f (impossible when trimmed) and leading zeros vanish.
ZPoly zp_reverse(const ZPoly& f);

// f(c*T): multiplies coefficient k by c^k.
ZPoly zp_scale_var(const ZPoly& f, const Int& c);

Int zp_content(const ZPoly& f);     // gcd of coefficients, >= 0; 0 for zero
ZPoly zp_primitive(const ZPoly& f); // f / content, sign of lead kept

// True if g divides f in Q[T] with an integer quotient; f = q*g exactly.
bool zp_divides(const ZPoly& g, const ZPoly& f);
// Exact quotient f/g; throws std::domain_error if not exactly divisible.
ZPoly zp_divexact(const ZPoly& f, const ZPoly& g);

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient (0 if both inputs are 0).
ZPoly zp_gcd(const ZPoly& a, const ZPoly& b);
ZPoly zp_squarefree_part(const ZPoly& f);

// Yun decomposition of the primitive part (sign normalized): pairs (u, i)
// with u squarefree, pairwise coprime, deg >= 1 and prod u^i = +-f/content.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f);

struct ZFactor {
  ZPoly poly;  // primitive, irreducible over Q, positive leading coefficient
  int mult = 0;
};

struct ZFactorization {
  Int content;  // signed; input = content * prod poly^mult
  std::vector<ZFactor> factors;
};

// Complete factorization into irreducibles over Q (degree <= 32).
// Deterministic: factors sorted by degree, then lexicographically by
// coefficients from the constant term up.
ZFactorization factor_over_Z(const ZPoly& f);

// n-th cyclotomic polynomial, n >= 1.
ZPoly cyclotomic(unsigned n);

// Exact real number a + b*sqrt(d) with d >= 0.
struct Surd {
  Rat a, b;
  Int d;
  Surd() : d(0) {}
  Surd(Rat a_, Rat b_, Int d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}
  static Surd rational(const Rat& r) { return Surd(r, Rat(0), Int(0)); }
};

int surd_sign(const Surd& s);
bool surd_less(const Surd& x, const Surd& y);  // requires equal d or rational
bool surd_is_root(const ZPoly& f, const Surd& x);

// Number of distinct real roots (whole line / closed interval [lo, hi]).
// lo and hi must satisfy lo <= hi and share the same radicand.
int count_real_roots(const ZPoly& f);
int count_real_roots_closed(const ZPoly& f, const Surd& lo, const Surd& hi);

// Human-readable form like "1 - 3T + 4T^2"; "0" for the zero polynomial.
std::string zp_format(const ZPoly& f, const std::string& var = "T");

}  // namespace cubiczeta
