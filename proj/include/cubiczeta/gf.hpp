#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cubiczeta/intmath.hpp"

namespace cubiczeta::gf {

// Maximum extension degree over the prime field. Coefficients are uint16, so
// p < 2^16; q = p^r may exceed 64 bits only for contexts that never enumerate.
inline constexpr int kMaxExtDeg = 16;

// Element of F_{p^r}: coordinates in the power basis 1, t, ..., t^{r-1},
// zero-padded beyond degree r.
struct Elem {
  std::array<uint16_t, kMaxExtDeg> c{};
  friend bool operator==(const Elem&, const Elem&) = default;
};

// Deterministic order used for root listings and least-root selection:
// lexicographic on (c[0], c[1], ...).
inline bool lex_less(const Elem& a, const Elem& b) {
  for (int i = 0; i < kMaxExtDeg; ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

namespace detail {
struct FieldImpl;
}

class Field {
 public:
  Field() = default;

  // Modulus is the lexicographically least monic irreducible polynomial of
  // degree r over F_p, coefficients compared from the constant term upward.
  // Results are memoized; contexts are immutable and freely shareable.
  static Field create(uint64_t p, unsigned r);

  bool valid() const { return impl_ != nullptr; }
  uint64_t p() const;
  unsigned degree() const;
  const Int& q() const;
  bool q_fits_u64() const;
  uint64_t q64() const;  // throws if q does not fit
  const std::vector<uint16_t>& modulus() const;  // length r+1, monic; r=1: {0,1}

  Elem zero() const { return Elem{}; }
  Elem one() const;
  Elem from_int(long v) const;  // scalar embedding of Z (reduction mod p)
  Elem from_coeffs(const std::vector<long>& c) const;
  Elem from_index(uint64_t idx) const;  // base-p digits, constant term least significant
  uint64_t to_index(const Elem& a) const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;  // throws on zero
  Elem pow(const Elem& a, const Int& e) const;  // e >= 0
  Elem pow_u(const Elem& a, uint64_t e) const;

  // Membership in (F_q^x)^2. Throws on zero. For even q returns true for all
  // nonzero inputs (the unit group has odd order).
  bool is_square(const Elem& a) const;

  std::string format(const Elem& a) const;  // decimal (r=1) or "[c0,...,c_{r-1}]"
  Elem parse(const std::string& s) const;

  bool same(const Field& o) const;
  const detail::FieldImpl* impl() const { return impl_.get(); }

 private:
  std::shared_ptr<const detail::FieldImpl> impl_;
};

// "p" or "p^r"
Field field_from_spec(const std::string& spec);

// true iff x -> x^3 is a bijection of F_q, i.e. 3 does not divide q - 1
bool cube_map_is_bijective(const Field& F);

// ---------------------------------------------------------------------------
// Univariate polynomials over a field: dense, lowest-degree-first vectors.
// ---------------------------------------------------------------------------
using FPoly = std::vector<Elem>;

int fp_deg(const FPoly& f);  // -1 for zero polynomial
FPoly fp_trim(FPoly f);
bool fp_is_zero(const FPoly& f);
Elem fp_eval(const Field& F, const FPoly& f, const Elem& x);
FPoly fp_add(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_sub(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_mul(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_scale(const Field& F, const FPoly& a, const Elem& s);
// f = q*g + r with deg r < deg g; g nonzero
void fp_divrem(const Field& F, const FPoly& f, const FPoly& g, FPoly& quot, FPoly& rem);
FPoly fp_mod(const Field& F, const FPoly& f, const FPoly& g);
FPoly fp_make_monic(const Field& F, const FPoly& f);
FPoly fp_gcd(const Field& F, FPoly a, FPoly b);  // monic gcd
FPoly fp_derivative(const Field& F, const FPoly& f);
FPoly fp_pow_mod(const Field& F, const FPoly& base, const Int& e, const FPoly& mod);

struct RootMult {
  Elem root;
  int mult;
};

// Exactly the roots of f in F with multiplicity, sorted lexicographically.
// Equal-degree splitting draws its blinding values from a deterministic
// generator derived from `seed`, so outputs are reproducible.
std::vector<RootMult> poly_roots(const Field& F, const FPoly& f, uint64_t seed = 0);
std::vector<Elem> distinct_roots(const Field& F, const FPoly& f, uint64_t seed = 0);

// Irreducible monic factors with multiplicity over a prime field.
std::vector<std::pair<FPoly, int>> factor_modp(const Field& F, const FPoly& f,
                                               uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Subfield embeddings: F_{p^r} -> F_{p^{rk}}, sending the base generator t to
// the lexicographically least root of the base modulus in the big field.
// ---------------------------------------------------------------------------
class Embedding {
 public:
  Embedding() = default;
  Embedding(const Field& src, const Field& dst);  // throws if incompatible
  const Field& src() const { return src_; }
  const Field& dst() const { return dst_; }
  Elem operator()(const Elem& a) const;

 private:
  Field src_, dst_;
  std::vector<Elem> tpow_;  // images of t^i, i < deg(src)
};

Elem subfield_embed(const Elem& a, const Field& src, const Field& dst);

}  // namespace cubiczeta::gf
