#pragma once

// Internal field representation and the flat "view" layer used by enumeration
// kernels. Not installed; geometry/bsd counting loops include this directly.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cubiczeta/gf.hpp"
#include "cubiczeta/rng.hpp"

namespace cubiczeta::gf::detail {

enum class Mode { Prime, Table, Big };

struct FieldImpl {
  uint64_t p = 0;
  unsigned r = 0;
  Int q;
  bool fits64 = false;
  uint64_t q64 = 0;
  std::vector<uint16_t> modulus;  // length r+1, monic
  Mode mode = Mode::Big;

  // Table mode (r >= 2, q <= 65536): codes are base-p digit packings.
  uint32_t qu = 0;
  std::vector<uint16_t> expt;  // size 2*(q-1): g^i, index without reduction
  std::vector<uint16_t> logt;  // size q; logt[0] unused
  std::vector<uint16_t> negt;  // size q (empty when p == 2)
  bool xor_add = false;        // p == 2: code addition is XOR
  std::vector<uint16_t> addt;  // full q*q table when q <= kFullAddMax and p odd
  uint32_t slo = 0, shi = 0;   // chunked addition: q = slo*shi, code = hi*slo+lo
  std::vector<uint16_t> addlo, addhi;

  static constexpr uint32_t kFullAddMax = 2048;

  uint32_t code_of(const Elem& a) const {
    uint32_t v = 0;
    for (int i = int(r) - 1; i >= 0; --i) v = v * uint32_t(p) + a.c[i];
    return v;
  }
  Elem elem_of(uint64_t code) const {
    Elem e{};
    for (unsigned i = 0; i < r; ++i) {
      e.c[i] = uint16_t(code % p);
      code /= p;
    }
    return e;
  }

  uint32_t tbl_add(uint32_t a, uint32_t b) const {
    if (xor_add) return a ^ b;
    if (!addt.empty()) return addt[a * qu + b];
    uint32_t lo = addlo[(a % slo) * slo + (b % slo)];
    uint32_t hi = addhi[(a / slo) * shi + (b / slo)];
    return hi * slo + lo;
  }
  uint32_t tbl_neg(uint32_t a) const { return xor_add ? a : negt[a]; }
  uint32_t tbl_mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return expt[uint32_t(logt[a]) + uint32_t(logt[b])];
  }
  uint32_t tbl_inv(uint32_t a) const { return expt[(qu - 1) - logt[a]]; }
  uint32_t tbl_pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    uint64_t l = (uint64_t(logt[a]) * (e % (qu - 1))) % (qu - 1);
    return expt[l];
  }

  // Generic (Big-mode capable) coefficient arithmetic; valid in every mode.
  void big_mul(const Elem& a, const Elem& b, Elem& out) const {
    uint64_t acc[2 * kMaxExtDeg] = {0};
    for (unsigned i = 0; i < r; ++i) {
      if (!a.c[i]) continue;
      uint64_t ai = a.c[i];
      for (unsigned j = 0; j < r; ++j) acc[i + j] += ai * b.c[j];
    }
    for (int d = 2 * int(r) - 2; d >= int(r); --d) {
      uint64_t lead = acc[d] % p;
      if (lead) {
        uint64_t mlead = p - lead;  // add (p - lead)*m[j] == subtract lead*m[j]
        for (unsigned j = 0; j < r; ++j) acc[d - r + j] += mlead * modulus[j];
      }
      acc[d] = 0;
    }
    out = Elem{};
    for (unsigned i = 0; i < r; ++i) out.c[i] = uint16_t(acc[i] % p);
  }
};

// ---------------------------------------------------------------------------
// Views: flat value types over which the hot kernels are templated.
// ---------------------------------------------------------------------------

struct PrimeView {
  uint64_t p;
  using E = uint32_t;
  uint64_t q() const { return p; }
  E zero() const { return 0; }
  E one() const { return 1; }
  bool is_zero(E a) const { return a == 0; }
  bool eq(E a, E b) const { return a == b; }
  E add(E a, E b) const {
    uint64_t s = uint64_t(a) + b;
    return E(s >= p ? s - p : s);
  }
  E neg(E a) const { return a ? E(p - a) : 0; }
  E sub(E a, E b) const { return add(a, neg(b)); }
  E mul(E a, E b) const { return E(uint64_t(a) * b % p); }
  E pow(E a, uint64_t e) const {
    E x = a, y = 1;
    while (e) {
      if (e & 1) y = mul(y, x);
      x = mul(x, x);
      e >>= 1;
    }
    return y;
  }
  E inv(E a) const { return pow(a, p - 2); }
  bool is_square(E a) const { return pow(a, (p - 1) >> 1) == 1; }  // p odd, a != 0
  E from_elem(const Elem& x) const { return x.c[0]; }
  Elem to_elem(E a) const {
    Elem e{};
    e.c[0] = uint16_t(a);
    return e;
  }
  E from_index(uint64_t i) const { return E(i); }
};

struct TableView {
  const FieldImpl* F;
  using E = uint32_t;
  uint64_t q() const { return F->qu; }
  E zero() const { return 0; }
  E one() const { return 1; }  // code of multiplicative identity is 1 in every mode
  bool is_zero(E a) const { return a == 0; }
  bool eq(E a, E b) const { return a == b; }
  E add(E a, E b) const { return F->tbl_add(a, b); }
  E neg(E a) const { return F->tbl_neg(a); }
  E sub(E a, E b) const { return F->tbl_add(a, F->tbl_neg(b)); }
  E mul(E a, E b) const { return F->tbl_mul(a, b); }
  E inv(E a) const { return F->tbl_inv(a); }
  E pow(E a, uint64_t e) const { return F->tbl_pow(a, e); }
  bool is_square(E a) const { return (F->logt[a] & 1) == 0; }  // q odd, a != 0
  E from_elem(const Elem& x) const { return F->code_of(x); }
  Elem to_elem(E a) const { return F->elem_of(a); }
  E from_index(uint64_t i) const { return E(i); }
};

struct BigView {
  const FieldImpl* F;
  using E = Elem;
  uint64_t q() const { return F->q64; }
  E zero() const { return Elem{}; }
  E one() const {
    Elem e{};
    e.c[0] = 1;
    return e;
  }
  bool is_zero(const E& a) const {
    for (unsigned i = 0; i < F->r; ++i)
      if (a.c[i]) return false;
    return true;
  }
  bool eq(const E& a, const E& b) const { return a == b; }
  E add(const E& a, const E& b) const {
    Elem o{};
    for (unsigned i = 0; i < F->r; ++i) {
      uint32_t s = uint32_t(a.c[i]) + b.c[i];
      o.c[i] = uint16_t(s >= F->p ? s - F->p : s);
    }
    return o;
  }
  E neg(const E& a) const {
    Elem o{};
    for (unsigned i = 0; i < F->r; ++i) o.c[i] = uint16_t(a.c[i] ? F->p - a.c[i] : 0);
    return o;
  }
  E sub(const E& a, const E& b) const { return add(a, neg(b)); }
  E mul(const E& a, const E& b) const {
    Elem o;
    F->big_mul(a, b, o);
    return o;
  }
  E pow(const E& a, uint64_t e) const {
    E x = a, y = one();
    while (e) {
      if (e & 1) y = mul(y, x);
      x = mul(x, x);
      e >>= 1;
    }
    return y;
  }
  E inv(const E& a) const { return pow(a, F->q64 - 2); }
  bool is_square(const E& a) const {  // q odd, a != 0
    E t = pow(a, (F->q64 - 1) >> 1);
    return eq(t, one());
  }
  E from_elem(const Elem& x) const { return x; }
  Elem to_elem(const E& a) const { return a; }
  E from_index(uint64_t i) const { return F->elem_of(i); }
};

// Calls fn with the fastest applicable view. Requires q to fit in 64 bits.
template <class Fn>
decltype(auto) with_view(const Field& F, Fn&& fn) {
  const FieldImpl* im = F.impl();
  switch (im->mode) {
    case Mode::Prime:
      return fn(PrimeView{im->p});
    case Mode::Table:
      return fn(TableView{im});
    default:
      if (!im->fits64) throw std::overflow_error("field too large for enumeration kernels");
      return fn(BigView{im});
  }
}

// ---------------------------------------------------------------------------
// Kernel: distinct roots of a low-degree univariate polynomial, via
// gcd(x^q - x, f) and deterministic equal-degree splitting. coef[0..deg].
// ---------------------------------------------------------------------------

inline constexpr int kPolyCap = 12;

template <class V>
struct KPoly {
  typename V::E c[kPolyCap];
  int deg;  // -1 for zero
};

template <class V>
inline void kp_trim(const V& f, KPoly<V>& a) {
  while (a.deg >= 0 && f.is_zero(a.c[a.deg])) --a.deg;
}

template <class V>
inline void kp_make_monic(const V& f, KPoly<V>& a) {
  if (a.deg < 0) return;
  auto lc = a.c[a.deg];
  if (f.eq(lc, f.one())) return;
  auto il = f.inv(lc);
  for (int i = 0; i <= a.deg; ++i) a.c[i] = f.mul(a.c[i], il);
}

// a mod b (b monic, deg b >= 1); destroys a in place
template <class V>
inline void kp_mod_monic(const V& f, KPoly<V>& a, const KPoly<V>& b) {
  if (a.deg < b.deg) return;
  for (int d = a.deg; d >= b.deg; --d) {
    auto lead = a.c[d];
    if (!f.is_zero(lead)) {
      for (int j = 0; j < b.deg; ++j)
        a.c[d - b.deg + j] = f.sub(a.c[d - b.deg + j], f.mul(lead, b.c[j]));
    }
    a.c[d] = f.zero();
  }
  a.deg = b.deg - 1;
  kp_trim(f, a);
}

template <class V>
inline void kp_mul_mod(const V& f, const KPoly<V>& a, const KPoly<V>& b, const KPoly<V>& m,
                       KPoly<V>& out) {
  typename V::E acc[2 * kPolyCap];
  int dn = (a.deg < 0 || b.deg < 0) ? -1 : a.deg + b.deg;
  for (int i = 0; i <= dn; ++i) acc[i] = f.zero();
  for (int i = 0; i <= a.deg; ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (int j = 0; j <= b.deg; ++j) acc[i + j] = f.add(acc[i + j], f.mul(a.c[i], b.c[j]));
  }
  // reduce mod m (monic)
  for (int d = dn; d >= m.deg; --d) {
    auto lead = acc[d];
    if (!f.is_zero(lead)) {
      for (int j = 0; j < m.deg; ++j)
        acc[d - m.deg + j] = f.sub(acc[d - m.deg + j], f.mul(lead, m.c[j]));
    }
  }
  out.deg = m.deg - 1 < dn ? m.deg - 1 : dn;
  for (int i = 0; i <= out.deg; ++i) out.c[i] = acc[i];
  kp_trim(f, out);
}

// g <- gcd(a, b), monic; a and b are clobbered
template <class V>
inline void kp_gcd(const V& f, KPoly<V>& a, KPoly<V>& b, KPoly<V>& g) {
  kp_trim(f, a);
  kp_trim(f, b);
  KPoly<V>*x = &a, *y = &b;
  while (y->deg >= 0) {
    kp_make_monic(f, *y);
    if (y->deg == 0) {
      g.deg = 0;
      g.c[0] = f.one();
      return;
    }
    kp_mod_monic(f, *x, *y);
    std::swap(x, y);
  }
  g = *x;
  kp_make_monic(f, g);
}

// h <- x^e mod m (m monic, deg >= 2)
template <class V>
inline void kp_xpow_mod(const V& f, uint64_t e, const KPoly<V>& m, KPoly<V>& h) {
  h.deg = 0;
  h.c[0] = f.one();
  if (e == 0) return;
  int top = 63;
  while (!((e >> top) & 1)) --top;
  KPoly<V> t;
  for (int i = top; i >= 0; --i) {
    kp_mul_mod(f, h, h, m, t);
    if ((e >> i) & 1) {
      // t <- t * x mod m
      for (int j = t.deg; j >= 0; --j) t.c[j + 1] = t.c[j];
      t.c[0] = f.zero();
      ++t.deg;
      if (t.deg >= m.deg) kp_mod_monic(f, t, m);
    }
    h = t;
  }
}

// distinct roots in F_q of the polynomial coef[0..deg]; returns count, roots
// appended to out (order unspecified). Degree must be < kPolyCap - 1.
template <class V>
inline int kernel_distinct_roots(const V& f, const typename V::E* coef, int deg,
                                 typename V::E* out, bool want_roots, uint64_t seed) {
  KPoly<V> a;
  a.deg = deg;
  for (int i = 0; i <= deg; ++i) a.c[i] = coef[i];
  kp_trim(f, a);
  if (a.deg <= 0) return 0;  // constant (callers handle the identically-zero case)
  int cnt = 0;
  if (f.is_zero(a.c[0])) {
    if (want_roots) out[cnt] = f.zero();
    ++cnt;
    int k = 1;
    while (k <= a.deg && f.is_zero(a.c[k])) ++k;
    for (int i = k; i <= a.deg; ++i) a.c[i - k] = a.c[i];
    a.deg -= k;
    if (a.deg <= 0) return cnt;
  }
  kp_make_monic(f, a);
  if (a.deg == 1) {
    if (want_roots) out[cnt] = f.neg(a.c[0]);
    return cnt + 1;
  }
  // s = gcd(x^q - x, a): product of (x - root) over distinct roots
  KPoly<V> h, s, tmp;
  kp_xpow_mod(f, f.q(), a, h);
  // h <- h - x
  if (h.deg < 1) {
    if (h.deg < 0) h.c[0] = f.zero();
    h.c[1] = f.zero();
    h.deg = 1;
  }
  h.c[1] = f.sub(h.c[1], f.one());
  kp_trim(f, h);
  tmp = a;
  kp_gcd(f, h, tmp, s);
  if (s.deg <= 0) return cnt;
  if (!want_roots) return cnt + s.deg;

  // split s completely (all roots lie in F_q, s squarefree)
  KPoly<V> stack[kPolyCap];
  int sp = 0;
  stack[sp++] = s;
  SplitMix64 rng(seed ^ 0x9fb21c651e98df25ULL);
  const bool even = (f.q() & 1) == 0;
  while (sp) {
    KPoly<V> g = stack[--sp];
    if (g.deg == 1) {
      out[cnt++] = f.neg(g.c[0]);
      continue;
    }
    // pick a splitter until proper
    for (;;) {
      KPoly<V> w;
      if (!even) {
        // w = (x + alpha)^((q-1)/2) mod g - 1
        typename V::E alpha = f.from_index(rng.below(f.q()));
        KPoly<V> base;
        base.deg = 1;
        base.c[0] = alpha;
        base.c[1] = f.one();
        uint64_t e = (f.q() - 1) >> 1;
        w.deg = 0;
        w.c[0] = f.one();
        KPoly<V> sq = base, t2;
        while (e) {
          if (e & 1) {
            kp_mul_mod(f, w, sq, g, t2);
            w = t2;
          }
          kp_mul_mod(f, sq, sq, g, t2);
          sq = t2;
          e >>= 1;
        }
        w.c[0] = f.sub(w.c[0], f.one());
        kp_trim(f, w);
      } else {
        // trace map of c*x: sum over i of (c x)^(2^i) mod g
        typename V::E cmul = f.from_index(1 + rng.below(f.q() - 1));
        KPoly<V> t;
        t.deg = 1;
        t.c[0] = f.zero();
        t.c[1] = cmul;
        if (t.deg >= g.deg) kp_mod_monic(f, t, g);
        w = t;
        uint64_t m = f.q();
        int bits = 0;
        while (m > 1) {
          m >>= 1;
          ++bits;
        }
        KPoly<V> t2;
        for (int i = 1; i < bits; ++i) {
          kp_mul_mod(f, t, t, g, t2);
          t = t2;
          // w += t
          if (t.deg > w.deg) {
            for (int j = w.deg + 1; j <= t.deg; ++j) w.c[j] = f.zero();
            w.deg = t.deg;
          }
          for (int j = 0; j <= t.deg; ++j) w.c[j] = f.add(w.c[j], t.c[j]);
          kp_trim(f, w);
        }
      }
      KPoly<V> d, wc = w, gc = g;
      kp_gcd(f, wc, gc, d);
      if (d.deg > 0 && d.deg < g.deg) {
        // push d and g/d (both monic): synthetic division
        KPoly<V> quo;
        quo.deg = g.deg - d.deg;
        KPoly<V> r2 = g;
        for (int dd = r2.deg; dd >= d.deg; --dd) {
          auto lead = r2.c[dd];
          quo.c[dd - d.deg] = lead;
          if (!f.is_zero(lead)) {
            for (int j = 0; j < d.deg; ++j)
              r2.c[dd - d.deg + j] = f.sub(r2.c[dd - d.deg + j], f.mul(lead, d.c[j]));
          }
          r2.c[dd] = f.zero();
        }
        stack[sp++] = d;
        stack[sp++] = quo;
        break;
      }
    }
  }
  return cnt;
}

template <class V>
inline int kernel_distinct_root_count(const V& f, const typename V::E* coef, int deg) {
  return kernel_distinct_roots<V>(f, coef, deg, nullptr, false, 0);
}

}  // namespace cubiczeta::gf::detail
