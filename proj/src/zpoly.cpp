#include "cubiczeta/zpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "cubiczeta/gf.hpp"

namespace cubiczeta {

int zp_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void zp_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

bool zp_is_zero(const ZPoly& f) { return f.empty(); }

bool zp_eq(const ZPoly& a, const ZPoly& b) { return a == b; }

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_neg(const ZPoly& a) {
  ZPoly r(a);
  for (auto& c : r) c = -c;
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  zp_trim(r);
  return r;
}

ZPoly zp_scale(const ZPoly& a, const Int& c) {
  if (c == 0) return {};
  ZPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

ZPoly zp_pow(const ZPoly& a, unsigned e) {
  ZPoly r{Int(1)};
  for (unsigned i = 0; i < e; ++i) r = zp_mul(r, a);
  return r;
}

ZPoly zp_derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = Int(static_cast<long>(i)) * a[i];
  zp_trim(r);
  return r;
}

Int zp_eval(const ZPoly& f, const Int& x) {
  Int v(0);
  for (size_t i = f.size(); i-- > 0;) v = v * x + f[i];
  return v;
}

Rat zp_eval(const ZPoly& f, const Rat& x) {
  Rat v(0);
  for (size_t i = f.size(); i-- > 0;) v = v * x + Rat(f[i]);
  return v;
}

ZPoly zp_reverse(const ZPoly& f) {
  ZPoly r(f.rbegin(), f.rend());
  zp_trim(r);
  return r;
}

ZPoly zp_scale_var(const ZPoly& f, const Int& c) {
  ZPoly r(f);
  Int ck(1);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] *= ck;
    ck *= c;
  }
  zp_trim(r);
  return r;
}

Int zp_content(const ZPoly& f) {
  Int g(0);
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zp_primitive(const ZPoly& f) {
  Int c = zp_content(f);
  if (c == 0) return {};
  ZPoly r(f);
  for (auto& x : r) x /= c;
  zp_trim(r);
  return r;
}

// ---------------------------------------------------------------------------
// Rational-coefficient helpers (internal): division, gcd, Sturm chains.
// ---------------------------------------------------------------------------
namespace {

using QP = std::vector<Rat>;

void qp_trim(QP& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

QP qp_of(const ZPoly& f) {
  QP r;
  r.reserve(f.size());
  for (const auto& c : f) r.emplace_back(c);
  return r;
}

int qp_deg(const QP& f) { return static_cast<int>(f.size()) - 1; }

QP qp_derivative(const QP& a) {
  if (a.size() <= 1) return {};
  QP r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * a[i];
  qp_trim(r);
  return r;
}

// f = q*g + r, deg r < deg g; g nonzero
void qp_divrem(const QP& f, const QP& g, QP& quot, QP& rem) {
  if (g.empty()) throw std::domain_error("polynomial division by zero");
  rem = f;
  qp_trim(rem);
  int dg = qp_deg(g);
  int df = qp_deg(rem);
  quot.assign(df >= dg ? df - dg + 1 : 0, Rat(0));
  for (int k = df - dg; k >= 0; --k) {
    Rat c = rem[k + dg] / g[dg];
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= dg; ++i) rem[k + i] -= c * g[i];
  }
  qp_trim(rem);
  qp_trim(quot);
}

QP qp_rem(const QP& f, const QP& g) {
  QP q, r;
  qp_divrem(f, g, q, r);
  return r;
}

// primitive integer polynomial proportional to f, positive leading coefficient
ZPoly qp_to_primitive(const QP& f) {
  if (f.empty()) return {};
  Int den(1);
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Rat v = f[i] * Rat(den);
    z[i] = v.get_num();
  }
  z = zp_primitive(z);
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

}  // namespace

bool zp_divides(const ZPoly& g, const ZPoly& f) {
  if (zp_is_zero(g)) return zp_is_zero(f);
  if (zp_is_zero(f)) return true;
  if (zp_deg(f) < zp_deg(g)) return false;
  QP q, r;
  qp_divrem(qp_of(f), qp_of(g), q, r);
  if (!r.empty()) return false;
  for (const auto& c : q)
    if (c.get_den() != 1) return false;
  return true;
}

ZPoly zp_divexact(const ZPoly& f, const ZPoly& g) {
  if (zp_is_zero(g)) throw std::domain_error("exact division by zero polynomial");
  if (zp_is_zero(f)) return {};
  QP q, r;
  qp_divrem(qp_of(f), qp_of(g), q, r);
  if (!r.empty()) throw std::domain_error("inexact polynomial division");
  ZPoly out(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) throw std::domain_error("inexact polynomial division");
    out[i] = q[i].get_num();
  }
  zp_trim(out);
  return out;
}

ZPoly zp_gcd(const ZPoly& a, const ZPoly& b) {
  QP x = qp_of(a), y = qp_of(b);
  qp_trim(x);
  qp_trim(y);
  while (!y.empty()) {
    QP r = qp_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return qp_to_primitive(x);
}

ZPoly zp_squarefree_part(const ZPoly& f) {
  ZPoly g = f;
  zp_trim(g);
  if (zp_deg(g) < 1) return zp_is_zero(g) ? ZPoly{} : ZPoly{Int(1)};
  ZPoly d = zp_gcd(g, zp_derivative(g));
  ZPoly part = zp_primitive(zp_divexact(g, d));
  if (!part.empty() && part.back() < 0)
    for (auto& c : part) c = -c;
  return part;
}

// ---------------------------------------------------------------------------
// Factorization over Z: squarefree split (Yun), distinct factors mod p for a
// handful of primes, Hensel lifting past the Mignotte bound, recombination.
// ---------------------------------------------------------------------------
namespace {

// residues in [0, M)
void mp_red(ZPoly& f, const Int& M) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  zp_trim(f);
}

ZPoly mp_mul(const ZPoly& a, const ZPoly& b, const Int& M) {
  ZPoly r = zp_mul(a, b);
  mp_red(r, M);
  return r;
}

ZPoly mp_sub(const ZPoly& a, const ZPoly& b, const Int& M) {
  ZPoly r = zp_sub(a, b);
  mp_red(r, M);
  return r;
}

// b monic
void mp_divrem(const ZPoly& a, const ZPoly& b, const Int& M, ZPoly& quot, ZPoly& rem) {
  if (b.empty() || b.back() != 1) throw std::logic_error("mp_divrem: divisor not monic");
  rem = a;
  mp_red(rem, M);
  int db = zp_deg(b);
  int da = zp_deg(rem);
  quot.assign(da >= db ? da - db + 1 : 0, Int(0));
  for (int k = da - db; k >= 0; --k) {
    Int c = rem[k + db];
    if (c == 0) continue;
    quot[k] = c;
    for (int i = 0; i <= db; ++i) {
      rem[k + i] -= c * b[i];
      mpz_fdiv_r(rem[k + i].get_mpz_t(), rem[k + i].get_mpz_t(), M.get_mpz_t());
    }
  }
  zp_trim(rem);
  zp_trim(quot);
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("non-invertible residue");
  return r;
}

// s*a + t*b == 1 mod p for coprime a, b over the prime field
void mp_xgcd_coprime(const ZPoly& a, const ZPoly& b, const Int& p, ZPoly& s, ZPoly& t) {
  ZPoly r0 = a, r1 = b;
  mp_red(r0, p);
  mp_red(r1, p);
  ZPoly s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
  while (!r1.empty()) {
    // scale divisor monic for mp_divrem
    Int lc = r1.back();
    Int il = inv_mod(lc, p);
    ZPoly r1m = zp_scale(r1, il);
    mp_red(r1m, p);
    ZPoly q, r;
    mp_divrem(r0, r1m, p, q, r);
    q = zp_scale(q, il);
    mp_red(q, p);
    ZPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    ZPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (zp_deg(r0) != 0) throw std::logic_error("mp_xgcd_coprime: inputs not coprime");
  Int u = inv_mod(r0[0], p);
  s = zp_scale(s0, u);
  t = zp_scale(t0, u);
  mp_red(s, p);
  mp_red(t, p);
}

// Lift f == A*B (mod p), A and B monic coprime, to f == A*B (mod P).
void hensel_pair(const ZPoly& f, ZPoly& A, ZPoly& B, const Int& p, const Int& P) {
  ZPoly s, t;
  mp_xgcd_coprime(A, B, p, s, t);
  Int m = p;
  while (m < P) {
    Int m2 = m * m;
    if (m2 > P) m2 = P;  // P is a power of p, so m2 stays one as well
    ZPoly fr = f;
    mp_red(fr, m2);
    ZPoly e = mp_sub(fr, mp_mul(A, B, m2), m2);
    ZPoly q, r;
    mp_divrem(mp_mul(s, e, m2), B, m2, q, r);
    ZPoly A2 = zp_add(A, zp_add(mp_mul(t, e, m2), mp_mul(q, A, m2)));
    mp_red(A2, m2);
    ZPoly B2 = zp_add(B, r);
    mp_red(B2, m2);
    if (A2.empty() || A2.back() != 1 || B2.empty() || B2.back() != 1 ||
        zp_deg(A2) != zp_deg(A) || zp_deg(B2) != zp_deg(B))
      throw std::logic_error("hensel_pair: lift lost monicity");
    ZPoly b = mp_sub(zp_add(mp_mul(s, A2, m2), mp_mul(t, B2, m2)), ZPoly{Int(1)}, m2);
    ZPoly c, d;
    mp_divrem(mp_mul(s, b, m2), B2, m2, c, d);
    ZPoly s2 = mp_sub(s, d, m2);
    ZPoly t2 = mp_sub(t, zp_add(mp_mul(t, b, m2), mp_mul(c, A2, m2)), m2);
    A = std::move(A2);
    B = std::move(B2);
    s = std::move(s2);
    t = std::move(t2);
    m = m2;
  }
}

// f monic mod P; fac are its monic pairwise-coprime factors mod p.
std::vector<ZPoly> hensel_tree(const ZPoly& f, const std::vector<ZPoly>& fac, const Int& p,
                               const Int& P) {
  if (fac.size() == 1) {
    ZPoly r = f;
    mp_red(r, P);
    return {r};
  }
  size_t h = fac.size() / 2;
  std::vector<ZPoly> left(fac.begin(), fac.begin() + h);
  std::vector<ZPoly> right(fac.begin() + h, fac.end());
  ZPoly A{Int(1)}, B{Int(1)};
  for (const auto& g : left) A = mp_mul(A, g, p);
  for (const auto& g : right) B = mp_mul(B, g, p);
  hensel_pair(f, A, B, p, P);
  std::vector<ZPoly> out = hensel_tree(A, left, p, P);
  std::vector<ZPoly> more = hensel_tree(B, right, p, P);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

ZPoly balanced(const ZPoly& f, const Int& P) {
  ZPoly r = f;
  mp_red(r, P);
  Int half = P / 2;
  for (auto& c : r)
    if (c > half) c -= P;
  zp_trim(r);
  return r;
}

gf::FPoly to_fpoly(const gf::Field& F, const ZPoly& f) {
  gf::FPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    unsigned long m = mpz_fdiv_ui(f[i].get_mpz_t(), F.p());
    r[i] = F.from_int(static_cast<long>(m));
  }
  return gf::fp_trim(r);
}

ZPoly from_fpoly(const gf::Field& F, const gf::FPoly& f) {
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<unsigned long>(F.to_index(f[i])));
  zp_trim(r);
  return r;
}

// m monic squarefree, deg >= 2: irreducible monic factors over Z
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& m) {
  const int d = zp_deg(m);
  // pick the prime (m squarefree mod p) giving the fewest factors
  uint64_t best_p = 0;
  std::vector<ZPoly> best_fac;
  int tried = 0;
  for (uint64_t p = 3; p < 20000 && tried < 7; p += 2) {
    if (!is_prime_u64(p)) continue;
    gf::Field F = gf::Field::create(p, 1);
    gf::FPoly fm = to_fpoly(F, m);
    if (gf::fp_deg(fm) != d) continue;  // cannot happen for monic m, kept for safety
    if (gf::fp_deg(gf::fp_gcd(F, fm, gf::fp_derivative(F, fm))) != 0) continue;
    ++tried;
    auto fac = gf::factor_modp(F, fm, 1);
    if (fac.size() == 1) return {m};  // irreducible mod p
    if (best_fac.empty() || fac.size() < best_fac.size()) {
      best_p = p;
      best_fac.clear();
      for (const auto& [g, e] : fac) {
        if (e != 1) throw std::logic_error("squarefree input split with multiplicity");
        best_fac.push_back(from_fpoly(F, g));
      }
    }
  }
  if (best_fac.empty()) throw std::logic_error("no usable prime for factorization");

  // coefficient bound for any monic integer factor, then lift past 2*bound
  Int height(0);
  for (const auto& c : m)
    if (abs(c) > height) height = abs(c);
  Int bound = (isqrt(Int(d + 1)) + 1) * int_pow(Int(2), static_cast<unsigned long>(d)) * height;
  Int p(static_cast<unsigned long>(best_p));
  Int P = p;
  while (P <= 2 * bound) P *= p;

  std::vector<ZPoly> pool = hensel_tree(m, best_fac, p, P);

  std::vector<ZPoly> out;
  ZPoly rem = m;
  size_t take = 1;
  while (2 * take <= pool.size()) {
    // subsets of the pool of size `take`, lexicographic by index
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      ZPoly cand{Int(1)};
      for (size_t i : idx) cand = mp_mul(cand, pool[i], P);
      cand = balanced(cand, P);
      if (zp_divides(cand, rem)) {
        out.push_back(cand);
        rem = zp_divexact(rem, cand);
        for (size_t i = take; i-- > 0;) pool.erase(pool.begin() + idx[i]);
        found = true;
        break;
      }
      // next combination
      size_t j = take;
      while (j-- > 0) {
        if (idx[j] + (take - j) < pool.size()) {
          ++idx[j];
          for (size_t k = j + 1; k < take; ++k) idx[k] = idx[k - 1] + 1;
          break;
        }
        if (j == 0) {
          j = SIZE_MAX;
          break;
        }
      }
      if (j == SIZE_MAX) break;
    }
    if (!found) ++take;
  }
  if (zp_deg(rem) >= 1) out.push_back(rem);
  return out;
}

bool factor_less(const ZFactor& a, const ZFactor& b) {
  if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
  for (size_t i = 0; i < a.poly.size(); ++i) {
    int c = cmp(a.poly[i], b.poly[i]);
    if (c != 0) return c < 0;
  }
  return a.mult < b.mult;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f0) {
  ZPoly g = f0;
  zp_trim(g);
  if (zp_is_zero(g)) throw std::domain_error("squarefree decomposition of zero polynomial");
  g = zp_primitive(g);
  if (g.back() < 0)
    for (auto& c : g) c = -c;
  std::vector<std::pair<ZPoly, int>> out;
  if (zp_deg(g) == 0) return out;

  // Yun: g = prod u_i^i with u_i squarefree and pairwise coprime
  ZPoly gp = zp_derivative(g);
  ZPoly a = zp_gcd(g, gp);
  ZPoly b = zp_divexact(g, a);
  ZPoly d = zp_sub(zp_divexact(gp, a), zp_derivative(b));
  int mult = 1;
  while (zp_deg(b) >= 1) {
    ZPoly u = zp_gcd(b, d);
    if (zp_deg(u) >= 1) out.emplace_back(u, mult);
    ZPoly bn = zp_divexact(b, u);
    d = zp_sub(zp_divexact(d, u), zp_derivative(bn));
    b = std::move(bn);
    ++mult;
  }
  return out;
}

ZFactorization factor_over_Z(const ZPoly& f0) {
  ZPoly f = f0;
  zp_trim(f);
  if (zp_is_zero(f)) throw std::domain_error("factor_over_Z: zero polynomial");
  if (zp_deg(f) > 32) throw std::domain_error("factor_over_Z: degree above 32");
  ZFactorization out;
  out.content = zp_content(f);
  if (f.back() < 0) out.content = -out.content;

  for (const auto& [u, mult] : squarefree_decomposition(f)) {
    std::vector<ZPoly> irr;
    if (zp_deg(u) == 1) {
      irr.push_back(u);
    } else {
      // monic model lead^(d-1) * u(T/lead); factors map back via h(lead*T)
      Int lead = u.back();
      ZPoly monic(u.size());
      monic.back() = 1;
      Int pw(1);
      for (size_t k = u.size() - 1; k-- > 0;) {
        monic[k] = u[k] * pw;
        pw *= lead;
      }
      for (const auto& h : factor_monic_squarefree(monic))
        irr.push_back(zp_primitive(zp_scale_var(h, lead)));
    }
    for (auto& h : irr) out.factors.push_back(ZFactor{std::move(h), mult});
  }

  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  // verify the reconstruction exactly
  ZPoly check{out.content};
  for (const auto& fac : out.factors)
    check = zp_mul(check, zp_pow(fac.poly, static_cast<unsigned>(fac.mult)));
  if (!zp_eq(check, f)) throw std::logic_error("factor_over_Z: reconstruction mismatch");
  return out;
}

ZPoly cyclotomic(unsigned n) {
  if (n == 0) throw std::domain_error("cyclotomic index must be positive");
  std::map<unsigned, ZPoly> phi;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    ZPoly f(d + 1, Int(0));
    f[0] = -1;
    f[d] = 1;
    for (const auto& [e, ph] : phi)
      if (d % e == 0) f = zp_divexact(f, ph);
    phi.emplace(d, std::move(f));
  }
  return phi.at(n);
}

// ---------------------------------------------------------------------------
// Real root counting with exact a + b*sqrt(d) interval endpoints.
// ---------------------------------------------------------------------------
namespace {

// d normalized to 0 (rational) or a positive nonsquare
Surd surd_canon(const Surd& s) {
  Surd r = s;
  if (r.d < 0) throw std::domain_error("negative radicand");
  if (sgn(r.b) == 0) {
    r.d = 0;
    return r;
  }
  if (is_perfect_square(r.d)) {
    r.a += r.b * Rat(isqrt(r.d));
    r.b = 0;
    r.d = 0;
  }
  return r;
}

// value of f at a + b*sqrt(d) as (A, B) with A + B*sqrt(d)
std::pair<Rat, Rat> qp_eval_surd(const QP& f, const Surd& x) {
  Rat A(0), B(0);
  Rat dd(x.d);
  for (size_t i = f.size(); i-- > 0;) {
    Rat A2 = A * x.a + B * x.b * dd + f[i];
    Rat B2 = A * x.b + B * x.a;
    A = std::move(A2);
    B = std::move(B2);
  }
  return {A, B};
}

std::vector<QP> sturm_chain(const ZPoly& sf) {
  std::vector<QP> ch;
  ch.push_back(qp_of(sf));
  QP d1 = qp_derivative(ch[0]);
  if (d1.empty()) return ch;
  ch.push_back(std::move(d1));
  while (qp_deg(ch.back()) > 0) {
    QP r = qp_rem(ch[ch.size() - 2], ch.back());
    if (r.empty()) break;  // cannot happen for squarefree input
    for (auto& c : r) c = -c;
    ch.push_back(std::move(r));
  }
  return ch;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int chain_variations_at(const std::vector<QP>& ch, const Surd& x) {
  std::vector<int> signs;
  signs.reserve(ch.size());
  for (const auto& f : ch) {
    auto [A, B] = qp_eval_surd(f, x);
    signs.push_back(surd_sign(A, B, x.d));
  }
  return variations(signs);
}

int chain_variations_inf(const std::vector<QP>& ch, int dir) {
  std::vector<int> signs;
  signs.reserve(ch.size());
  for (const auto& f : ch) {
    int s = f.empty() ? 0 : sgn(f.back());
    if (dir < 0 && (qp_deg(f) & 1)) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

}  // namespace

int surd_sign(const Surd& s) {
  Surd c = surd_canon(s);
  return surd_sign(c.a, c.b, c.d);
}

bool surd_less(const Surd& x, const Surd& y) {
  Surd cx = surd_canon(x), cy = surd_canon(y);
  Int d = cx.d;
  if (sgn(cx.b) == 0)
    d = cy.d;
  else if (sgn(cy.b) != 0 && cx.d != cy.d)
    throw std::invalid_argument("surd comparison needs a common radicand");
  return surd_sign(cy.a - cx.a, cy.b - cx.b, d) > 0;
}

bool surd_is_root(const ZPoly& f, const Surd& x) {
  Surd c = surd_canon(x);
  auto [A, B] = qp_eval_surd(qp_of(f), c);
  return sgn(A) == 0 && sgn(B) == 0;
}

int count_real_roots(const ZPoly& f) {
  ZPoly sf = zp_squarefree_part(f);
  if (zp_is_zero(sf)) throw std::domain_error("root count of the zero polynomial");
  if (zp_deg(sf) < 1) return 0;
  auto ch = sturm_chain(sf);
  return chain_variations_inf(ch, -1) - chain_variations_inf(ch, +1);
}

int count_real_roots_closed(const ZPoly& f, const Surd& lo, const Surd& hi) {
  Surd a = surd_canon(lo), b = surd_canon(hi);
  Int d = sgn(a.b) != 0 ? a.d : b.d;
  if (sgn(a.b) != 0 && sgn(b.b) != 0 && a.d != b.d)
    throw std::invalid_argument("interval endpoints need a common radicand");
  a.d = b.d = d;
  if (surd_sign(b.a - a.a, b.b - a.b, d) < 0) throw std::invalid_argument("empty interval");
  ZPoly sf = zp_squarefree_part(f);
  if (zp_is_zero(sf)) throw std::domain_error("root count of the zero polynomial");
  if (zp_deg(sf) < 1) return 0;
  auto ch = sturm_chain(sf);
  int n = chain_variations_at(ch, a) - chain_variations_at(ch, b);
  if (surd_is_root(sf, a)) ++n;
  return n;
}

std::string zp_format(const ZPoly& f, const std::string& var) {
  if (zp_is_zero(f)) return "0";
  std::string s;
  for (size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    Int c = f[k];
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    Int ac = abs(c);
    if (ac != 1 || k == 0) s += ac.get_str();
    if (k >= 1) {
      s += var;
      if (k >= 2) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace cubiczeta
