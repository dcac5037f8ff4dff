#include "cubiczeta/gf.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "cubiczeta/rng.hpp"
#include "gf_internal.hpp"

namespace cubiczeta::gf {

using detail::FieldImpl;
using detail::Mode;

// ---------------------------------------------------------------------------
// Bootstrap arithmetic for polynomials over F_p (vectors of residues), used
// for the modulus scan before any field context exists.
// ---------------------------------------------------------------------------
namespace {

using PV = std::vector<uint64_t>;  // lowest-first, entries in [0, p)

void pv_trim(PV& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PV pv_mulmod(const PV& a, const PV& b, const PV& m, uint64_t p) {
  // m monic
  if (a.empty() || b.empty()) return {};
  PV acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + a[i] * b[j]) % p;
  }
  size_t dm = m.size() - 1;
  for (size_t d = acc.size(); d-- > dm;) {
    uint64_t lead = acc[d] % p;
    if (lead) {
      uint64_t ml = p - lead;
      for (size_t j = 0; j < dm; ++j) acc[d - dm + j] = (acc[d - dm + j] + ml * m[j]) % p;
    }
    acc[d] = 0;
  }
  acc.resize(dm);
  pv_trim(acc);
  return acc;
}

PV pv_powmod(const PV& base, uint64_t e, const PV& m, uint64_t p) {
  PV r{1}, b = base;
  while (e) {
    if (e & 1) r = pv_mulmod(r, b, m, p);
    b = pv_mulmod(b, b, m, p);
    e >>= 1;
  }
  return r;
}

PV pv_gcd(PV a, PV b, uint64_t p) {
  pv_trim(a);
  pv_trim(b);
  auto make_monic = [&](PV& f) {
    if (f.empty()) return;
    uint64_t lc = f.back();
    if (lc == 1) return;
    // inverse mod p by Fermat
    uint64_t inv = 1, x = lc, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * x % p;
      x = x * x % p;
      e >>= 1;
    }
    for (auto& c : f) c = c * inv % p;
  };
  while (!b.empty()) {
    make_monic(b);
    // a mod b
    if (a.size() >= b.size()) {
      size_t db = b.size() - 1;
      for (size_t d = a.size(); d-- > db;) {
        uint64_t lead = a[d] % p;
        if (lead) {
          uint64_t ml = p - lead;
          for (size_t j = 0; j < db; ++j) a[d - db + j] = (a[d - db + j] + ml * b[j]) % p;
        }
        a[d] = 0;
      }
      pv_trim(a);
    }
    std::swap(a, b);
  }
  pv_trim(a);
  return a;
}

bool pv_is_irreducible(const PV& f, uint64_t p) {
  // f monic of degree r >= 1 over F_p; Rabin's test
  size_t r = f.size() - 1;
  if (r == 1) return true;
  std::vector<unsigned> prime_divs;
  {
    unsigned n = unsigned(r);
    for (unsigned d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime_divs.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) prime_divs.push_back(n);
  }
  PV h{0, 1};  // x
  std::vector<PV> at_div(prime_divs.size());
  for (size_t k = 1; k <= r; ++k) {
    h = pv_powmod(h, p, f, p);  // h = x^{p^k} mod f
    for (size_t i = 0; i < prime_divs.size(); ++i)
      if (k == r / prime_divs[i]) at_div[i] = h;
  }
  // x^{p^r} == x mod f
  PV x{0, 1};
  if (h != x) return false;
  for (auto& hd : at_div) {
    PV diff = hd;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    pv_trim(diff);
    PV g = pv_gcd(diff, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<uint64_t> prime_factors_u64(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field construction
// ---------------------------------------------------------------------------

static std::shared_ptr<const FieldImpl> build_field(uint64_t p, unsigned r) {
  if (!is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime");
  if (p >= (1u << 16)) throw std::invalid_argument("characteristic cap is 2^16");
  if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (r > unsigned(kMaxExtDeg)) throw std::invalid_argument("extension degree cap is 16");

  auto im = std::make_shared<FieldImpl>();
  im->p = p;
  im->r = r;
  im->q = int_pow(p, r);
  im->fits64 = mpz_sizeinbase(im->q.get_mpz_t(), 2) <= 63;
  if (im->fits64) im->q64 = mpz_get_ui(im->q.get_mpz_t());

  if (r == 1) {
    im->modulus = {0, 1};  // degree-1 convention: modulus = t
    im->mode = Mode::Prime;
    return im;
  }

  // lexicographically least monic irreducible, constant coefficient compared
  // first: odometer with the top coefficient moving fastest
  std::vector<uint64_t> m(r, 0);
  PV f(r + 1, 0);
  f[r] = 1;
  for (;;) {
    for (unsigned i = 0; i < r; ++i) f[i] = m[i];
    if (pv_is_irreducible(f, p)) break;
    int i = int(r) - 1;
    while (i >= 0 && m[i] == p - 1) m[i--] = 0;
    if (i < 0) throw std::logic_error("no irreducible polynomial found");
    ++m[i];
  }
  im->modulus.resize(r + 1);
  for (unsigned i = 0; i < r; ++i) im->modulus[i] = uint16_t(m[i]);
  im->modulus[r] = 1;

  if (im->fits64 && im->q64 <= 65536) {
    im->mode = Mode::Table;
    im->qu = uint32_t(im->q64);
    uint32_t q = im->qu;
    // generator: least element (by code) of maximal multiplicative order
    auto divs = prime_factors_u64(q - 1);
    Elem g{};
    for (uint32_t cand = 2;; ++cand) {
      Elem e = im->elem_of(cand);
      bool ok = true;
      for (uint64_t ell : divs) {
        uint64_t ex = (q - 1) / ell;
        Elem t{};
        t.c[0] = 1;
        Elem b = e;
        uint64_t ee = ex;
        while (ee) {
          if (ee & 1) {
            Elem t2;
            im->big_mul(t, b, t2);
            t = t2;
          }
          Elem b2;
          im->big_mul(b, b, b2);
          b = b2;
          ee >>= 1;
        }
        Elem one{};
        one.c[0] = 1;
        if (t == one) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = e;
        break;
      }
      if (cand > q) throw std::logic_error("no generator found");
    }
    im->expt.assign(2 * (q - 1), 0);
    im->logt.assign(q, 0);
    Elem cur{};
    cur.c[0] = 1;
    for (uint32_t i = 0; i < q - 1; ++i) {
      uint32_t code = im->code_of(cur);
      im->expt[i] = uint16_t(code);
      im->expt[i + (q - 1)] = uint16_t(code);
      im->logt[code] = uint16_t(i);
      Elem nx;
      im->big_mul(cur, g, nx);
      cur = nx;
    }
    im->xor_add = (p == 2);
    if (!im->xor_add) {
      im->negt.assign(q, 0);
      for (uint32_t c = 0; c < q; ++c) {
        Elem e = im->elem_of(c);
        Elem n{};
        for (unsigned i = 0; i < r; ++i) n.c[i] = uint16_t(e.c[i] ? p - e.c[i] : 0);
        im->negt[c] = uint16_t(im->code_of(n));
      }
      if (q <= FieldImpl::kFullAddMax) {
        im->addt.assign(size_t(q) * q, 0);
        for (uint32_t a = 0; a < q; ++a) {
          Elem ea = im->elem_of(a);
          for (uint32_t b = 0; b < q; ++b) {
            Elem eb = im->elem_of(b);
            Elem s{};
            for (unsigned i = 0; i < r; ++i) {
              uint32_t v = uint32_t(ea.c[i]) + eb.c[i];
              s.c[i] = uint16_t(v >= p ? v - p : v);
            }
            im->addt[size_t(a) * q + b] = uint16_t(im->code_of(s));
          }
        }
      } else {
        unsigned k = (r + 1) / 2;
        im->slo = 1;
        for (unsigned i = 0; i < k; ++i) im->slo *= uint32_t(p);
        im->shi = q / im->slo;
        auto build = [&](uint32_t s, std::vector<uint16_t>& tab) {
          tab.assign(size_t(s) * s, 0);
          for (uint32_t a = 0; a < s; ++a)
            for (uint32_t b = 0; b < s; ++b) {
              uint32_t av = a, bv = b, mul = 1, sum = 0;
              while (av || bv) {
                uint32_t d = av % p + bv % p;
                if (d >= p) d -= p;
                sum += d * mul;
                mul *= uint32_t(p);
                av /= uint32_t(p);
                bv /= uint32_t(p);
              }
              tab[size_t(a) * s + b] = uint16_t(sum);
            }
        };
        build(im->slo, im->addlo);
        build(im->shi, im->addhi);
      }
    }
  } else {
    im->mode = Mode::Big;
  }
  return im;
}

Field Field::create(uint64_t p, unsigned r) {
  static std::mutex mu;
  static std::map<std::pair<uint64_t, unsigned>, std::shared_ptr<const FieldImpl>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({p, r});
    if (it != cache.end()) {
      Field f;
      f.impl_ = it->second;
      return f;
    }
  }
  auto im = build_field(p, r);
  std::lock_guard<std::mutex> lk(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(p, r), im);
  Field f;
  f.impl_ = it->second;
  return f;
}

uint64_t Field::p() const { return impl_->p; }
unsigned Field::degree() const { return impl_->r; }
const Int& Field::q() const { return impl_->q; }
bool Field::q_fits_u64() const { return impl_->fits64; }
uint64_t Field::q64() const {
  if (!impl_->fits64) throw std::overflow_error("q exceeds 64 bits");
  return impl_->q64;
}
const std::vector<uint16_t>& Field::modulus() const { return impl_->modulus; }
bool Field::same(const Field& o) const {
  return impl_ && o.impl_ && impl_->p == o.impl_->p && impl_->r == o.impl_->r;
}

Elem Field::one() const {
  Elem e{};
  e.c[0] = 1;
  return e;
}

Elem Field::from_int(long v) const {
  long m = long(impl_->p);
  long x = v % m;
  if (x < 0) x += m;
  Elem e{};
  e.c[0] = uint16_t(x);
  return e;
}

Elem Field::from_coeffs(const std::vector<long>& c) const {
  if (c.size() > impl_->r) throw std::invalid_argument("too many coefficients");
  Elem e{};
  long m = long(impl_->p);
  for (size_t i = 0; i < c.size(); ++i) {
    long x = c[i] % m;
    if (x < 0) x += m;
    e.c[i] = uint16_t(x);
  }
  return e;
}

Elem Field::from_index(uint64_t idx) const { return impl_->elem_of(idx); }

uint64_t Field::to_index(const Elem& a) const {
  uint64_t v = 0;
  for (int i = int(impl_->r) - 1; i >= 0; --i) v = v * impl_->p + a.c[i];
  return v;
}

bool Field::is_zero(const Elem& a) const {
  for (unsigned i = 0; i < impl_->r; ++i)
    if (a.c[i]) return false;
  return true;
}

Elem Field::add(const Elem& a, const Elem& b) const {
  Elem o{};
  uint64_t p = impl_->p;
  for (unsigned i = 0; i < impl_->r; ++i) {
    uint32_t s = uint32_t(a.c[i]) + b.c[i];
    o.c[i] = uint16_t(s >= p ? s - p : s);
  }
  return o;
}

Elem Field::neg(const Elem& a) const {
  Elem o{};
  uint64_t p = impl_->p;
  for (unsigned i = 0; i < impl_->r; ++i) o.c[i] = uint16_t(a.c[i] ? p - a.c[i] : 0);
  return o;
}

Elem Field::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Field::mul(const Elem& a, const Elem& b) const {
  Elem o;
  impl_->big_mul(a, b, o);
  return o;
}

Elem Field::pow(const Elem& a, const Int& e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  Elem y = one();
  if (e == 0) return y;
  Elem x = a;
  for (size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) y = mul(y, x);
    x = mul(x, x);
  }
  return y;
}

Elem Field::pow_u(const Elem& a, uint64_t e) const { return pow(a, Int(static_cast<unsigned long>(e))); }

Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw std::invalid_argument("inverse of zero");
  return pow(a, impl_->q - 2);
}

bool Field::is_square(const Elem& a) const {
  if (is_zero(a)) throw std::invalid_argument("is_square on zero");
  if (impl_->p == 2) return true;  // odd-order unit group
  Elem t = pow(a, (impl_->q - 1) / 2);
  if (t == one()) return true;
  if (t == neg(one())) return false;
  throw std::logic_error("Euler criterion returned a non-unit");
}

std::string Field::format(const Elem& a) const {
  if (impl_->r == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < impl_->r; ++i) {
    if (i) os << ',';
    os << a.c[i];
  }
  os << ']';
  return os.str();
}

Elem Field::parse(const std::string& s) const {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty element literal");
  if (t[0] == '[') {
    if (t.back() != ']') throw std::invalid_argument("unterminated coefficient vector");
    std::vector<long> cs;
    std::string body = t.substr(1, t.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("bad coefficient vector");
      cs.push_back(std::stol(tok));
    }
    return from_coeffs(cs);
  }
  return from_int(std::stol(t));
}

Field field_from_spec(const std::string& spec) {
  auto caret = spec.find('^');
  uint64_t p;
  unsigned r = 1;
  if (caret == std::string::npos) {
    p = std::stoull(spec);
  } else {
    p = std::stoull(spec.substr(0, caret));
    r = unsigned(std::stoul(spec.substr(caret + 1)));
  }
  return Field::create(p, r);
}

bool cube_map_is_bijective(const Field& F) { return F.q() % 3 != 1; }

// ---------------------------------------------------------------------------
// Generic univariate polynomial arithmetic
// ---------------------------------------------------------------------------

int fp_deg(const FPoly& f) { return int(f.size()) - 1; }

FPoly fp_trim(FPoly f) {
  while (!f.empty() && f.back() == Elem{}) f.pop_back();
  return f;
}

bool fp_is_zero(const FPoly& f) { return fp_trim(f).empty(); }

Elem fp_eval(const Field& F, const FPoly& f, const Elem& x) {
  Elem acc = F.zero();
  for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

FPoly fp_add(const Field& F, const FPoly& a, const FPoly& b) {
  FPoly o(std::max(a.size(), b.size()), F.zero());
  for (size_t i = 0; i < o.size(); ++i) {
    Elem x = i < a.size() ? a[i] : F.zero();
    Elem y = i < b.size() ? b[i] : F.zero();
    o[i] = F.add(x, y);
  }
  return fp_trim(o);
}

FPoly fp_sub(const Field& F, const FPoly& a, const FPoly& b) {
  FPoly o(std::max(a.size(), b.size()), F.zero());
  for (size_t i = 0; i < o.size(); ++i) {
    Elem x = i < a.size() ? a[i] : F.zero();
    Elem y = i < b.size() ? b[i] : F.zero();
    o[i] = F.sub(x, y);
  }
  return fp_trim(o);
}

FPoly fp_mul(const Field& F, const FPoly& a, const FPoly& b) {
  if (a.empty() || b.empty()) return {};
  FPoly o(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) o[i + j] = F.add(o[i + j], F.mul(a[i], b[j]));
  }
  return fp_trim(o);
}

FPoly fp_scale(const Field& F, const FPoly& a, const Elem& s) {
  FPoly o = a;
  for (auto& c : o) c = F.mul(c, s);
  return fp_trim(o);
}

void fp_divrem(const Field& F, const FPoly& f, const FPoly& g, FPoly& quot, FPoly& rem) {
  FPoly gg = fp_trim(g);
  if (gg.empty()) throw std::invalid_argument("division by zero polynomial");
  rem = fp_trim(f);
  quot.clear();
  int dg = fp_deg(gg);
  if (fp_deg(rem) < dg) return;
  quot.assign(rem.size() - gg.size() + 1, F.zero());
  Elem ilc = F.inv(gg.back());
  for (int d = fp_deg(rem); d >= dg; --d) {
    if (F.is_zero(rem[d])) continue;
    Elem c = F.mul(rem[d], ilc);
    quot[d - dg] = c;
    for (int j = 0; j <= dg; ++j) rem[d - dg + j] = F.sub(rem[d - dg + j], F.mul(c, gg[j]));
  }
  rem = fp_trim(rem);
  quot = fp_trim(quot);
}

FPoly fp_mod(const Field& F, const FPoly& f, const FPoly& g) {
  FPoly q, r;
  fp_divrem(F, f, g, q, r);
  return r;
}

FPoly fp_make_monic(const Field& F, const FPoly& f) {
  FPoly t = fp_trim(f);
  if (t.empty()) return t;
  return fp_scale(F, t, F.inv(t.back()));
}

FPoly fp_gcd(const Field& F, FPoly a, FPoly b) {
  a = fp_trim(a);
  b = fp_trim(b);
  while (!b.empty()) {
    FPoly r = fp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_make_monic(F, a);
}

FPoly fp_derivative(const Field& F, const FPoly& f) {
  if (f.size() <= 1) return {};
  FPoly o(f.size() - 1, F.zero());
  for (size_t i = 1; i < f.size(); ++i) {
    Elem k = F.from_int(long(i % F.p()));
    o[i - 1] = F.mul(f[i], k);
  }
  return fp_trim(o);
}

FPoly fp_pow_mod(const Field& F, const FPoly& base, const Int& e, const FPoly& mod) {
  FPoly r{F.one()}, b = fp_mod(F, base, mod);
  size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(F, fp_mul(F, r, b), mod);
    b = fp_mod(F, fp_mul(F, b, b), mod);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Root-finding and factorization
// ---------------------------------------------------------------------------

namespace {

// splits a monic squarefree product of linear factors into its roots
void split_linear(const Field& F, const FPoly& g, SplitMix64& rng, std::vector<Elem>& out) {
  if (fp_deg(g) <= 0) return;
  if (fp_deg(g) == 1) {
    out.push_back(F.neg(g[0]));
    return;
  }
  for (;;) {
    FPoly w;
    if (F.p() != 2) {
      Elem alpha = F.q_fits_u64() ? F.from_index(rng.below(F.q64()))
                                  : F.from_index(rng.next() & 0x7fffffffffffffffULL);
      FPoly base{alpha, F.one()};
      w = fp_pow_mod(F, base, (F.q() - 1) / 2, g);
      w = fp_sub(F, w, {F.one()});
    } else {
      // additive trace splitting in characteristic 2
      Elem c = F.q_fits_u64() ? F.from_index(1 + rng.below(F.q64() - 1)) : F.from_index(1 + (rng.next() & 0xffffffffULL));
      FPoly t = fp_mod(F, FPoly{F.zero(), c}, g);
      FPoly acc = t;
      unsigned m = F.degree();  // q = 2^m
      for (unsigned i = 1; i < m; ++i) {
        t = fp_mod(F, fp_mul(F, t, t), g);
        acc = fp_add(F, acc, t);
      }
      w = acc;
    }
    FPoly d = fp_gcd(F, w, g);
    if (fp_deg(d) > 0 && fp_deg(d) < fp_deg(g)) {
      FPoly q, r;
      fp_divrem(F, g, d, q, r);
      split_linear(F, d, rng, out);
      split_linear(F, q, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Elem> distinct_roots(const Field& F, const FPoly& f0, uint64_t seed) {
  FPoly f = fp_trim(f0);
  if (f.empty()) throw std::invalid_argument("zero polynomial has no well-defined root set");
  std::vector<Elem> out;
  if (fp_deg(f) == 0) return out;
  // strip zero roots
  size_t k = 0;
  while (k < f.size() && F.is_zero(f[k])) ++k;
  if (k > 0) {
    out.push_back(F.zero());
    f.erase(f.begin(), f.begin() + k);
  }
  if (fp_deg(f) >= 1) {
    f = fp_make_monic(F, f);
    if (fp_deg(f) == 1) {
      out.push_back(F.neg(f[0]));
    } else {
      FPoly xq = fp_pow_mod(F, FPoly{F.zero(), F.one()}, F.q(), f);
      FPoly s = fp_gcd(F, fp_sub(F, xq, FPoly{F.zero(), F.one()}), f);
      SplitMix64 rng(seed ^ 0x9fb21c651e98df25ULL);
      split_linear(F, s, rng, out);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<RootMult> poly_roots(const Field& F, const FPoly& f0, uint64_t seed) {
  FPoly f = fp_trim(f0);
  if (f.empty()) throw std::invalid_argument("zero polynomial has no well-defined root set");
  std::vector<RootMult> out;
  for (const Elem& a : distinct_roots(F, f, seed)) {
    // multiplicity by repeated synthetic division
    int m = 0;
    FPoly cur = f;
    for (;;) {
      // divide by (x - a)
      FPoly lin{F.neg(a), F.one()};
      FPoly q, r;
      fp_divrem(F, cur, lin, q, r);
      if (!fp_is_zero(r)) break;
      ++m;
      cur = q;
      if (cur.empty()) break;
    }
    out.push_back({a, m});
  }
  return out;
}

std::vector<std::pair<FPoly, int>> factor_modp(const Field& F, const FPoly& f0, uint64_t seed) {
  if (F.degree() != 1) throw std::invalid_argument("factor_modp expects a prime field");
  FPoly f = fp_make_monic(F, f0);
  if (f.empty()) throw std::invalid_argument("zero polynomial");
  std::vector<std::pair<FPoly, int>> out;
  if (fp_deg(f) == 0) return out;
  uint64_t p = F.p();
  SplitMix64 rng(seed ^ 0xd6e8feb86659fd93ULL);

  // equal-degree splitting of a squarefree product of degree-d irreducibles
  std::function<void(const FPoly&, int, std::vector<FPoly>&)> edf =
      [&](const FPoly& g, int d, std::vector<FPoly>& acc) {
        if (fp_deg(g) <= 0) return;
        if (fp_deg(g) == d) {
          acc.push_back(g);
          return;
        }
        for (;;) {
          // random polynomial of degree < 2d
          FPoly v(2 * size_t(d), F.zero());
          for (auto& c : v) c = F.from_index(rng.below(p));
          v = fp_trim(v);
          if (fp_deg(v) < 1) continue;
          FPoly w;
          if (p != 2) {
            Int e = (int_pow(p, unsigned(d)) - 1) / 2;
            w = fp_sub(F, fp_pow_mod(F, v, e, g), {F.one()});
          } else {
            FPoly t = fp_mod(F, v, g), accp = t;
            for (int i = 1; i < d; ++i) {
              t = fp_mod(F, fp_mul(F, t, t), g);
              accp = fp_add(F, accp, t);
            }
            w = accp;
          }
          FPoly dd = fp_gcd(F, w, g);
          if (fp_deg(dd) > 0 && fp_deg(dd) < fp_deg(g)) {
            FPoly q, r;
            fp_divrem(F, g, dd, q, r);
            edf(dd, d, acc);
            edf(q, d, acc);
            return;
          }
        }
      };

  // distinct-degree factorization of a monic squarefree u
  auto ddf = [&](FPoly u, std::vector<FPoly>& acc) {
    FPoly h{F.zero(), F.one()};  // x
    int d = 0;
    while (fp_deg(u) > 0 && 2 * (d + 1) <= fp_deg(u)) {
      ++d;
      h = fp_pow_mod(F, h, Int(static_cast<unsigned long>(p)), u);
      FPoly g = fp_gcd(F, fp_sub(F, h, FPoly{F.zero(), F.one()}), u);
      if (fp_deg(g) > 0) {
        edf(g, d, acc);
        FPoly q, r;
        fp_divrem(F, u, g, q, r);
        u = q;
        h = fp_mod(F, h, u);
      }
    }
    if (fp_deg(u) > 0) acc.push_back(u);
  };

  std::function<void(FPoly, int)> run = [&](FPoly g, int multscale) {
    g = fp_make_monic(F, g);
    if (fp_deg(g) <= 0) return;
    FPoly gd = fp_derivative(F, g);
    if (fp_is_zero(gd)) {
      // g = h(x^p) = h(x)^p over F_p
      FPoly h((fp_deg(g) / p) + 1, F.zero());
      for (size_t i = 0; i < h.size(); ++i) h[i] = g[i * p];
      run(h, multscale * int(p));
      return;
    }
    FPoly s = fp_gcd(F, g, gd);
    FPoly u, r;
    fp_divrem(F, g, s, u, r);  // u: product of distinct irreducibles with mult not divisible by p
    std::vector<FPoly> irr;
    ddf(fp_make_monic(F, u), irr);
    FPoly rest = g;
    for (const FPoly& gi : irr) {
      int m = 0;
      for (;;) {
        FPoly q2, r2;
        fp_divrem(F, rest, gi, q2, r2);
        if (!fp_is_zero(r2)) break;
        rest = q2;
        ++m;
      }
      out.push_back({gi, m * multscale});
    }
    run(rest, multscale);
  };
  run(f, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    for (size_t i = 0; i < a.first.size(); ++i) {
      if (!(a.first[i] == b.first[i])) return lex_less(a.first[i], b.first[i]);
    }
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

Embedding::Embedding(const Field& src, const Field& dst) : src_(src), dst_(dst) {
  if (src.p() != dst.p() || dst.degree() % src.degree() != 0)
    throw std::invalid_argument("incompatible fields for embedding");
  unsigned r = src.degree();
  tpow_.assign(r, dst.zero());
  tpow_[0] = dst.one();
  if (r == 1) return;
  // image of t: lexicographically least root of the source modulus in dst
  FPoly mod;
  for (uint16_t c : src.modulus()) mod.push_back(dst.from_int(long(c)));
  auto roots = distinct_roots(dst, mod, 0);
  if (roots.empty()) throw std::logic_error("source modulus has no root in extension");
  Elem im = roots.front();
  for (unsigned i = 1; i < r; ++i) tpow_[i] = dst.mul(tpow_[i - 1], im);
}

Elem Embedding::operator()(const Elem& a) const {
  Elem acc = dst_.zero();
  for (unsigned i = 0; i < src_.degree(); ++i) {
    if (!a.c[i]) continue;
    acc = dst_.add(acc, dst_.mul(dst_.from_int(long(a.c[i])), tpow_[i]));
  }
  return acc;
}

Elem subfield_embed(const Elem& a, const Field& src, const Field& dst) {
  return Embedding(src, dst)(a);
}

}  // namespace cubiczeta::gf
