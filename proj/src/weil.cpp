#include "cubiczeta/weil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "cubiczeta/intmath.hpp"

namespace cubiczeta {

namespace {

// c_0 = 1, c_r = -(p_r + sum_{i=1}^{r-1} c_i p_{r-i}) / r; the division must
// be exact for power sums of an integer polynomial.
ZPoly newton_invert(const std::vector<Int>& p, int m) {
  ZPoly c(m + 1);
  c[0] = 1;
  for (int r = 1; r <= m; ++r) {
    Int acc = p[r - 1];
    for (int i = 1; i < r; ++i) acc += c[i] * p[r - i - 1];
    if (acc % r != 0) throw std::domain_error("inconsistent power sums");
    c[r] = -(acc / r);
  }
  return c;
}

// p_r for the reciprocal roots of 1 + c_1 T + ... + c_d T^d (c trimmed).
std::vector<Int> newton_extend(const ZPoly& c, int up_to) {
  int d = static_cast<int>(c.size()) - 1;
  std::vector<Int> p(up_to);
  for (int r = 1; r <= up_to; ++r) {
    Int acc = 0;
    for (int i = 1; i < r && i <= d; ++i) acc += c[i] * p[r - i - 1];
    if (r <= d) acc += Int(r) * c[r];
    p[r - 1] = -acc;
  }
  return p;
}

ZPoly trimmed_unit_constant(const ZPoly& coeffs, const char* who) {
  ZPoly c = coeffs;
  zp_trim(c);
  if (c.empty() || c[0] != 1)
    throw std::invalid_argument(std::string(who) + ": constant coefficient must be 1");
  return c;
}

// Exact functional equation test: c_d^2 == q^{wd} and
// q^{wk} c_d c_{d-k} == q^{wd} c_k for every k (no half integer powers).
bool reciprocity_exact(const ZPoly& c, const Int& q, int w) {
  int d = static_cast<int>(c.size()) - 1;
  Int S = int_pow(q, static_cast<unsigned long>(w) * d);
  if (c[d] * c[d] != S) return false;
  for (int k = 0; k <= d; ++k) {
    Int lhs = int_pow(q, static_cast<unsigned long>(w) * k) * c[d] * c[d - k];
    if (lhs != S * c[k]) return false;
  }
  return true;
}

template <unsigned D>
using MReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<D>,
                                            boost::multiprecision::et_off>;

// Worst | |z| - 1 | over the roots of all squarefree parts, after the change
// of variable T = q^{-w/2} z that moves the roots onto the unit circle.
// Durand-Kerner with deterministic starting points; squarefree input keeps
// the roots simple, so convergence is quadratic.
template <unsigned D>
double moduli_worst_deviation(const ZPoly& coeffs, const Int& q, int weight) {
  using R = MReal<D>;
  using C = boost::multiprecision::cpp_complex<D>;
  R qr(q.get_str());
  R target = pow(qr, -R(weight) / 2);
  R worst(0);
  for (const auto& [u, mult] : squarefree_decomposition(coeffs)) {
    (void)mult;
    int d = zp_deg(u);
    std::vector<C> a(d + 1);
    R tp(1);
    for (int k = 0; k <= d; ++k) {
      a[k] = C(R(u[k].get_str()) * tp, R(0));
      tp *= target;
    }
    C lead = a[d];
    for (auto& ak : a) ak /= lead;
    std::vector<C> z(d);
    {
      C g(R(4) / 10, R(9) / 10), acc(R(1), R(0));
      for (int j = 0; j < d; ++j) {
        acc *= g;
        z[j] = acc;
      }
    }
    R conv = pow(R(10), 10 - static_cast<int>(D));
    for (int it = 0; it < 1000; ++it) {
      R step_max(0);
      for (int j = 0; j < d; ++j) {
        C fv = a[d];
        for (int k = d; k-- > 0;) fv = fv * z[j] + a[k];
        C den(R(1), R(0));
        for (int k = 0; k < d; ++k)
          if (k != j) den *= z[j] - z[k];
        if (abs(den) == 0) {
          z[j] += C(R(1) / 1000, R(1) / 977);
          continue;
        }
        C step = fv / den;
        z[j] -= step;
        R scale = abs(z[j]);
        if (scale < 1) scale = 1;
        R rel = abs(step) / scale;
        if (rel > step_max) step_max = rel;
      }
      if (step_max < conv) break;
    }
    for (const auto& zj : z) {
      R dev = abs(abs(zj) - 1);
      if (dev > worst) worst = dev;
    }
  }
  return worst.template convert_to<double>();
}

bool irreducible_over_Z(const ZPoly& monic) {
  ZFactorization fac = factor_over_Z(monic);
  return fac.factors.size() == 1 && fac.factors[0].mult == 1;
}

// All reciprocal roots of the scaled squared Frobenius are roots of unity
// exactly when the monic reversal splits into cyclotomic factors.
bool supersingular_by_roots_of_unity(const ZPoly& c, const Int& q) {
  WeilPolynomial P;
  P.coeffs = c;
  P.weight = 1;
  P.q = q;
  WeilPolynomial F2 = frobenius_power_charpoly(P, 2);
  int d = static_cast<int>(F2.coeffs.size()) - 1;
  ZPoly h(d + 1);
  Int qp(1);
  for (int k = 0; k <= d; ++k) {
    if (F2.coeffs[k] % qp != 0) return false;  // w^2/q not an algebraic integer
    h[k] = F2.coeffs[k] / qp;
    qp *= q;
  }
  zp_trim(h);
  if (zp_deg(h) != d) return false;
  ZPoly R = zp_reverse(h);
  for (const auto& g : factor_over_Z(R).factors) {
    int dg = zp_deg(g.poly);
    bool matched = false;
    for (int m = 1; m <= 250 && !matched; ++m) {
      ZPoly cm = cyclotomic(m);
      if (zp_deg(cm) == dg && zp_eq(cm, g.poly)) matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

PowerSums PowerSums::checked(std::vector<Int> values, const Int& q, int b) {
  if (q < 2) throw std::invalid_argument("PowerSums: q must be at least 2");
  if (b < 0) throw std::invalid_argument("PowerSums: negative root count");
  Int b2 = Int(b) * b;
  for (size_t r = 0; r < values.size(); ++r) {
    if (values[r] * values[r] > b2 * int_pow(q, r + 1))
      throw std::domain_error("power sum exceeds the Weil bound");
  }
  PowerSums M;
  M.values = std::move(values);
  M.q = q;
  M.b = b;
  return M;
}

ZPoly powersums_to_poly(const PowerSums& M, int m, SignConvention sc) {
  if (m < 0 || m > static_cast<int>(M.values.size()))
    throw std::invalid_argument("powersums_to_poly: need M_1..M_m");
  std::vector<Int> p(m);
  for (int r = 0; r < m; ++r)
    p[r] = sc == SignConvention::threefold ? Int(-M.values[r]) : M.values[r];
  return newton_invert(p, m);
}

WeilPolynomial complete_functional_equation(const ZPoly& head, const Int& q, int weight) {
  if (head.empty() || head[0] != 1)
    throw std::invalid_argument("complete_functional_equation: head must have constant 1");
  if (q < 2) throw std::invalid_argument("complete_functional_equation: q must be at least 2");
  if (weight < 1) throw std::invalid_argument("complete_functional_equation: weight must be positive");
  int m = static_cast<int>(head.size()) - 1;
  ZPoly c(2 * m + 1);
  for (int k = 0; k <= m; ++k) c[k] = head[k];
  for (int j = 1; j <= m; ++j)
    c[m + j] = int_pow(q, static_cast<unsigned long>(weight) * j) * head[m - j];
  WeilPolynomial P;
  P.coeffs = std::move(c);
  P.weight = weight;
  P.q = q;
  return P;
}

WeilVerdict verify_weil(const WeilPolynomial& P, int precision_bits) {
  if (precision_bits < 1) throw std::invalid_argument("verify_weil: precision must be positive");
  if (P.q < 2) throw std::invalid_argument("verify_weil: q must be at least 2");
  if (P.weight < 0) throw std::invalid_argument("verify_weil: negative weight");
  ZPoly c = trimmed_unit_constant(P.coeffs, "verify_weil");
  WeilVerdict v;
  v.reciprocity_ok = reciprocity_exact(c, P.q, P.weight);
  if (zp_deg(c) == 0) {
    v.moduli_ok = true;
    return v;
  }
  int digits = static_cast<int>(std::ceil(precision_bits * 0.30102999566398119521));
  if (digits <= 40)
    v.worst_rel_deviation = moduli_worst_deviation<40>(c, P.q, P.weight);
  else if (digits <= 78)
    v.worst_rel_deviation = moduli_worst_deviation<78>(c, P.q, P.weight);
  else
    v.worst_rel_deviation = moduli_worst_deviation<130>(c, P.q, P.weight);
  v.moduli_ok = v.worst_rel_deviation <= 1e-9;
  return v;
}

std::vector<Int> extend_power_sums(const WeilPolynomial& P, int up_to) {
  if (up_to < 0) throw std::invalid_argument("extend_power_sums: negative range");
  ZPoly c = trimmed_unit_constant(P.coeffs, "extend_power_sums");
  return newton_extend(c, up_to);
}

WeilPolynomial frobenius_power_charpoly(const WeilPolynomial& P, int d) {
  if (d < 1) throw std::invalid_argument("frobenius_power_charpoly: power must be positive");
  ZPoly c = trimmed_unit_constant(P.coeffs, "frobenius_power_charpoly");
  int deg = zp_deg(c);
  WeilPolynomial out;
  out.weight = P.weight;
  out.q = int_pow(P.q, d);
  if (d == 1) {
    out.coeffs = std::move(c);
    out.q = P.q;
    return out;
  }
  std::vector<Int> p = newton_extend(c, deg * d);
  std::vector<Int> pd(deg);
  for (int r = 1; r <= deg; ++r) pd[r - 1] = p[static_cast<size_t>(r) * d - 1];
  out.coeffs = newton_invert(pd, deg);
  return out;
}

WeilPolynomial pair_product_poly(const WeilPolynomial& P1) {
  ZPoly c = trimmed_unit_constant(P1.coeffs, "pair_product_poly");
  if (zp_deg(c) != 10)
    throw std::invalid_argument("pair_product_poly: need a degree 10 polynomial");
  if (P1.weight != 1) throw std::invalid_argument("pair_product_poly: need weight 1");
  std::vector<Int> p = newton_extend(c, 90);
  std::vector<Int> s(45);
  for (int r = 1; r <= 45; ++r) {
    Int t = p[r - 1] * p[r - 1] - p[2 * r - 1];
    if (t % 2 != 0) throw std::domain_error("inconsistent power sums");
    s[r - 1] = t / 2;
  }
  WeilPolynomial out;
  out.coeffs = newton_invert(s, 45);
  out.weight = 2;
  out.q = P1.q;
  return out;
}

PicardData picard_number(const WeilPolynomial& P1) {
  ZPoly c = trimmed_unit_constant(P1.coeffs, "picard_number");
  if (zp_deg(c) != 10)
    throw std::invalid_argument("picard_number: need a degree 10 polynomial");
  if (P1.weight != 1) throw std::invalid_argument("picard_number: need weight 1");
  if (P1.q < 2) throw std::invalid_argument("picard_number: q must be at least 2");
  const Int& q = P1.q;
  Int s = isqrt(q);
  bool square = s * s == q;
  PicardData out;
  Int pair_sq = 0;
  int pair_total = 0;
  for (const auto& g : factor_over_Z(zp_reverse(c)).factors) {
    int dg = zp_deg(g.poly);
    if (dg == 1) {
      Int root = -g.poly[0];
      if (square && root == s)
        out.mu_plus += g.mult;
      else if (square && root == -s)
        out.mu_minus += g.mult;
      else
        throw std::domain_error("picard_number: rational reciprocal root away from +-sqrt(q)");
      continue;
    }
    if (!square && dg == 2 && g.poly[1] == 0 && g.poly[0] == -q) {
      out.mu_plus += g.mult;
      out.mu_minus += g.mult;
      continue;
    }
    if (dg % 2)
      throw std::domain_error("picard_number: odd degree factor without reciprocal root +-sqrt(q)");
    for (int i = 0; i < dg / 2; ++i) {
      out.pair_mults.push_back(g.mult);
      pair_sq += Int(g.mult) * g.mult;
      pair_total += g.mult;
    }
  }
  if (out.mu_plus % 2 || out.mu_minus % 2)
    throw std::domain_error("picard_number: odd multiplicity at a real reciprocal root");
  if (out.mu_plus / 2 + out.mu_minus / 2 + pair_total != 5)
    throw std::logic_error("picard_number: reciprocal root bookkeeping mismatch");
  Int rho = Int(out.mu_plus) * (out.mu_plus - 1) / 2 + Int(out.mu_minus) * (out.mu_minus - 1) / 2 + pair_sq;
  out.rho = static_cast<int>(rho.get_si());
  return out;
}

ArtinTateValue artin_tate(const WeilPolynomial& P1) {
  PicardData pd = picard_number(P1);
  WeilPolynomial P2 = pair_product_poly(P1);
  ZPoly rest = P2.coeffs;
  ZPoly lin{Int(1), -P1.q};
  int mult = 0;
  while (zp_divides(lin, rest)) {
    rest = zp_divexact(rest, lin);
    ++mult;
  }
  if (mult != pd.rho)
    throw std::domain_error("artin_tate: (1 - qT) multiplicity disagrees with the Picard number");
  ArtinTateValue out;
  out.Dq = zp_eval(rest, Rat(1) / Rat(P1.q));
  out.q10_Dq = Rat(int_pow(P1.q, 10)) * out.Dq;
  out.rho = pd.rho;
  return out;
}

AbelianClassification classify_abelian(const WeilPolynomial& P1) {
  ZPoly c = trimmed_unit_constant(P1.coeffs, "classify_abelian");
  int d = zp_deg(c);
  if (d < 2 || d % 2)
    throw std::invalid_argument("classify_abelian: need even degree at least 2");
  if (P1.weight != 1) throw std::invalid_argument("classify_abelian: need weight 1");
  auto [p, s] = prime_power_split(P1.q);
  int n = d / 2;
  AbelianClassification out;
  out.ordinary = gcd(c[n], p) == 1;
  bool ss_v = true;
  for (int j = 1; j <= n && ss_v; ++j) {
    unsigned long e = (static_cast<unsigned long>(s) * j + 1) / 2;  // ceil(s j / 2)
    if (c[j] % int_pow(p, e) != 0) ss_v = false;
  }
  bool ss_iv = supersingular_by_roots_of_unity(c, P1.q);
  if (ss_v != ss_iv) throw std::logic_error("classify_abelian: supersingular criteria disagree");
  out.supersingular = ss_v;
  out.simple = irreducible_over_Z(zp_reverse(c));
  if (d == 10) {
    WeilPolynomial Pt;
    Pt.coeffs = c;
    Pt.weight = 1;
    Pt.q = P1.q;
    out.picard = picard_number(Pt);
    out.absolutely_simple = absolute_simplicity(Pt);
  }
  return out;
}

Tri absolute_simplicity(const WeilPolynomial& P1) {
  ZPoly c = trimmed_unit_constant(P1.coeffs, "absolute_simplicity");
  if (zp_deg(c) != 10)
    throw std::invalid_argument("absolute_simplicity: need a degree 10 polynomial");
  if (P1.weight != 1) throw std::invalid_argument("absolute_simplicity: need weight 1");
  ZPoly Q1 = zp_reverse(c);
  if (!irreducible_over_Z(Q1)) return Tri::no;
  for (int e : {2, 5, 10}) {
    bool in_subring = true;
    for (int k = 0; k <= 10 && in_subring; ++k)
      if (k % e != 0 && Q1[k] != 0) in_subring = false;
    if (in_subring) return Tri::no;  // the Frobenius power generates a proper subfield
  }
  WeilPolynomial Pt;
  Pt.coeffs = c;
  Pt.weight = 1;
  Pt.q = P1.q;
  for (int e : {2, 3, 4, 6, 11, 22}) {
    WeilPolynomial F = frobenius_power_charpoly(Pt, e);
    if (!irreducible_over_Z(zp_reverse(F.coeffs))) return Tri::unknown;
  }
  return Tri::yes;
}

std::pair<Int, int> prime_power_split(const Int& q) {
  if (q < 2) throw std::domain_error("prime_power_split: q must be at least 2");
  if (!q.fits_ulong_p()) throw std::domain_error("prime_power_split: q out of range");
  uint64_t p = 0;
  unsigned r = 0;
  if (!prime_power_decompose(q.get_ui(), p, r))
    throw std::domain_error("prime_power_split: q is not a prime power");
  return {Int(static_cast<unsigned long>(p)), static_cast<int>(r)};
}

}  // namespace cubiczeta
