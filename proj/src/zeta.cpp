#include "cubiczeta/zeta.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cubiczeta {
namespace {

// c(T) -> c(sT), coefficient k scaled by s^k
ZPoly scale_arg(const ZPoly& c, const Int& s) {
  ZPoly out(c.size());
  Int pw = 1;
  for (size_t k = 0; k < c.size(); ++k) {
    out[k] = c[k] * pw;
    pw *= s;
  }
  return out;
}

WeilPolynomial unit_factor(const Int& q, int weight) {
  return WeilPolynomial{ZPoly{1}, weight, q};
}

// multiplicity of the reciprocal root s in c, by synthetic division
int reciprocal_root_multiplicity(ZPoly c, const Int& s) {
  int mult = 0;
  while (zp_deg(c) >= 1) {
    int d = zp_deg(c);
    ZPoly quo(d);
    quo[0] = c[0];
    for (int k = 1; k < d; ++k) quo[k] = c[k] + s * quo[k - 1];
    if (c[d] + s * quo[d - 1] != 0) break;  // nonzero remainder
    c = std::move(quo);
    ++mult;
  }
  return mult;
}

void require_prime_power(const Int& q, const char* who) {
  try {
    prime_power_split(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string(who) + ": q must be a prime power");
  }
}

}  // namespace

Int ZetaDescription::predict_points(int r) const {
  if (r < 1) throw std::invalid_argument("predict_points: r must be positive");
  Int total = 0;
  for (const auto& [P, e] : factors) {
    if (zp_deg(P.coeffs) == 0) continue;
    std::vector<Int> s = extend_power_sums(P, r);
    total -= Int(e) * s[static_cast<size_t>(r) - 1];
  }
  return total;
}

PowerSums m_values(const std::map<int, Int>& N, const Int& q, int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("m_values: dimension must be 3 or 4");
  if (q < 2) throw std::invalid_argument("m_values: q must be at least 2");
  if (N.empty()) throw std::invalid_argument("m_values: no point counts supplied");
  if (N.begin()->first < 1) throw std::invalid_argument("m_values: counts start at r = 1");
  int rmax = N.rbegin()->first;
  std::vector<Int> values;
  values.reserve(static_cast<size_t>(rmax));
  for (int r = 1; r <= rmax; ++r) {
    auto it = N.find(r);
    if (it == N.end())
      throw std::invalid_argument("m_values: counts must cover every r up to the largest");
    Int ambient = 0;
    for (int i = 0; i <= n; ++i)
      ambient += int_pow(q, static_cast<unsigned long>(i) * r);
    Int rest = it->second - ambient;
    Int qr = int_pow(q, static_cast<unsigned long>(r));
    if (!mpz_divisible_p(rest.get_mpz_t(), qr.get_mpz_t()))
      throw std::domain_error("m_values: N_r minus the ambient count is not divisible by q^r");
    values.push_back(rest / qr);
  }
  // n = 4: root modulus q, so the Weil bound baseline is q^2
  return PowerSums::checked(std::move(values), n == 3 ? q : Int(q * q), n == 3 ? 10 : 22);
}

ZetaDescription zeta_fano_threefold(const WeilPolynomial& P1) {
  if (zp_deg(P1.coeffs) != 10 || P1.weight != 1)
    throw std::invalid_argument("zeta_fano_threefold: P1 must have degree 10 and weight 1");
  if (!verify_weil(P1).pass())
    throw std::invalid_argument("zeta_fano_threefold: P1 fails the Weil conditions");
  const Int& q = P1.q;
  ZetaDescription z;
  z.dim = 2;
  WeilPolynomial P0{ZPoly{1, -1}, 0, q};
  WeilPolynomial P2 = pair_product_poly(P1);
  WeilPolynomial P3{scale_arg(P1.coeffs, q), 3, q};
  WeilPolynomial P4{ZPoly{1, Int(-q * q)}, 4, q};
  z.factors.emplace_back(std::move(P0), -1);
  z.factors.emplace_back(P1, +1);
  z.factors.emplace_back(std::move(P2), -1);
  z.factors.emplace_back(std::move(P3), +1);
  z.factors.emplace_back(std::move(P4), -1);
  z.picard = picard_number(P1);
  z.albanese = classify_abelian(P1);
  z.artin = artin_tate(P1);
  return z;
}

ZetaDescription zeta_fano_fourfold(const WeilPolynomial& P4_0) {
  if (zp_deg(P4_0.coeffs) != 22)
    throw std::invalid_argument("zeta_fano_fourfold: the primitive part must have degree 22");
  const Int& q = P4_0.q;
  WeilPolynomial A;  // reciprocal roots w_1..w_22 of modulus q
  if (P4_0.weight == 2) {
    A = P4_0;
  } else if (P4_0.weight == 4) {
    ZPoly c(P4_0.coeffs.size());
    Int pw = 1;
    for (size_t k = 0; k < c.size(); ++k) {
      if (!mpz_divisible_p(P4_0.coeffs[k].get_mpz_t(), pw.get_mpz_t()))
        throw std::domain_error(
            "zeta_fano_fourfold: quartic coefficients are not divisible by q as the weight demands");
      c[k] = P4_0.coeffs[k] / pw;
      pw *= q;
    }
    A = WeilPolynomial{std::move(c), 2, q};
  } else {
    throw std::invalid_argument("zeta_fano_fourfold: the primitive part must have weight 2 or 4");
  }
  if (!verify_weil(A).pass())
    throw std::invalid_argument("zeta_fano_fourfold: the primitive part fails the Weil conditions");

  ZetaDescription z;
  z.dim = 4;
  WeilPolynomial P2{zp_mul(A.coeffs, ZPoly{1, Int(-q)}), 2, q};  // w_23 = q appended

  // P_4 = prod_{j<=k} (1 - w_j w_k T), degree 276; its power sums are
  // (s_r^2 + s_{2r})/2 over the 23 sums s_r, always an even split.
  std::vector<Int> s = extend_power_sums(P2, 276);
  std::vector<Int> pair_sums(138);
  for (int r = 1; r <= 138; ++r)
    pair_sums[static_cast<size_t>(r) - 1] =
        (s[static_cast<size_t>(r) - 1] * s[static_cast<size_t>(r) - 1] +
         s[static_cast<size_t>(2 * r) - 1]) / 2;
  PowerSums pairs = PowerSums::checked(std::move(pair_sums), int_pow(q, 4), 276);
  ZPoly head = powersums_to_poly(pairs, 138, SignConvention::fourfold);
  WeilPolynomial P4 = complete_functional_equation(head, q, 4);

  WeilPolynomial P6{scale_arg(P2.coeffs, Int(q * q)), 6, q};
  z.tate_rank = reciprocal_root_multiplicity(P2.coeffs, q);
  z.tate_rank_conjectural = true;

  z.factors.emplace_back(WeilPolynomial{ZPoly{1, -1}, 0, q}, -1);
  z.factors.emplace_back(unit_factor(q, 1), +1);
  z.factors.emplace_back(std::move(P2), -1);
  z.factors.emplace_back(unit_factor(q, 3), +1);
  z.factors.emplace_back(std::move(P4), -1);
  z.factors.emplace_back(unit_factor(q, 5), +1);
  z.factors.emplace_back(std::move(P6), -1);
  z.factors.emplace_back(unit_factor(q, 7), +1);
  z.factors.emplace_back(WeilPolynomial{ZPoly{1, Int(-int_pow(q, 4))}, 8, q}, -1);
  return z;
}

KatzVerdict katz_fourfold_check(const CubicForm& X, uint64_t line_budget) {
  if (X.n != 4) throw std::invalid_argument("katz_fourfold_check: the cubic must be a fourfold");
  if (X.field.q64() % 3 != 2)
    throw std::invalid_argument("katz_fourfold_check: needs q = 2 mod 3");
  KatzVerdict v;
  v.n1 = Int(static_cast<unsigned long>(enumerate_lines(X, 1, line_budget).size()));
  v.p = Int(static_cast<unsigned long>(X.field.p()));
  v.residue = v.n1 % v.p;
  v.passes = v.residue != 0;
  return v;
}

CongruenceVerdict highdim_congruence_check(const CubicForm& X, uint64_t line_budget) {
  if (X.n < 5)
    throw std::invalid_argument("highdim_congruence_check: the cubic must have dimension >= 5");
  CongruenceVerdict v;
  v.lines = Int(static_cast<unsigned long>(enumerate_lines(X, 1, line_budget).size()));
  v.q = Int(static_cast<unsigned long>(X.field.q64()));
  v.residue = v.lines % v.q;
  v.passes = v.residue == 1;
  return v;
}

ThreefoldLineBounds bound_threefold(const Int& q) {
  require_prime_power(q, "bound_threefold");
  ThreefoldLineBounds out;
  out.q = q;
  bool have = false;
  for (int t = -5; t <= 5; t += 2) {
    Int u = 1 + 5 * q + q * q - 10 * q + 2 * q * t * t;
    Int v = -2 * t * (q + 1);
    auto less = [&q](const Int& u1, const Int& v1, const Int& u2, const Int& v2) {
      return surd_sign(Rat(u1 - u2), Rat(v1 - v2), q) < 0;
    };
    if (!have || less(u, v, out.lower.u, out.lower.v)) {
      out.lower.u = u;
      out.lower.v = v;
    }
    if (!have || less(out.upper.u, out.upper.v, u, v)) {
      out.upper.u = u;
      out.upper.v = v;
    }
    have = true;
  }
  out.lower.rounded = surd_ceil(Rat(out.lower.u), Rat(out.lower.v), q);
  out.upper.rounded = surd_floor(Rat(out.upper.u), Rat(out.upper.v), q);
  return out;
}

Int bound_fourfold(const Int& q) {
  if (q < 5) throw std::invalid_argument("bound_fourfold: needs q >= 5");
  require_prime_power(q, "bound_fourfold");
  Int best = 0;
  bool have = false;
  for (int e = -1; e <= 1; e += 2) {
    for (int l = 0; l <= 11; ++l) {
      if (e == -1 && l == 0) continue;  // q itself is always an eigenvalue
      Int t = 2 * l - 11;
      Int g = 1 + int_pow(q, 4) + 12 * q * q + e * q * (1 + q * q) +
              2 * q * q * (t * t - 11) + 2 * t * q * (1 + q * q + e * q);
      if (!have || g < best) best = g;
      have = true;
    }
  }
  if (q >= 23) {
    Int closed = int_pow(q, 4) - 21 * q * q * q + 210 * q * q - 21 * q + 1;
    if (best != closed)
      throw std::logic_error("bound_fourfold: minimum disagrees with the closed form");
  }
  return best;
}

AverageLines average_lines(int n, const Int& q, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("average_lines: need n >= 1 and d >= 1");
  if (q < 2) throw std::invalid_argument("average_lines: q must be at least 2");
  AverageLines out;
  Int g = 0;
  for (int i = 0; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      g += int_pow(q, static_cast<unsigned long>(i + j - 1));
  out.grassmannian = g;
  Int monomials;
  mpz_bin_uiui(monomials.get_mpz_t(), static_cast<unsigned long>(n + d + 1),
               static_cast<unsigned long>(d));
  out.dim_p = static_cast<int>(monomials.get_si()) - 1;
  Rat num = Rat(g) * Rat(int_pow(q, static_cast<unsigned long>(out.dim_p - d)) - 1);
  Rat den = Rat(int_pow(q, static_cast<unsigned long>(out.dim_p + 1)) - 1);
  out.exact = num / den;
  out.asymptotic = Rat(g) / Rat(int_pow(q, static_cast<unsigned long>(d + 1)));
  return out;
}

}  // namespace cubiczeta
