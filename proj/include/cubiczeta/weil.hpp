#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubiczeta/zpoly.hpp"

namespace cubiczeta {

// P(T) = 1 + c_1 T + ... + c_d T^d whose reciprocal roots w_j all have
// modulus q^{weight/2}.  The monic reversal T^d P(1/T) has the w_j as roots.
struct WeilPolynomial {
  ZPoly coeffs;  // lowest degree first, coeffs[0] == 1
  int weight = 1;
  Int q = 0;
};

// Power sums M_1..M_k with the dimension-specific sign convention chosen by
// the producer.  checked() enforces |M_r| <= b q^{r/2} (b = root count).
struct PowerSums {
  std::vector<Int> values;
  Int q = 0;
  int b = 0;
  static PowerSums checked(std::vector<Int> values, const Int& q, int b);
};

// threefold: M_r = -sum w_j^r;  fourfold: M_r = +sum w_j^r.
enum class SignConvention { threefold, fourfold };

// First m+1 coefficients of prod_j (1 - w_j T) by Newton's identities over
// exact integers; throws on non-exact division (inconsistent sums).
ZPoly powersums_to_poly(const PowerSums& M, int m, SignConvention sc);

// Extends an (m+1)-coefficient head to the degree-2m polynomial with
// c_{m+j} = q^{weight j} c_{m-j}.
WeilPolynomial complete_functional_equation(const ZPoly& head, const Int& q, int weight = 1);

struct WeilVerdict {
  bool reciprocity_ok = false;
  bool moduli_ok = false;
  double worst_rel_deviation = 0.0;  // of root moduli, relative to q^{-weight/2}
  bool pass() const { return reciprocity_ok && moduli_ok; }
};

// Reciprocity is checked exactly; root moduli numerically at the requested
// precision against relative tolerance 1e-9.
WeilVerdict verify_weil(const WeilPolynomial& P, int precision_bits = 256);

// p_r = sum_j w_j^r for r = 1..up_to, by the Newton recurrence.
std::vector<Int> extend_power_sums(const WeilPolynomial& P, int up_to);

// Polynomial with reciprocal roots w_j^d, defined over q^d.
WeilPolynomial frobenius_power_charpoly(const WeilPolynomial& P, int d);

// prod_{j<k} (1 - w_j w_k T), degree 45, from a degree-10 weight-1 input.
WeilPolynomial pair_product_poly(const WeilPolynomial& P1);

// Multiplicity data of the surface Picard computation: mu_plus/mu_minus are
// the multiplicities of +-sqrt(q) among the w_j (always even), pair_mults
// lists one entry per conjugate pair of the remaining factors.
struct PicardData {
  int rho = 0;
  int mu_plus = 0;
  int mu_minus = 0;
  std::vector<int> pair_mults;
};

PicardData picard_number(const WeilPolynomial& P1);

// D_q = P2*(1/q) with the factor (1-qT)^rho removed from the pair product.
struct ArtinTateValue {
  Rat Dq;
  Rat q10_Dq;  // q^10 * D_q
  int rho = 0;
};

ArtinTateValue artin_tate(const WeilPolynomial& P1);

enum class Tri { no, yes, unknown };

struct AbelianClassification {
  bool ordinary = false;
  bool supersingular = false;
  bool simple = false;  // the reversal is irreducible over Q
  Tri absolutely_simple = Tri::unknown;
  std::optional<PicardData> picard;  // filled for degree-10 inputs
};

AbelianClassification classify_abelian(const WeilPolynomial& P1);

// Degree-10 criterion: no for reversals lying in Z[T^d] (or reducible ones),
// yes when the d-th Frobenius power stays irreducible for all d with
// phi(d) | 10, unknown otherwise.
Tri absolute_simplicity(const WeilPolynomial& P1);

// q = p^s with p prime; throws if q is not a prime power.
std::pair<Int, int> prime_power_split(const Int& q);

}  // namespace cubiczeta
