#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cubiczeta/geometry.hpp"
#include "cubiczeta/weil.hpp"

namespace cubiczeta {

// Factored zeta function Z(Y,T) = prod_i P_i(Y,T)^{(-1)^{i+1}} of a smooth
// projective variety Y, one factor per cohomological degree in weight order.
// Point counts follow from the trace formula
//   N_r(Y) = sum_i (-1)^i sum_j w_{ij}^r
// over the reciprocal roots w_ij of the factors.
struct ZetaDescription {
  int dim = 0;  // of Y
  std::vector<std::pair<WeilPolynomial, int>> factors;  // (P_i, (-1)^{i+1})

  // Surface of lines of a threefold: invariants of the degree-10 P_1.
  std::optional<PicardData> picard;
  std::optional<AbelianClassification> albanese;
  std::optional<ArtinTateValue> artin;

  // Fourfold of lines: multiplicity of q among the 23 weight-2 reciprocal
  // roots.  Equality with the geometric Picard rank would follow from the
  // Tate conjecture, which is open here; the flag marks that caveat.
  std::optional<int> tate_rank;
  bool tate_rank_conjectural = false;

  Int predict_points(int r) const;
};

// M_r = (N_r - (1 + q^r + ... + q^{nr})) / q^r for r = 1..max supplied.
// n = 3: M_r = -sum w_j^r over the 10 middle eigenvalues w_j / q^r, root
// modulus sqrt(q).  n = 4: M_r = +sum w_j^r over the 22 primitive ones, root
// modulus q, so the returned PowerSums stores q^2 as its modulus base.
// Throws std::invalid_argument when n is not 3 or 4, q < 2, the map is empty
// or skips an r; std::domain_error when a division is not exact (counts not
// of the expected shape) or a sum exceeds the Weil bound.
PowerSums m_values(const std::map<int, Int>& N, const Int& q, int n);

// Zeta function of the surface of lines of a smooth cubic threefold from the
// degree-10 weight-1 P_1 of that surface: P_2 is the pair product over the
// roots of P_1, P_3(T) = P_1(qT), P_0 = 1-T, P_4 = 1-q^2 T.  Attaches the
// Picard number, the Albanese classification and the Artin-Tate quantity.
// Throws std::invalid_argument unless P1 has degree 10, weight 1 and passes
// verify_weil.
ZetaDescription zeta_fano_threefold(const WeilPolynomial& P1);

// Zeta function of the fourfold of lines of a smooth cubic fourfold from the
// degree-22 primitive quartic part of the cubic.  Accepts the weight-2
// normalization (reciprocal roots w_1..w_22 of modulus q) or the weight-4
// primitive part itself (reciprocal roots q w_j), which is rescaled by
// T -> T/q first.  With w_23 = q appended: P_2 = prod (1 - w_j T), P_4 runs
// over unordered pairs w_j w_k (degree 276), P_6(T) = P_2(q^2 T), the odd
// factors are 1, P_0 = 1-T, P_8 = 1-q^4 T.  Reports the multiplicity of q
// among the w_j as tate_rank.  Throws std::invalid_argument on a wrong
// degree or weight or a verify_weil failure; std::domain_error when the
// weight-4 input is not divisible by the required powers of q.
ZetaDescription zeta_fano_fourfold(const WeilPolynomial& P4_0);

struct KatzVerdict {
  Int n1;            // F_q-lines on X
  Int p;             // field characteristic
  Int residue;       // n1 mod p
  bool passes = false;  // residue != 0
};

// For a cubic fourfold over F_q with finite singular locus and q = 2 mod 3,
// the line count is nonzero mod p.  Finiteness of the singular locus is a
// precondition, not checked here.  Throws std::invalid_argument when n != 4
// or q != 2 mod 3; the enumeration budget propagates as std::domain_error.
KatzVerdict katz_fourfold_check(const CubicForm& X,
                                uint64_t line_budget = uint64_t(1) << 26);

struct CongruenceVerdict {
  Int lines;  // F_q-lines on X
  Int q;
  Int residue;       // lines mod q
  bool passes = false;  // residue == 1
};

// For any cubic hypersurface of dimension >= 5 the number of F_q-lines is
// 1 mod q.  Practical only for small q and n (the line scan is over the full
// Grassmannian).  Throws std::invalid_argument when n < 5; the enumeration
// budget propagates as std::domain_error.
CongruenceVerdict highdim_congruence_check(const CubicForm& X,
                                           uint64_t line_budget = uint64_t(1) << 26);

// One side of a line-count estimate: the exact value u + v sqrt(q) and its
// integer rounding, a ceiling for lower bounds and a floor for upper ones.
struct SurdBound {
  Int u, v;
  Int rounded;
};

struct ThreefoldLineBounds {
  Int q;
  SurdBound lower;
  SurdBound upper;
};

// Deligne-Weil estimate for the number of F_q-lines on a smooth cubic
// threefold: minimum and maximum of
//   1 + 5q + q^2 - 2t(q+1)sqrt(q) + 2q t^2 - 10q,  t in {-5,-3,-1,1,3,5},
// over the admissible eigenvalue configurations; the minimum selects t = 1,
// 3 or 5 as q grows (breaks at q = 16 and q = 64) and the maximum sits at
// t = -5.  All comparisons are exact surd arithmetic; no floating point.
// Throws std::invalid_argument when q is not a prime power.
ThreefoldLineBounds bound_threefold(const Int& q);

// Deligne-Weil lower bound for the number of F_q-lines on a smooth cubic
// fourfold: minimum of
//   G(e,l) = 1 + q^4 + 12q^2 + eq(1+q^2) + 2q^2((2l-11)^2 - 11)
//          + 2(2l-11)q(1 + q^2 + eq)
// over e in {-1,+1} and l in {0..11}, excluding (e,l) = (-1,0) because q
// itself is always an eigenvalue.  For q >= 23 this equals
// q^4 - 21q^3 + 210q^2 - 21q + 1.  The bound is positive from q = 5 on.
// Throws std::invalid_argument when q < 5 or q is not a prime power.
Int bound_fourfold(const Int& q);

struct AverageLines {
  Rat exact;         // Card G * (q^{dimP-d} - 1) / (q^{dimP+1} - 1)
  Rat asymptotic;    // Card G / q^{d+1}
  Int grassmannian;  // Card Gr(1, P^{n+1})(F_q)
  int dim_p = 0;     // dimension of the space of degree-d forms in P^{n+1}
};

// Average number of F_q-lines over all degree-d hypersurfaces of dimension n,
// from the incidence correspondence: Card G(F_q) = sum_{0<=i<j<=n+1} q^{i+j-1}
// and dim P = C(n+d+1, d) - 1.  Throws std::invalid_argument when n < 1,
// d < 1 or q < 2.
AverageLines average_lines(int n, const Int& q, int d = 3);

}  // namespace cubiczeta
