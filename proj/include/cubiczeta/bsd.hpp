#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cubiczeta/geometry.hpp"
#include "cubiczeta/weil.hpp"

namespace cubiczeta {

// Homogeneous form in three variables, exponent-sorted, nonzero coefficients.
using PlaneForm = std::vector<std::pair<ExpVec, gf::Elem>>;

gf::Elem plane_form_eval(const gf::Field& F, const PlaneForm& f,
                         const gf::Elem& x1, const gf::Elem& x2, const gf::Elem& x3);

// A cubic threefold containing the line {x1=x2=x3=0}, written as
//   f + 2 q1 x4 + 2 q2 x5 + l1 x4^2 + 2 l2 x4 x5 + l3 x5^2
// with f, q1, q2, l1, l2, l3 of degrees 3, 2, 2, 1, 1, 1 in x1..x3.  The
// residual conic over a plane point is the symmetric matrix matrixM; gamma is
// its determinant, a quintic, and deltas[i] the principal minor omitting row
// and column i+1 (degrees 2, 4, 4).
struct ConicBundleData {
  gf::Field field;
  PlaneForm f, q1, q2, l1, l2, l3;
  std::array<std::array<PlaneForm, 3>, 3> matrixM;
  PlaneForm gamma;
  std::array<PlaneForm, 3> deltas;
};

// 5x5 invertible matrix A: substituting x = A x' carries {x1'=x2'=x3'=0} to L,
// so in the primed coordinates the cubic takes the conic-bundle shape above.
using CoordChange = std::vector<std::vector<gf::Elem>>;

// Moves the line into standard position and extracts the bundle forms.  The
// last two columns of A are the echelon rows of L, the first three the unit
// vectors of the non-pivot coordinates, so the normalization is canonical in
// the echelon representative.  Throws std::invalid_argument when n != 3 or
// L is not contained in X, std::domain_error for even q (halving the mixed
// coefficients needs an invertible 2; count points directly instead).
std::pair<CoordChange, ConicBundleData> normalize_line(const CubicForm& X,
                                                       const ProjLine& L);

// det(matrixM), degree 5.
PlaneForm discriminant_quintic(const ConicBundleData& data);

// M_r from the discriminant quintic over F_{q^r}: walks the pencil of lines
// through (1:0:0), finding the curve points on each line by univariate root
// extraction, and adds +1 for a smooth curve point over which the double
// cover splits (-delta_1 a nonzero square, or delta_1 = 0 and -delta_2 or
// -delta_3 one), -1 otherwise.  Points with all three deltas zero are the
// singular points of the curve and contribute nothing.  Throws
// std::domain_error when q^r exceeds the budget.
Int compute_Mr(const CubicForm& X, const ProjLine& L, int r,
               uint64_t pencil_budget = uint64_t(1) << 23);

// P_1(F(X),T): M_1..M_5 through compute_Mr, Newton reconstruction of the
// degree-5 head, functional-equation completion to degree 10.  The result is
// checked with verify_weil before being returned.
WeilPolynomial p1_via_bsd(const CubicForm& X, const ProjLine& L,
                          uint64_t pencil_budget = uint64_t(1) << 23);

}  // namespace cubiczeta
