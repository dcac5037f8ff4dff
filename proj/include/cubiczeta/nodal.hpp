#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cubiczeta/geometry.hpp"
#include "cubiczeta/zpoly.hpp"

namespace cubiczeta {

// Homogeneous form in four variables, exponent-sorted, nonzero coefficients.
using SpaceForm = std::vector<std::pair<ExpVec, gf::Elem>>;

gf::Elem space_form_eval(const gf::Field& F, const SpaceForm& f,
                         const std::vector<gf::Elem>& x);

enum class QuadricType { split, nonsplit, cone };

// Genus-4 curve attached to a threefold with a single A1/A2 point: in
// coordinates with the singular point at (0:0:0:0:1) the cubic reads
// x5 Q(x1..x4) + E(x1..x4), and C = {Q = E = 0} in P^3 parametrizes the
// lines through the point.  n maps r to Card(C(F_{q^r})).  quadric_type
// records how the rulings of {Q = 0} behave over F_q: split rulings cut two
// rational degree-3 pencils on C, nonsplit a conjugate pair, a cone one
// self-adjoint pencil.
struct NodalCurveData {
  gf::Field field;
  SpaceForm Q;
  SpaceForm E;
  std::map<int, Int> n;
  QuadricType quadric_type = QuadricType::split;
};

// Classifies a rank >= 3 quadric surface by its exact point count, which is
// (q+1)^2 for split, q^2+1 for nonsplit and q^2+q+1 for a cone; the test is
// uniform in the characteristic.  A count outside those three values, or a
// cone count produced by a double plane (the form is a perfect square),
// signals rank <= 2 and throws std::domain_error.
QuadricType quadric_type(const gf::Field& F, const SpaceForm& Q);

// Moves the singular point x to (0:0:0:0:1), splits the cubic into x5 Q + E
// and counts the curve {Q = E = 0} over F_{q^r} for r = 1..rmax.  The last
// column of the substitution matrix is x itself, the others the unit vectors
// of the non-pivot coordinates.  That x is of type A1 or A2 is a
// precondition, not checked here: a worse point still yields Q, E and the
// counts, but C is then singular and nodal_fano_count loses its meaning.
// Throws std::invalid_argument when n != 3, when x does not lie on X, when
// x is not singular, or when the locus scan up to search_degree finds
// further singular points; std::domain_error when Q vanishes identically
// (a point of multiplicity three) or a scan or count exceeds the point
// budget.
NodalCurveData node_curve(const CubicForm& X, const ProjPoint& x, int rmax = 2,
                          int search_degree = 2,
                          uint64_t point_budget = uint64_t(1) << 22);

// Card(F(X)(F_q)) from the curve counts: (n1^2 - 2n1 + n2)/2 when the two
// degree-3 pencils are rational (split), (n1^2 + 2n1 + n2)/2 when conjugate
// (nonsplit), (n1^2 + n2)/2 when equal (cone).  Needs n at 1 and 2; a
// negative or odd numerator throws std::domain_error, it always signals
// inconsistent counts.
Int nodal_fano_count(const NodalCurveData& data);

// One admissible characteristic quartic for a pointless genus-4 curve:
// H(T) = T^4 - (q+1)T^3 - 3qT^2 + aT + b, stored lowest degree first.
struct HQuarticCandidate {
  int64_t a = 0;
  int64_t b = 0;
  ZPoly poly;
};

// All (a, b) with |a| <= 32 q^{3/2} and |b| <= 16 q^2 such that H has four
// real roots in [-2 sqrt(q), 2 sqrt(q)], the shape forced on the curve
// polynomial Q_1(C,T) = T^4 H(T + q/T) by n_1 = n_2 = 0.  Decided exactly:
// Sturm counts over the rationals on the squarefree part, endpoints through
// surd arithmetic.  A root at an irrational endpoint is kept, it arrives
// with its conjugate as a T^2 - 4q factor; for square q the endpoints are
// rational and a root there is rejected, it would force a unit root on the
// Frobenius of C.  Candidates come back sorted by (a, b).  Throws
// std::invalid_argument when q < 2.
std::vector<HQuarticCandidate> h_poly_search(int64_t q);

}  // namespace cubiczeta
