#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cubiczeta/gf.hpp"
#include "cubiczeta/intmath.hpp"

namespace cubiczeta {

// Exponents of one monomial; length n + 2, entries sum to 3.
using ExpVec = std::vector<uint8_t>;

// Homogeneous cubic form in n + 2 variables cutting a hypersurface in P^{n+1}.
struct CubicForm {
  int n = 0;
  gf::Field field;
  std::vector<std::pair<ExpVec, gf::Elem>> terms;  // exponent-sorted, nonzero

  int nvars() const { return n + 2; }
};

// Validates degrees, merges duplicate monomials and drops zero coefficients;
// throws std::invalid_argument on an empty or non-cubic input.
CubicForm make_cubic(int n, const gf::Field& F,
                     const std::vector<std::pair<ExpVec, gf::Elem>>& terms);

// One term per line: "<coeff> e1 e2 ... e_{n+2}". Blank lines and lines
// starting with '#' are skipped; the variable count is inferred.
CubicForm parse_cubic_text(const gf::Field& F, const std::string& text);
std::string cubic_to_text(const CubicForm& X);

// Coefficients embedded into F_{q^k}; exponents unchanged.
CubicForm base_change(const CubicForm& X, int k);

struct ProjPoint {
  std::vector<gf::Elem> coords;  // first nonzero coordinate is 1
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// Scales so the first nonzero coordinate is 1; throws on the zero vector.
ProjPoint normalize_point(const gf::Field& F, std::vector<gf::Elem> v);

gf::Elem eval_cubic(const CubicForm& X, const std::vector<gf::Elem>& x);

// N_r: exact number of F_{q^r} points. Fibers the last coordinate over
// P^n(F_{q^r}), so the cost is one cubic root count per fiber; throws
// std::domain_error when the fiber count exceeds the budget.
Int count_points(const CubicForm& X, int r, uint64_t fiber_budget = uint64_t(1) << 26);

struct ProjLine {
  std::vector<gf::Elem> row1, row2;  // 2 x (n+2) reduced row echelon basis
  friend bool operator==(const ProjLine&, const ProjLine&) = default;
};

// Echelon representative of the line through two independent points.
ProjLine line_from_span(const gf::Field& F, const std::vector<gf::Elem>& a,
                        const std::vector<gf::Elem>& b);

// All F_{q^k}-lines contained in X, duplicate-free: iterates unique echelon
// representatives and keeps those on which the restricted cubic form has all
// four coefficients zero (exact containment in every q, including q = 2).
std::vector<ProjLine> enumerate_lines(const CubicForm& X, int k = 1,
                                      uint64_t line_budget = uint64_t(1) << 26);

enum class SingType { A1, A2, other };

struct SingularPoint {
  int degree = 1;   // minimal field of definition F_{q^degree}
  ProjPoint point;  // coordinates over F_{q^degree}
  SingType type = SingType::other;
};

struct SingularityReport {
  std::vector<SingularPoint> points;
  int searched_up_to = 0;  // all degrees <= this were fully enumerated
  // In characteristic 2 the A1 label rests on the tangent-cone smoothness
  // reading of "ordinary double point"; set when that reading was applied.
  bool char2_node_convention = false;
  bool empty() const { return points.empty(); }
};

// Singular points over F_{q^k} for k <= max_degree, each Galois conjugate
// listed once at its minimal field of definition. A point is A1 when the
// projectivized tangent cone is a smooth quadric (a formulation valid in
// characteristic 2), A2 when the quadric has corank one and the cubic part
// does not vanish on the kernel direction. The budget caps the number of
// points enumerated per degree; searched_up_to reports how far the scan got.
SingularityReport singular_locus(const CubicForm& X, int max_degree,
                                 uint64_t point_budget = uint64_t(1) << 22);

// Exact geometric smoothness: the form and its partial derivatives have no
// common zero over the algebraic closure. Decided by a Macaulay-style rank
// certificate in the degree n+3 (characteristic 3: n+4) graded piece, so no
// point search and no budget are involved.
bool is_smooth(const CubicForm& X);

// Line count of X from point counts:
// (N_r^2 - 2(1 + q^{nr}) N_r + N_{2r}) / (2 q^{2r}) + q^{(n-2)r} Nsing_r.
// N needs entries at r and 2r, Nsing at r; the division must be exact and a
// remainder throws (it always signals inconsistent counts).
Int lines_via_gs(const std::map<int, Int>& N, const std::map<int, Int>& Nsing,
                 const Int& q, int n, int r);

}  // namespace cubiczeta
