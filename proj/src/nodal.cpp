#include "cubiczeta/nodal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cubiczeta {

namespace {

SpaceForm sf_from_map(const gf::Field& F, const std::map<ExpVec, gf::Elem>& m) {
  SpaceForm out;
  for (const auto& [e, c] : m)
    if (c != F.zero()) out.emplace_back(e, c);
  return out;
}

SpaceForm sf_embed(const gf::Embedding& emb, const SpaceForm& f) {
  SpaceForm out;
  out.reserve(f.size());
  for (const auto& [e, c] : f) out.emplace_back(e, emb(c));
  return out;
}

// Visits one representative of every point of P^3(F), first nonzero
// coordinate scaled to 1.
template <typename Fn>
void for_each_p3(const gf::Field& F, Fn&& fn) {
  const uint64_t q = F.q64();
  std::vector<gf::Elem> x(4, F.zero());
  for (int pivot = 0; pivot < 4; ++pivot) {
    for (int j = 0; j < 4; ++j) x[size_t(j)] = F.zero();
    x[size_t(pivot)] = F.one();
    uint64_t total = 1;
    for (int j = pivot + 1; j < 4; ++j) total *= q;
    for (uint64_t idx = 0; idx < total; ++idx) {
      uint64_t t = idx;
      for (int j = pivot + 1; j < 4; ++j) {
        x[size_t(j)] = F.from_index(t % q);
        t /= q;
      }
      fn(x);
    }
  }
}

// Q = c L^2 for a linear form L.  In characteristic 2 squares are exactly the
// forms without mixed monomials (Frobenius supplies the square roots of the
// diagonal coefficients); otherwise the Gram matrix has rank 1.
bool is_square_form(const gf::Field& F, const SpaceForm& Q) {
  if (F.p() == 2) {
    for (const auto& [e, c] : Q)
      for (int v = 0; v < 4; ++v)
        if (e[size_t(v)] == 1) return false;
    return true;
  }
  const gf::Elem half = F.inv(F.from_int(2));
  gf::Elem B[4][4];
  for (auto& row : B)
    for (auto& x : row) x = F.zero();
  for (const auto& [e, c] : Q) {
    int i = -1, j = -1;
    for (int v = 0; v < 4; ++v) {
      if (e[size_t(v)] == 2) i = j = v;
      if (e[size_t(v)] == 1) (i < 0 ? i : j) = v;
    }
    if (i == j)
      B[i][i] = c;
    else
      B[i][j] = B[j][i] = F.mul(c, half);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) {
          gf::Elem minor = F.sub(F.mul(B[i][k], B[j][l]), F.mul(B[i][l], B[j][k]));
          if (!F.is_zero(minor)) return false;
        }
  return true;
}

Int count_curve(const gf::Field& F, const SpaceForm& Q, const SpaceForm& E) {
  Int count = 0;
  for_each_p3(F, [&](const std::vector<gf::Elem>& x) {
    if (F.is_zero(space_form_eval(F, Q, x)) && F.is_zero(space_form_eval(F, E, x)))
      ++count;
  });
  return count;
}

}  // namespace

gf::Elem space_form_eval(const gf::Field& F, const SpaceForm& f,
                         const std::vector<gf::Elem>& x) {
  gf::Elem acc = F.zero();
  for (const auto& [e, c] : f) {
    gf::Elem t = c;
    for (int v = 0; v < 4; ++v)
      for (int rep = 0; rep < e[size_t(v)]; ++rep) t = F.mul(t, x[size_t(v)]);
    acc = F.add(acc, t);
  }
  return acc;
}

QuadricType quadric_type(const gf::Field& F, const SpaceForm& Q) {
  if (Q.empty()) throw std::domain_error("quadric is identically zero");
  const Int q = F.q();
  if (q * q * q > Int(uint64_t(1) << 26))
    throw std::domain_error("quadric point count exceeds the enumeration budget");
  Int count = 0;
  for_each_p3(F, [&](const std::vector<gf::Elem>& x) {
    if (F.is_zero(space_form_eval(F, Q, x))) ++count;
  });
  if (count == (q + 1) * (q + 1)) return QuadricType::split;
  if (count == q * q + 1) return QuadricType::nonsplit;
  if (count == q * q + q + 1) {
    if (is_square_form(F, Q)) throw std::domain_error("double plane: quadric has rank 1");
    return QuadricType::cone;
  }
  throw std::domain_error("quadric point count matches no rank >= 3 class");
}

NodalCurveData node_curve(const CubicForm& X, const ProjPoint& x, int rmax,
                          int search_degree, uint64_t point_budget) {
  const gf::Field& F = X.field;
  if (X.n != 3) throw std::invalid_argument("node_curve needs a threefold (n = 3)");
  if (rmax < 1) throw std::invalid_argument("node_curve needs rmax >= 1");
  if (search_degree < 1) throw std::invalid_argument("node_curve needs search_degree >= 1");
  if (x.coords.size() != 5) throw std::invalid_argument("point has the wrong coordinate count");
  const ProjPoint xn = normalize_point(F, x.coords);
  const int m = X.nvars();

  // substitution x = A x': columns are the unit vectors of the non-pivot
  // coordinates, then the point, so x' = (0,0,0,0,1) maps to the point
  int piv = 0;
  while (F.is_zero(xn.coords[size_t(piv)])) ++piv;
  std::vector<std::vector<gf::Elem>> A(size_t(m), std::vector<gf::Elem>(size_t(m), F.zero()));
  int col = 0;
  for (int i = 0; i < m; ++i)
    if (i != piv) A[size_t(i)][size_t(col++)] = F.one();
  for (int i = 0; i < m; ++i) A[size_t(i)][4] = xn.coords[size_t(i)];

  std::map<ExpVec, gf::Elem> trans;
  for (const auto& [e, c] : X.terms) {
    std::map<ExpVec, gf::Elem> prod;
    prod.emplace(ExpVec(size_t(m), 0), c);
    for (int v = 0; v < m; ++v)
      for (int rep = 0; rep < e[size_t(v)]; ++rep) {
        std::map<ExpVec, gf::Elem> nxt;
        for (const auto& [pe, pc] : prod)
          for (int j = 0; j < m; ++j) {
            if (A[size_t(v)][size_t(j)] == F.zero()) continue;
            ExpVec ne = pe;
            ++ne[size_t(j)];
            gf::Elem nc = F.mul(pc, A[size_t(v)][size_t(j)]);
            auto it = nxt.find(ne);
            if (it == nxt.end())
              nxt.emplace(std::move(ne), nc);
            else
              it->second = F.add(it->second, nc);
          }
        prod = std::move(nxt);
      }
    for (const auto& [pe, pc] : prod) {
      auto it = trans.find(pe);
      if (it == trans.end())
        trans.emplace(pe, pc);
      else
        it->second = F.add(it->second, pc);
    }
  }

  // the cubic must reduce to x5 Q + E: a x5^3 term means the point is off X,
  // x5^2-linear terms mean it is a smooth point
  std::map<ExpVec, gf::Elem> mq, me;
  for (const auto& [e, c] : trans) {
    if (c == F.zero()) continue;
    const int d5 = e[4];
    ExpVec base{e[0], e[1], e[2], e[3]};
    if (d5 == 3) throw std::invalid_argument("point is not on the cubic");
    if (d5 == 2) throw std::invalid_argument("point is not a singular point of the cubic");
    if (d5 == 1)
      mq[base] = c;
    else
      me[base] = c;
  }
  SpaceForm Q = sf_from_map(F, mq);
  SpaceForm E = sf_from_map(F, me);
  if (Q.empty())
    throw std::domain_error("tangent cone vanishes: the point has multiplicity three");

  SingularityReport rep = singular_locus(X, search_degree, point_budget);
  if (rep.searched_up_to < 1)
    throw std::domain_error("singular locus scan exceeds the point budget");
  for (const SingularPoint& s : rep.points)
    if (s.degree != 1 || !(s.point == xn))
      throw std::invalid_argument("the cubic has further singular points within the search bound");

  NodalCurveData data;
  data.field = F;
  data.Q = Q;
  data.E = E;
  data.quadric_type = quadric_type(F, Q);
  for (int r = 1; r <= rmax; ++r) {
    const gf::Field Er =
        r == 1 ? F : gf::Field::create(F.p(), F.degree() * unsigned(r));
    const Int qr = Er.q();
    if (qr * qr * qr > Int(point_budget))
      throw std::domain_error("curve count over F_{q^r} exceeds the point budget");
    if (r == 1) {
      data.n[r] = count_curve(F, Q, E);
    } else {
      gf::Embedding emb(F, Er);
      data.n[r] = count_curve(Er, sf_embed(emb, Q), sf_embed(emb, E));
    }
  }
  return data;
}

Int nodal_fano_count(const NodalCurveData& data) {
  auto i1 = data.n.find(1), i2 = data.n.find(2);
  if (i1 == data.n.end() || i2 == data.n.end())
    throw std::invalid_argument("curve counts n_1 and n_2 are required");
  const Int& n1 = i1->second;
  const Int& n2 = i2->second;
  Int num = n1 * n1 + n2;
  switch (data.quadric_type) {
    case QuadricType::split: num -= 2 * n1; break;
    case QuadricType::nonsplit: num += 2 * n1; break;
    case QuadricType::cone: break;
  }
  if (num < 0 || num % 2 != 0)
    throw std::domain_error("the count formula fails the exact divisibility");
  return num / 2;
}

std::vector<HQuarticCandidate> h_poly_search(int64_t q) {
  if (q < 2) throw std::invalid_argument("h_poly_search needs q >= 2");
  if (q > (int64_t(1) << 20)) throw std::domain_error("search bounds exceed the loop range");
  const Int qi(static_cast<long>(q));
  const Int qr = isqrt(qi);
  const bool sq = qr * qr == qi;
  const int64_t amax = Int(isqrt(1024 * qi * qi * qi)).get_si();  // 32 q^{3/2}
  const int64_t bmax = 16 * q * q;
  const Int dcap = 400 * qi * qi * qi;

  std::vector<HQuarticCandidate> out;
  for (int64_t a = -amax; a <= amax; ++a) {
    // every root of H' lies between the extreme roots of H, so
    // H'(2 sqrt q) >= 0 >= H'(-2 sqrt q), i.e. (a - 12q(q+1))^2 <= 400 q^3
    Int C = Int(static_cast<long>(a)) - 12 * qi * (qi + 1);
    if (C * C > dcap) continue;
    // H(+-2 sqrt q) >= 0 with A = 4q^2 + b and B = 2a - 8q(q+1) reads
    // A >= 0 and A^2 >= q B^2, a lower bound on b
    Int B = 2 * Int(static_cast<long>(a)) - 8 * qi * (qi + 1);
    Int t = isqrt(qi * B * B);
    if (t * t < qi * B * B) ++t;
    Int blo = t - 4 * qi * qi;
    if (blo > Int(static_cast<long>(bmax))) continue;
    int64_t b0 = std::max(-bmax, Int(blo).get_si());
    for (int64_t b = b0; b <= bmax; ++b) {
      ZPoly H{Int(static_cast<long>(b)), Int(static_cast<long>(a)), -3 * qi, -(qi + 1),
              Int(1)};
      ZPoly S = zp_squarefree_part(H);
      const int ds = zp_deg(S);
      if (count_real_roots(S) != ds) continue;
      if (count_real_roots_closed(S, Surd(Rat(0), Rat(-2), qi), Surd(Rat(0), Rat(2), qi)) !=
          ds)
        continue;
      // a root of H at an irrational endpoint comes paired with its conjugate
      // as a T^2 - 4q factor and is admissible; for square q the endpoints are
      // rational and a root there pins a unit root of the curve's Frobenius,
      // which cannot happen, so the interval is open
      if (sq) {
        Int s = 2 * qr;
        if (zp_eval(S, s) == 0 || zp_eval(S, Int(-s)) == 0) continue;
      }
      out.push_back(HQuarticCandidate{a, b, std::move(H)});
    }
  }
  return out;
}

}  // namespace cubiczeta
