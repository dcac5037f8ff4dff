#include "cubiczeta/bsd.hpp"

#include <map>
#include <stdexcept>

namespace cubiczeta {

namespace {

PlaneForm pf_from_map(const gf::Field& F, const std::map<ExpVec, gf::Elem>& m) {
  PlaneForm out;
  for (const auto& [e, c] : m)
    if (c != F.zero()) out.emplace_back(e, c);
  return out;
}

PlaneForm pf_add(const gf::Field& F, const PlaneForm& a, const PlaneForm& b) {
  std::map<ExpVec, gf::Elem> m;
  for (const auto& [e, c] : a) m[e] = c;
  for (const auto& [e, c] : b) {
    auto it = m.find(e);
    if (it == m.end())
      m.emplace(e, c);
    else
      it->second = F.add(it->second, c);
  }
  return pf_from_map(F, m);
}

PlaneForm pf_neg(const gf::Field& F, PlaneForm a) {
  for (auto& [e, c] : a) c = F.neg(c);
  return a;
}

PlaneForm pf_sub(const gf::Field& F, const PlaneForm& a, const PlaneForm& b) {
  return pf_add(F, a, pf_neg(F, b));
}

PlaneForm pf_mul(const gf::Field& F, const PlaneForm& a, const PlaneForm& b) {
  std::map<ExpVec, gf::Elem> m;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ExpVec e{uint8_t(ea[0] + eb[0]), uint8_t(ea[1] + eb[1]), uint8_t(ea[2] + eb[2])};
      gf::Elem c = F.mul(ca, cb);
      auto it = m.find(e);
      if (it == m.end())
        m.emplace(std::move(e), c);
      else
        it->second = F.add(it->second, c);
    }
  return pf_from_map(F, m);
}

PlaneForm pf_embed(const gf::Embedding& emb, const PlaneForm& a) {
  PlaneForm out;
  out.reserve(a.size());
  for (const auto& [e, c] : a) out.emplace_back(e, emb(c));
  return out;
}

ConicBundleData embed_bundle(const ConicBundleData& d, const gf::Field& E) {
  gf::Embedding emb(d.field, E);
  ConicBundleData out;
  out.field = E;
  out.f = pf_embed(emb, d.f);
  out.q1 = pf_embed(emb, d.q1);
  out.q2 = pf_embed(emb, d.q2);
  out.l1 = pf_embed(emb, d.l1);
  out.l2 = pf_embed(emb, d.l2);
  out.l3 = pf_embed(emb, d.l3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.matrixM[i][j] = pf_embed(emb, d.matrixM[i][j]);
  out.gamma = pf_embed(emb, d.gamma);
  for (int i = 0; i < 3; ++i) out.deltas[i] = pf_embed(emb, d.deltas[i]);
  return out;
}

// -delta is a nonzero square; false for delta = 0
bool neg_is_square(const gf::Field& F, const gf::Elem& delta) {
  if (F.is_zero(delta)) return false;
  return F.is_square(F.neg(delta));
}

}  // namespace

gf::Elem plane_form_eval(const gf::Field& F, const PlaneForm& f,
                         const gf::Elem& x1, const gf::Elem& x2, const gf::Elem& x3) {
  gf::Elem acc = F.zero();
  const gf::Elem* xs[3] = {&x1, &x2, &x3};
  for (const auto& [e, c] : f) {
    gf::Elem t = c;
    for (int v = 0; v < 3; ++v)
      for (int rep = 0; rep < e[v]; ++rep) t = F.mul(t, *xs[v]);
    acc = F.add(acc, t);
  }
  return acc;
}

std::pair<CoordChange, ConicBundleData> normalize_line(const CubicForm& X,
                                                       const ProjLine& L) {
  const gf::Field& F = X.field;
  if (X.n != 3)
    throw std::invalid_argument("conic-bundle normalization needs a threefold (n = 3)");
  if (F.p() == 2)
    throw std::domain_error(
        "conic-bundle method needs odd q; count points directly in characteristic 2");
  const int m = X.nvars();

  // columns: unit vectors of the three non-pivot coordinates, then the rows
  int piv1 = -1, piv2 = -1;
  for (int i = 0; i < m; ++i)
    if (L.row1[i] != F.zero()) { piv1 = i; break; }
  for (int i = 0; i < m; ++i)
    if (L.row2[i] != F.zero()) { piv2 = i; break; }
  if (piv1 < 0 || piv2 < 0 || piv1 == piv2)
    throw std::invalid_argument("degenerate line basis");
  CoordChange A(m, std::vector<gf::Elem>(m, F.zero()));
  int col = 0;
  for (int i = 0; i < m; ++i)
    if (i != piv1 && i != piv2) A[i][col++] = F.one();
  for (int i = 0; i < m; ++i) A[i][3] = L.row1[i];
  for (int i = 0; i < m; ++i) A[i][4] = L.row2[i];

  // substitute x = A x' and collect the transformed cubic
  std::map<ExpVec, gf::Elem> trans;
  for (const auto& [e, c] : X.terms) {
    std::map<ExpVec, gf::Elem> prod;
    prod.emplace(ExpVec(m, 0), c);
    for (int v = 0; v < m; ++v)
      for (int rep = 0; rep < e[v]; ++rep) {
        std::map<ExpVec, gf::Elem> nxt;
        for (const auto& [pe, pc] : prod)
          for (int j = 0; j < m; ++j) {
            if (A[v][j] == F.zero()) continue;
            ExpVec ne = pe;
            ++ne[j];
            gf::Elem nc = F.mul(pc, A[v][j]);
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

  // split off the x4/x5 structure; any pure x4/x5 cubic term means L is not
  // contained in X (those four coefficients are the restriction of X to L)
  const gf::Elem half = F.inv(F.from_int(2));
  std::map<ExpVec, gf::Elem> mf, mq1, mq2, ml1, ml2, ml3;
  for (const auto& [e, c] : trans) {
    if (c == F.zero()) continue;
    const int d4 = e[3], d5 = e[4];
    ExpVec base{e[0], e[1], e[2]};
    if (d4 + d5 == 3) throw std::invalid_argument("line is not contained in the cubic");
    if (d4 == 0 && d5 == 0)
      mf[base] = c;
    else if (d4 == 1 && d5 == 0)
      mq1[base] = F.mul(c, half);
    else if (d4 == 0 && d5 == 1)
      mq2[base] = F.mul(c, half);
    else if (d4 == 2 && d5 == 0)
      ml1[base] = c;
    else if (d4 == 1 && d5 == 1)
      ml2[base] = F.mul(c, half);
    else
      ml3[base] = c;
  }

  ConicBundleData data;
  data.field = F;
  data.f = pf_from_map(F, mf);
  data.q1 = pf_from_map(F, mq1);
  data.q2 = pf_from_map(F, mq2);
  data.l1 = pf_from_map(F, ml1);
  data.l2 = pf_from_map(F, ml2);
  data.l3 = pf_from_map(F, ml3);
  data.matrixM = {{{data.f, data.q1, data.q2},
                   {data.q1, data.l1, data.l2},
                   {data.q2, data.l2, data.l3}}};
  data.deltas[0] = pf_sub(F, pf_mul(F, data.l1, data.l3), pf_mul(F, data.l2, data.l2));
  data.deltas[1] = pf_sub(F, pf_mul(F, data.f, data.l3), pf_mul(F, data.q2, data.q2));
  data.deltas[2] = pf_sub(F, pf_mul(F, data.f, data.l1), pf_mul(F, data.q1, data.q1));
  data.gamma = discriminant_quintic(data);
  if (data.gamma.empty())
    throw std::domain_error("discriminant quintic vanishes identically");
  return {std::move(A), std::move(data)};
}

PlaneForm discriminant_quintic(const ConicBundleData& data) {
  const gf::Field& F = data.field;
  const auto& M = data.matrixM;
  // cofactor expansion along the first row
  PlaneForm det = pf_mul(
      F, M[0][0], pf_sub(F, pf_mul(F, M[1][1], M[2][2]), pf_mul(F, M[1][2], M[2][1])));
  det = pf_sub(F, det,
               pf_mul(F, M[0][1],
                      pf_sub(F, pf_mul(F, M[1][0], M[2][2]), pf_mul(F, M[1][2], M[2][0]))));
  det = pf_add(F, det,
               pf_mul(F, M[0][2],
                      pf_sub(F, pf_mul(F, M[1][0], M[2][1]), pf_mul(F, M[1][1], M[2][0]))));
  return det;
}

Int compute_Mr(const CubicForm& X, const ProjLine& L, int r, uint64_t pencil_budget) {
  if (r < 1) throw std::invalid_argument("extension degree must be positive");
  auto [A, base] = normalize_line(X, L);
  const gf::Field E = r == 1 ? base.field
                             : gf::Field::create(base.field.p(),
                                                 base.field.degree() * unsigned(r));
  const ConicBundleData data = r == 1 ? base : embed_bundle(base, E);
  if (E.q() > Int(pencil_budget))
    throw std::domain_error("pencil enumeration over F_{q^r} exceeds the budget");
  const uint64_t qr = E.q64();

  Int Mr = 0;
  auto tally = [&](const gf::Elem& x1, const gf::Elem& x2, const gf::Elem& x3) {
    gf::Elem d1 = plane_form_eval(E, data.deltas[0], x1, x2, x3);
    gf::Elem d2 = plane_form_eval(E, data.deltas[1], x1, x2, x3);
    gf::Elem d3 = plane_form_eval(E, data.deltas[2], x1, x2, x3);
    if (E.is_zero(d1) && E.is_zero(d2) && E.is_zero(d3)) return;  // singular point
    bool plus;
    if (!E.is_zero(d1))
      plus = E.is_square(E.neg(d1));
    else
      plus = neg_is_square(E, d2) || neg_is_square(E, d3);
    Mr += plus ? 1 : -1;
  };
  // roots of the quintic restricted to one pencil line; an identically zero
  // restriction means the whole line lies on the curve
  auto sweep = [&](const gf::FPoly& f, auto&& visit) {
    if (gf::fp_is_zero(gf::fp_trim(f))) {
      for (uint64_t i = 0; i < qr; ++i) visit(E.from_index(i));
    } else {
      for (const gf::Elem& z : gf::distinct_roots(E, f, /*seed=*/7)) visit(z);
    }
  };

  // chart (1 : u : z), one univariate quintic in z per pencil value u
  for (uint64_t ui = 0; ui < qr; ++ui) {
    gf::Elem u = E.from_index(ui);
    gf::FPoly fz(6, E.zero());
    for (const auto& [e, c] : data.gamma) {
      gf::Elem t = c;
      for (int rep = 0; rep < e[1]; ++rep) t = E.mul(t, u);
      fz[e[2]] = E.add(fz[e[2]], t);
    }
    sweep(fz, [&](const gf::Elem& z) { tally(E.one(), u, z); });
  }
  // chart (0 : 1 : z)
  {
    gf::FPoly fz(6, E.zero());
    for (const auto& [e, c] : data.gamma)
      if (e[0] == 0) fz[e[2]] = E.add(fz[e[2]], c);
    sweep(fz, [&](const gf::Elem& z) { tally(E.zero(), E.one(), z); });
  }
  // the point (0 : 0 : 1)
  if (E.is_zero(plane_form_eval(E, data.gamma, E.zero(), E.zero(), E.one())))
    tally(E.zero(), E.zero(), E.one());
  return Mr;
}

WeilPolynomial p1_via_bsd(const CubicForm& X, const ProjLine& L, uint64_t pencil_budget) {
  std::vector<Int> M;
  M.reserve(5);
  for (int r = 1; r <= 5; ++r) M.push_back(compute_Mr(X, L, r, pencil_budget));
  PowerSums ps = PowerSums::checked(std::move(M), X.field.q(), 10);
  ZPoly head = powersums_to_poly(ps, 5, SignConvention::threefold);
  WeilPolynomial P = complete_functional_equation(head, X.field.q(), 1);
  if (!verify_weil(P).pass())
    throw std::logic_error("reconstructed P_1 fails the Weil verification");
  return P;
}

}  // namespace cubiczeta
