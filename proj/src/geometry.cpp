#include "cubiczeta/geometry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "gf_internal.hpp"

namespace cubiczeta {
namespace {

using gf::detail::kernel_distinct_root_count;
using gf::detail::with_view;

Int proj_space_size(const Int& Q, int d) {
  Int s = 0, pw = 1;
  for (int i = 0; i <= d; ++i) {
    s += pw;
    pw *= Q;
  }
  return s;
}

// A cubic term with its coefficient flattened to view codes and the (at most
// three) variables that actually occur.
template <class V>
struct FlatTerm {
  typename V::E c;
  uint8_t tdeg = 0;  // exponent of the distinguished last variable, when split
  uint8_t nv = 0;
  uint8_t var[3];
  uint8_t exp[3];
};

// Counts points of the hypersurface by fibering the last coordinate over
// P^n: each fiber is a cubic in one variable, counted by its distinct roots.
template <class V>
uint64_t fibered_count_kernel(const V& vw, const CubicForm& X) {
  using E = typename V::E;
  const int m = X.nvars() - 1;
  std::vector<FlatTerm<V>> terms;
  E apex = vw.zero();  // f(0,...,0,1)
  for (const auto& [e, c] : X.terms) {
    FlatTerm<V> t;
    t.c = vw.from_elem(c);
    t.tdeg = e[size_t(m)];
    for (int i = 0; i < m; ++i)
      if (e[size_t(i)]) {
        t.var[t.nv] = uint8_t(i);
        t.exp[t.nv] = e[size_t(i)];
        ++t.nv;
      }
    if (t.tdeg == 3) apex = vw.add(apex, t.c);
    terms.push_back(t);
  }
  const uint64_t Q = vw.q();
  uint64_t total = vw.is_zero(apex) ? 1 : 0;

  std::vector<E> vals(size_t(m), vw.zero());
  std::vector<uint64_t> idx(size_t(m), 0);
  for (int pivot = 0; pivot < m; ++pivot) {
    for (int i = 0; i < m; ++i) {
      vals[size_t(i)] = vw.zero();
      idx[size_t(i)] = 0;
    }
    vals[size_t(pivot)] = vw.one();
    while (true) {
      E coef[4] = {vw.zero(), vw.zero(), vw.zero(), vw.zero()};
      for (const auto& t : terms) {
        E prod = t.c;
        bool dead = false;
        for (int j = 0; j < t.nv; ++j) {
          const E& x = vals[t.var[j]];
          if (vw.is_zero(x)) {
            dead = true;
            break;
          }
          for (int rep = 0; rep < t.exp[j]; ++rep) prod = vw.mul(prod, x);
        }
        if (!dead) coef[t.tdeg] = vw.add(coef[t.tdeg], prod);
      }
      if (vw.is_zero(coef[0]) && vw.is_zero(coef[1]) && vw.is_zero(coef[2]) &&
          vw.is_zero(coef[3]))
        total += Q;  // the whole fiber lies on X
      else
        total += uint64_t(kernel_distinct_root_count(vw, coef, 3));
      int j = m - 1;
      for (; j > pivot; --j) {
        if (++idx[size_t(j)] < Q) {
          vals[size_t(j)] = vw.from_index(idx[size_t(j)]);
          break;
        }
        idx[size_t(j)] = 0;
        vals[size_t(j)] = vw.zero();
      }
      if (j == pivot) break;
    }
  }
  return total;
}

// Restriction of the form to the line spanned by rows a, b: the coefficients
// of g(u,v) = f(ua + vb), ordered by v-degree. Containment is g == 0.
template <class V>
void lines_kernel(const V& vw, const CubicForm& X, std::vector<ProjLine>& out) {
  using E = typename V::E;
  const int m = X.nvars();
  std::vector<FlatTerm<V>> terms;
  for (const auto& [e, c] : X.terms) {
    FlatTerm<V> t;
    t.c = vw.from_elem(c);
    for (int i = 0; i < m; ++i)
      if (e[size_t(i)]) {
        t.var[t.nv] = uint8_t(i);
        t.exp[t.nv] = e[size_t(i)];
        ++t.nv;
      }
    terms.push_back(t);
  }
  const uint64_t Q = vw.q();
  const size_t sm = size_t(m);
  std::vector<E> a(sm), b(sm);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      // free entries of the echelon form with pivots at columns i and j
      std::vector<std::pair<int, int>> slot;  // (row, column)
      for (int t = i + 1; t < m; ++t)
        if (t != j) slot.emplace_back(0, t);
      for (int t = j + 1; t < m; ++t) slot.emplace_back(1, t);
      const int nf = int(slot.size());
      for (int t = 0; t < m; ++t) a[size_t(t)] = b[size_t(t)] = vw.zero();
      a[size_t(i)] = vw.one();
      b[size_t(j)] = vw.one();
      std::vector<uint64_t> idx(size_t(nf), 0);
      while (true) {
        E g[4] = {vw.zero(), vw.zero(), vw.zero(), vw.zero()};
        for (const auto& t : terms) {
          E poly[4] = {t.c, vw.zero(), vw.zero(), vw.zero()};
          int d = 0;
          for (int v = 0; v < t.nv; ++v) {
            const E av = a[t.var[v]], bv = b[t.var[v]];
            for (int rep = 0; rep < t.exp[v]; ++rep) {
              E nxt[4];
              nxt[d + 1] = vw.mul(bv, poly[d]);
              for (int s = d; s >= 1; --s)
                nxt[s] = vw.add(vw.mul(av, poly[s]), vw.mul(bv, poly[s - 1]));
              nxt[0] = vw.mul(av, poly[0]);
              ++d;
              for (int s = 0; s <= d; ++s) poly[s] = nxt[s];
            }
          }
          for (int s = 0; s <= 3; ++s) g[s] = vw.add(g[s], poly[s]);
        }
        if (vw.is_zero(g[0]) && vw.is_zero(g[1]) && vw.is_zero(g[2]) && vw.is_zero(g[3])) {
          ProjLine L;
          L.row1.resize(size_t(m));
          L.row2.resize(size_t(m));
          for (int t = 0; t < m; ++t) {
            L.row1[size_t(t)] = vw.to_elem(a[size_t(t)]);
            L.row2[size_t(t)] = vw.to_elem(b[size_t(t)]);
          }
          out.push_back(std::move(L));
        }
        int s = nf - 1;
        for (; s >= 0; --s) {
          E val;
          if (++idx[size_t(s)] < Q) {
            val = vw.from_index(idx[size_t(s)]);
          } else {
            idx[size_t(s)] = 0;
            val = vw.zero();
          }
          (slot[size_t(s)].first == 0 ? a : b)[size_t(slot[size_t(s)].second)] = val;
          if (idx[size_t(s)] != 0) break;
        }
        if (s < 0) break;
      }
    }
}

void gen_monomials(int m, int pos, int left, ExpVec& cur, std::vector<ExpVec>& out) {
  if (pos == m - 1) {
    cur[size_t(pos)] = uint8_t(left);
    out.push_back(cur);
    return;
  }
  for (int t = left; t >= 0; --t) {
    cur[size_t(pos)] = uint8_t(t);
    gen_monomials(m, pos + 1, left - t, cur, out);
  }
}

std::vector<ExpVec> monomials_of_degree(int m, int deg) {
  std::vector<ExpVec> out;
  ExpVec cur(size_t(m), 0);
  gen_monomials(m, 0, deg, cur, out);
  return out;
}

struct GradedForm {
  std::vector<std::pair<ExpVec, gf::Elem>> terms;
  int deg;
};

// The form and, away from characteristic 3, its Euler-redundant self are the
// generators whose degree-t multiples must span all of S_t.
std::vector<GradedForm> jacobian_forms(const CubicForm& X) {
  const gf::Field& F = X.field;
  const int m = X.nvars();
  std::vector<GradedForm> forms;
  for (int v = 0; v < m; ++v) {
    GradedForm g;
    g.deg = 2;
    for (const auto& [e, c] : X.terms)
      if (e[size_t(v)]) {
        gf::Elem cc = F.mul(c, F.from_int(e[size_t(v)]));
        if (cc != F.zero()) {
          ExpVec e2 = e;
          --e2[size_t(v)];
          g.terms.emplace_back(std::move(e2), cc);
        }
      }
    forms.push_back(std::move(g));
  }
  if (F.p() == 3) forms.push_back(GradedForm{X.terms, 3});
  return forms;
}

// Field-backed view for rank computations over fields too large for the flat
// enumeration codes. Same surface as the gf views, minus enumeration.
struct FieldView {
  const gf::Field* F;
  using E = gf::Elem;
  E zero() const { return F->zero(); }
  bool is_zero(const E& a) const { return a == F->zero(); }
  E add(const E& a, const E& b) const { return F->add(a, b); }
  E sub(const E& a, const E& b) const { return F->sub(a, b); }
  E mul(const E& a, const E& b) const { return F->mul(a, b); }
  E inv(const E& a) const { return F->inv(a); }
  E from_elem(const E& a) const { return a; }
};

template <class V>
bool macaulay_full_rank(const V& vw, const std::vector<GradedForm>& forms, int m, int t) {
  using E = typename V::E;
  const std::vector<ExpVec> mons = monomials_of_degree(m, t);
  const int dim = int(mons.size());
  std::map<ExpVec, int> mindex;
  for (int i = 0; i < dim; ++i) mindex.emplace(mons[size_t(i)], i);
  const size_t sdim = size_t(dim);
  std::vector<std::vector<E>> piv(sdim);
  int rank = 0;
  std::vector<E> row;
  for (const GradedForm& g : forms) {
    if (g.terms.empty()) continue;
    for (const ExpVec& mu : monomials_of_degree(m, t - g.deg)) {
      row.assign(size_t(dim), vw.zero());
      for (const auto& [e, c] : g.terms) {
        ExpVec s = e;
        for (int i = 0; i < m; ++i) s[size_t(i)] = uint8_t(s[size_t(i)] + mu[size_t(i)]);
        const int pos = mindex.at(s);
        row[size_t(pos)] = vw.add(row[size_t(pos)], vw.from_elem(c));
      }
      for (int i = 0; i < dim; ++i) {
        if (vw.is_zero(row[size_t(i)])) continue;
        if (piv[size_t(i)].empty()) {
          const E il = vw.inv(row[size_t(i)]);
          for (int j = i; j < dim; ++j) row[size_t(j)] = vw.mul(row[size_t(j)], il);
          piv[size_t(i)] = row;
          ++rank;
          break;
        }
        const E f0 = row[size_t(i)];
        const std::vector<E>& pv = piv[size_t(i)];
        for (int j = i; j < dim; ++j)
          row[size_t(j)] = vw.sub(row[size_t(j)], vw.mul(f0, pv[size_t(j)]));
      }
      if (rank == dim) return true;
    }
  }
  return false;
}

// Kernel basis of a square matrix over F, columns of free variables set to 1.
std::vector<std::vector<gf::Elem>> kernel_basis(const gf::Field& F,
                                                std::vector<std::vector<gf::Elem>> M) {
  const int L = int(M.size());
  std::vector<int> pivot_of_row;
  int prow = 0;
  for (int col = 0; col < L && prow < L; ++col) {
    int sel = -1;
    for (int r2 = prow; r2 < L; ++r2)
      if (M[size_t(r2)][size_t(col)] != F.zero()) {
        sel = r2;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[size_t(prow)], M[size_t(sel)]);
    const gf::Elem il = F.inv(M[size_t(prow)][size_t(col)]);
    for (int j = col; j < L; ++j)
      M[size_t(prow)][size_t(j)] = F.mul(M[size_t(prow)][size_t(j)], il);
    for (int r2 = 0; r2 < L; ++r2) {
      if (r2 == prow) continue;
      const gf::Elem f0 = M[size_t(r2)][size_t(col)];
      if (f0 == F.zero()) continue;
      for (int j = col; j < L; ++j)
        M[size_t(r2)][size_t(j)] =
            F.sub(M[size_t(r2)][size_t(j)], F.mul(f0, M[size_t(prow)][size_t(j)]));
    }
    pivot_of_row.push_back(col);
    ++prow;
  }
  std::vector<bool> is_pivot(size_t(L), false);
  for (int c : pivot_of_row) is_pivot[size_t(c)] = true;
  std::vector<std::vector<gf::Elem>> basis;
  for (int col = 0; col < L; ++col) {
    if (is_pivot[size_t(col)]) continue;
    std::vector<gf::Elem> v(size_t(L), F.zero());
    v[size_t(col)] = F.one();
    for (int r2 = 0; r2 < prow; ++r2)
      v[size_t(pivot_of_row[size_t(r2)])] = F.neg(M[size_t(r2)][size_t(col)]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Tangent cone analysis in the affine chart around a singular point P with
// leading coordinate 1: quadratic part Q and cubic part C of f(P + y).
SingType classify_singular_point(const CubicForm& X, const std::vector<gf::Elem>& P) {
  const gf::Field& F = X.field;
  const int m = X.nvars();
  int h = 0;
  while (h < m && P[size_t(h)] == F.zero()) ++h;
  std::vector<int> loc(size_t(m), -1);  // global index -> chart index
  {
    int t = 0;
    for (int i = 0; i < m; ++i)
      if (i != h) loc[size_t(i)] = t++;
  }
  const int L = m - 1;
  std::vector<std::vector<gf::Elem>> qc(size_t(L), std::vector<gf::Elem>(size_t(L), F.zero()));
  std::vector<std::pair<std::array<int, 3>, gf::Elem>> cub;
  static const int binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  for (const auto& [e, c] : X.terms) {
    // expand prod over i != h of (P_i + y_i)^{e_i}; the chart variable
    // contributes P_h^{e_h} = 1
    std::vector<std::pair<std::vector<int>, gf::Elem>> parts{{{}, c}};
    for (int i = 0; i < m; ++i) {
      if (i == h || e[size_t(i)] == 0) continue;
      const int ei = e[size_t(i)];
      std::vector<std::pair<std::vector<int>, gf::Elem>> next;
      for (const auto& [ys, coef] : parts)
        for (int t = 0; t <= ei; ++t) {
          gf::Elem cc = F.mul(coef, F.from_int(binom[ei][t]));
          if (cc == F.zero()) continue;
          for (int rep = 0; rep < ei - t; ++rep) cc = F.mul(cc, P[size_t(i)]);
          if (cc == F.zero()) continue;
          std::vector<int> ys2 = ys;
          for (int rep = 0; rep < t; ++rep) ys2.push_back(loc[size_t(i)]);
          next.emplace_back(std::move(ys2), cc);
        }
      parts = std::move(next);
    }
    for (auto& [ys, coef] : parts) {
      std::sort(ys.begin(), ys.end());
      if (ys.size() == 2)
        qc[size_t(ys[0])][size_t(ys[1])] = F.add(qc[size_t(ys[0])][size_t(ys[1])], coef);
      else if (ys.size() == 3)
        cub.emplace_back(std::array<int, 3>{ys[0], ys[1], ys[2]}, coef);
    }
  }
  std::vector<std::vector<gf::Elem>> M(size_t(L), std::vector<gf::Elem>(size_t(L), F.zero()));
  for (int s = 0; s < L; ++s) {
    M[size_t(s)][size_t(s)] = F.mul(F.from_int(2), qc[size_t(s)][size_t(s)]);
    for (int b = 0; b < L; ++b)
      if (b != s) M[size_t(s)][size_t(b)] = qc[size_t(std::min(s, b))][size_t(std::max(s, b))];
  }
  const auto ker = kernel_basis(F, std::move(M));
  if (ker.empty()) return SingType::A1;
  if (ker.size() > 1) return SingType::other;
  const std::vector<gf::Elem>& dir = ker[0];
  gf::Elem Qv = F.zero();
  for (int a2 = 0; a2 < L; ++a2)
    for (int b2 = a2; b2 < L; ++b2)
      Qv = F.add(Qv, F.mul(qc[size_t(a2)][size_t(b2)],
                           F.mul(dir[size_t(a2)], dir[size_t(b2)])));
  if (Qv != F.zero()) {
    // in characteristic 2 a corank-one quadric with Q nonzero on the kernel
    // direction is smooth; elsewhere Q vanishes on the kernel automatically
    return F.p() == 2 ? SingType::A1 : SingType::other;
  }
  gf::Elem Cv = F.zero();
  for (const auto& [ix, coef] : cub)
    Cv = F.add(Cv, F.mul(coef, F.mul(dir[size_t(ix[0])],
                                     F.mul(dir[size_t(ix[1])], dir[size_t(ix[2])]))));
  return Cv != F.zero() ? SingType::A2 : SingType::other;
}

}  // namespace

Int count_points(const CubicForm& X, int r, uint64_t fiber_budget) {
  if (r < 1) throw std::invalid_argument("count_points needs r >= 1");
  const CubicForm Xr = base_change(X, r);
  const Int fibers = proj_space_size(Xr.field.q(), X.n);
  if (fibers > Int(fiber_budget)) throw std::domain_error("fiber budget exceeded");
  const uint64_t cnt =
      with_view(Xr.field, [&](const auto& vw) { return fibered_count_kernel(vw, Xr); });
  return Int(cnt);
}

ProjLine line_from_span(const gf::Field& F, const std::vector<gf::Elem>& a,
                        const std::vector<gf::Elem>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("line span needs two vectors of equal length >= 2");
  const int m = int(a.size());
  std::vector<std::vector<gf::Elem>> rows{a, b};
  int prow = 0;
  std::vector<int> pivcol;
  for (int col = 0; col < m && prow < 2; ++col) {
    int sel = -1;
    for (int r2 = prow; r2 < 2; ++r2)
      if (rows[size_t(r2)][size_t(col)] != F.zero()) {
        sel = r2;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[size_t(prow)], rows[size_t(sel)]);
    const gf::Elem il = F.inv(rows[size_t(prow)][size_t(col)]);
    for (int j = col; j < m; ++j)
      rows[size_t(prow)][size_t(j)] = F.mul(rows[size_t(prow)][size_t(j)], il);
    const int other = 1 - prow;
    const gf::Elem f0 = rows[size_t(other)][size_t(col)];
    if (f0 != F.zero())
      for (int j = col; j < m; ++j)
        rows[size_t(other)][size_t(j)] =
            F.sub(rows[size_t(other)][size_t(j)], F.mul(f0, rows[size_t(prow)][size_t(j)]));
    pivcol.push_back(col);
    ++prow;
  }
  if (prow != 2) throw std::invalid_argument("vectors do not span a line");
  return ProjLine{rows[0], rows[1]};
}

std::vector<ProjLine> enumerate_lines(const CubicForm& X, int k, uint64_t line_budget) {
  if (k < 1) throw std::invalid_argument("enumerate_lines needs k >= 1");
  const CubicForm Xk = base_change(X, k);
  const int m = Xk.nvars();
  const Int Q = Xk.field.q();
  Int total = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      total += int_pow(Q, (unsigned long)(2 * m - i - j - 3));
  if (total > Int(line_budget)) throw std::domain_error("line enumeration budget exceeded");
  std::vector<ProjLine> out;
  with_view(Xk.field, [&](const auto& vw) { lines_kernel(vw, Xk, out); });
  return out;
}

bool is_smooth(const CubicForm& X) {
  const std::vector<GradedForm> forms = jacobian_forms(X);
  const int m = X.nvars();
  const int t = X.field.p() == 3 ? X.n + 4 : X.n + 3;
  if (X.field.q_fits_u64())
    return with_view(X.field,
                     [&](const auto& vw) { return macaulay_full_rank(vw, forms, m, t); });
  return macaulay_full_rank(FieldView{&X.field}, forms, m, t);
}

SingularityReport singular_locus(const CubicForm& X, int max_degree, uint64_t point_budget) {
  if (max_degree < 1) throw std::invalid_argument("singular_locus needs max_degree >= 1");
  SingularityReport rep;
  if (is_smooth(X)) {
    rep.searched_up_to = max_degree;
    return rep;
  }
  const Int q = X.field.q();
  for (int k = 1; k <= max_degree; ++k) {
    const Int npts = proj_space_size(int_pow(q, (unsigned long)k), X.n + 1);
    if (npts > Int(point_budget)) break;
    const CubicForm Xk = base_change(X, k);
    const gf::Field& E = Xk.field;
    const int m = Xk.nvars();
    const uint64_t Qk = E.q64();
    std::vector<GradedForm> grads = jacobian_forms(Xk);
    if (E.p() == 3) grads.pop_back();  // gradient only; f is evaluated separately
    // proper subfields correspond to maximal proper divisors of k
    std::vector<Int> frob_pows;
    for (int d = 2; d <= k; ++d)
      if (k % d == 0 && is_prime_u64(uint64_t(d)))
        frob_pows.push_back(int_pow(q, (unsigned long)(k / d)));
    std::vector<gf::Elem> pt(size_t(m), E.zero());
    std::vector<uint64_t> idx(size_t(m), 0);
    for (int pivot = 0; pivot < m; ++pivot) {
      for (int i = 0; i < m; ++i) {
        pt[size_t(i)] = E.zero();
        idx[size_t(i)] = 0;
      }
      pt[size_t(pivot)] = E.one();
      while (true) {
        bool sing = eval_cubic(Xk, pt) == E.zero();
        if (sing)
          for (const GradedForm& g : grads) {
            gf::Elem acc = E.zero();
            for (const auto& [e, c] : g.terms) {
              gf::Elem tv = c;
              for (size_t i = 0; i < e.size(); ++i)
                for (int rep = 0; rep < e[i]; ++rep) tv = E.mul(tv, pt[i]);
              acc = E.add(acc, tv);
            }
            if (acc != E.zero()) {
              sing = false;
              break;
            }
          }
        if (sing) {
          bool minimal = true;
          for (const Int& fp : frob_pows) {
            bool fixed = true;
            for (int i = 0; i < m && fixed; ++i)
              fixed = E.pow(pt[size_t(i)], fp) == pt[size_t(i)];
            if (fixed) {
              minimal = false;
              break;
            }
          }
          if (minimal) {
            const SingType ty = classify_singular_point(Xk, pt);
            if (ty == SingType::A1 && X.field.p() == 2) rep.char2_node_convention = true;
            rep.points.push_back(SingularPoint{k, ProjPoint{pt}, ty});
          }
        }
        int j = m - 1;
        for (; j > pivot; --j) {
          if (++idx[size_t(j)] < Qk) {
            pt[size_t(j)] = E.from_index(idx[size_t(j)]);
            break;
          }
          idx[size_t(j)] = 0;
          pt[size_t(j)] = E.zero();
        }
        if (j == pivot) break;
      }
    }
    rep.searched_up_to = k;
  }
  return rep;
}

Int lines_via_gs(const std::map<int, Int>& N, const std::map<int, Int>& Nsing,
                 const Int& q, int n, int r) {
  if (n < 2 || r < 1) throw std::invalid_argument("lines_via_gs needs n >= 2, r >= 1");
  auto get = [](const std::map<int, Int>& mp, int key, const char* what) -> const Int& {
    auto it = mp.find(key);
    if (it == mp.end())
      throw std::invalid_argument(std::string("lines_via_gs: missing entry ") + what);
    return it->second;
  };
  const Int& Nr = get(N, r, "N_r");
  const Int& N2r = get(N, 2 * r, "N_{2r}");
  const Int& Sr = get(Nsing, r, "Nsing_r");
  const Int num = Nr * Nr - 2 * (1 + int_pow(q, (unsigned long)n * r)) * Nr + N2r;
  const Int den = 2 * int_pow(q, (unsigned long)(2 * r));
  const Int quo = num / den;
  if (quo * den != num)
    throw std::domain_error("lines_via_gs: point counts fail the exact divisibility");
  return quo + int_pow(q, (unsigned long)(n - 2) * r) * Sr;
}

}  // namespace cubiczeta
