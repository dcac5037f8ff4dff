#include "cubiczeta/geometry.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace cubiczeta {

CubicForm make_cubic(int n, const gf::Field& F,
                     const std::vector<std::pair<ExpVec, gf::Elem>>& terms) {
  if (n < 1) throw std::invalid_argument("cubic form needs n >= 1");
  const size_t m = size_t(n) + 2;
  std::map<ExpVec, gf::Elem> merged;
  for (const auto& [e, c] : terms) {
    if (e.size() != m) throw std::invalid_argument("exponent vector has wrong length");
    int deg = 0;
    for (uint8_t x : e) deg += x;
    if (deg != 3) throw std::invalid_argument("monomial degree is not 3");
    auto it = merged.find(e);
    if (it == merged.end())
      merged.emplace(e, c);
    else
      it->second = F.add(it->second, c);
  }
  CubicForm X;
  X.n = n;
  X.field = F;
  for (const auto& [e, c] : merged)
    if (c != F.zero()) X.terms.emplace_back(e, c);
  if (X.terms.empty()) throw std::invalid_argument("cubic form has no nonzero terms");
  return X;
}

CubicForm parse_cubic_text(const gf::Field& F, const std::string& text) {
  std::vector<std::pair<ExpVec, gf::Elem>> terms;
  int nvars = -1;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    gf::Elem c = F.parse(tok);
    ExpVec e;
    long v;
    while (ls >> v) {
      if (v < 0 || v > 3) throw std::invalid_argument("exponent out of range");
      e.push_back(uint8_t(v));
    }
    if (!ls.eof()) throw std::invalid_argument("malformed term line: " + line);
    if (nvars < 0) nvars = int(e.size());
    if (int(e.size()) != nvars)
      throw std::invalid_argument("inconsistent variable count across terms");
    terms.emplace_back(std::move(e), c);
  }
  if (nvars < 0) throw std::invalid_argument("no terms in cubic description");
  return make_cubic(nvars - 2, F, terms);
}

std::string cubic_to_text(const CubicForm& X) {
  std::ostringstream out;
  for (const auto& [e, c] : X.terms) {
    out << X.field.format(c);
    for (uint8_t x : e) out << ' ' << int(x);
    out << '\n';
  }
  return out.str();
}

CubicForm base_change(const CubicForm& X, int k) {
  if (k < 1) throw std::invalid_argument("base change needs k >= 1");
  if (k == 1) return X;
  CubicForm Y;
  Y.n = X.n;
  Y.field = gf::Field::create(X.field.p(), X.field.degree() * unsigned(k));
  gf::Embedding emb(X.field, Y.field);
  for (const auto& [e, c] : X.terms) Y.terms.emplace_back(e, emb(c));
  return Y;
}

ProjPoint normalize_point(const gf::Field& F, std::vector<gf::Elem> v) {
  size_t lead = v.size();
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != F.zero()) {
      lead = i;
      break;
    }
  if (lead == v.size()) throw std::invalid_argument("zero vector is not a projective point");
  gf::Elem s = F.inv(v[lead]);
  for (size_t i = lead; i < v.size(); ++i) v[i] = F.mul(v[i], s);
  return ProjPoint{std::move(v)};
}

gf::Elem eval_cubic(const CubicForm& X, const std::vector<gf::Elem>& x) {
  const gf::Field& F = X.field;
  if (x.size() != size_t(X.nvars())) throw std::invalid_argument("wrong coordinate count");
  gf::Elem acc = F.zero();
  for (const auto& [e, c] : X.terms) {
    gf::Elem t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int rep = 0; rep < e[i]; ++rep) t = F.mul(t, x[i]);
    acc = F.add(acc, t);
  }
  return acc;
}

}  // namespace cubiczeta
