#include "pnc/factor.hpp"

#include <algorithm>

namespace pnc {

namespace {

using detail::ZPoly;

FactorList factor_rational_sqf(const UniPoly& g) {
  Integer den = 1;
  for (auto& c : g.coeffs()) den = lcm(den, c.rational().get_den());
  ZPoly z;
  for (auto& c : g.coeffs()) z.push_back(Integer(c.rational() * den));
  FactorList out;
  for (auto& f : detail::zassenhaus(z)) {
    std::vector<Alg> v;
    for (auto& x : f) v.push_back(Alg(Rational(x)));
    out.push_back({UniPoly(v).monic(), 1});
  }
  return out;
}

Alg relative_norm(const Alg& b, const Field& K) {
  // N_{K/parent}(b) as the resultant of the minpoly and b's chunk polynomial
  Alg bl = b.lifted(K);
  std::size_t D = field_dim(K->parent);
  std::vector<Alg> ch;
  for (int i = 0; i < K->degree; ++i) {
    std::vector<Rational> v(bl.coeffs().begin() + i * D, bl.coeffs().begin() + (i + 1) * D);
    ch.push_back(Alg(K->parent, v));
  }
  return resultant(UniPoly(K->minpoly), UniPoly(ch));
}

FactorList factor_sqf(const UniPoly& g, const Field& K) {
  if (g.degree() <= 1) return {{g.monic(), 1}};
  if (!K) return factor_rational_sqf(g);
  Alg alpha = Alg::generator(K);
  int n = K->degree;
  int N = g.degree() * n;
  for (int k = 0; k < 40; ++k) {
    long s = (k + 1) / 2 * (k % 2 ? 1 : -1);
    UniPoly q = g.lifted(K).shift(Alg(-s) * alpha);
    std::vector<Alg> xs, ys;
    for (int i = 0; i <= N; ++i) {
      xs.push_back(Alg(i));
      ys.push_back(relative_norm(q.eval(Alg(i)), K));
    }
    UniPoly Nx = interpolate(xs, ys);
    if (gcd(Nx, Nx.derivative()).degree() > 0) continue;
    FactorList nf = factor_over(Nx, K->parent);
    if (nf.size() == 1) return {{g.monic(), 1}};
    FactorList out;
    for (auto& [ni, m] : nf) {
      UniPoly h = gcd(q, ni.lifted(K));
      out.push_back({h.shift(Alg(s) * alpha).monic(), 1});
    }
    return out;
  }
  throw InvariantError("no squarefree norm shift found");
}

bool factor_less(const std::pair<UniPoly, int>& a, const std::pair<UniPoly, int>& b) {
  int c = UniPoly::compare(a.first, b.first);
  if (c) return c < 0;
  return a.second < b.second;
}

}  // namespace

FactorList factor_over(const UniPoly& p, const Field& K) {
  if (p.degree() > limits().poly_degree_cap * 4)
    throw PrecisionError("polynomial degree " + std::to_string(p.degree()) + " exceeds factoring cap");
  FactorList out;
  for (auto& [g, m] : squarefree_decomposition(p))
    for (auto& [h, e] : factor_sqf(g, K)) out.push_back({h, m});
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

bool is_irreducible_over(const UniPoly& p, const Field& K) {
  auto f = factor_over(p, K);
  return f.size() == 1 && f[0].second == 1;
}

Field make_level(const Field& tower, const UniPoly& minpoly) {
  auto L = std::make_shared<TowerLevel>();
  L->parent = tower;
  L->height = field_height(tower) + 1;
  L->degree = minpoly.degree();
  L->dim = field_dim(tower) * L->degree;
  UniPoly m = minpoly.monic();
  for (auto& c : m.coeffs()) {
    L->minpoly.push_back(c.lifted(tower));
    L->raw.push_back(c.lifted(tower).coeffs());
  }
  return L;
}

std::pair<Field, Alg> adjoin_root(const Field& tower, const UniPoly& minpoly) {
  if (minpoly.degree() < 1) throw DomainError("adjoin_root needs a nonconstant polynomial");
  Field F = common_field(tower, minpoly.field());
  auto fl = factor_over(minpoly, F);
  const UniPoly& g = fl.front().first;
  if (g.degree() == 1) return {F, -g.coeff(0)};
  if (field_height(F) + 1 > limits().tower_height)
    throw PrecisionError("tower height limit " + std::to_string(limits().tower_height) + " exceeded");
  Field L = make_level(F, g);
  return {L, Alg::generator(L)};
}

RootList roots_in_closure(const UniPoly& p, const Field& tower) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  Field F = common_field(tower, p.field());
  std::vector<std::pair<Alg, int>> roots;
  FactorList pending = factor_over(p, F);
  while (true) {
    FactorList rest;
    for (auto& [g, m] : pending) {
      if (g.degree() == 1)
        roots.push_back({-g.coeff(0) / g.coeff(1), m});
      else
        rest.push_back({g, m});
    }
    if (rest.empty()) break;
    auto [F2, a] = adjoin_root(F, rest.front().first);
    F = F2;
    pending.clear();
    for (auto& [g, m] : rest)
      for (auto& [h, e] : factor_over(g, F)) pending.push_back({h, m * e});
  }
  for (auto& r : roots) r.first = r.first.lifted(F);
  std::sort(roots.begin(), roots.end(), [](auto& a, auto& b) { return Alg::compare(a.first, b.first) < 0; });
  return {F, roots};
}

}  // namespace pnc
