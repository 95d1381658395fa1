#include "pnc/limits.hpp"

#include <map>

namespace pnc {

LimitCurve apply_germ(const Form& F, const Germ& g) {
  auto [v, f] = dominant_part(substitute(F, g.mat()));
  LimitCurve L;
  L.form = f.normalized();
  L.order = v;
  L.germ = g.str();
  L.curve = F.str();
  return L;
}

Germ SpecialGerm::germ() const {
  PolyMat m = const_polymat(identity3());
  m[1][0] = UniPoly::monomial(Alg(1), a);
  m[1][1] = UniPoly::monomial(Alg(1), b);
  m[2][0] = r;
  m[2][1] = s * UniPoly::monomial(Alg(1), b);
  m[2][2] = UniPoly::monomial(Alg(1), c);
  return Germ(m);
}

SpecialGerm as_special(const Germ& g) {
  auto mono = [](const UniPoly& p) {
    if (p.is_zero() || p.valuation() != p.degree() || !p.lc().is_one()) return -1;
    return p.degree();
  };
  const auto& m = g.mat();
  SpecialGerm s;
  bool ok = m[0][0] == UniPoly(Alg(1)) && m[0][1].is_zero() && m[0][2].is_zero() && m[1][2].is_zero();
  s.a = mono(m[1][0]), s.b = mono(m[1][1]), s.c = mono(m[2][2]);
  ok = ok && s.a > 0 && s.b > s.a && s.c >= s.b;
  if (ok && m[2][1].valuation() < s.b && !m[2][1].is_zero()) ok = false;
  if (!ok) throw DomainError("germ is not of the special lower-triangular shape");
  s.r = m[2][0];
  s.s = m[2][1].shifted_down(s.b);
  return s;
}

namespace {

Rational binom(const Rational& l, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) r = r * (l - i) / (i + 1);
  return r;
}

}  // namespace

Form branch_limit(const PuiseuxBranch& br, const SpecialGerm& g) {
  const int a = g.a, b = g.b, c = g.c;
  // coefficient map: t-exponent -> polynomial in (y, z) as {(j,k) -> coeff}
  std::map<Rational, std::map<std::pair<int, int>, Alg>> T;
  auto add = [&](const Rational& e, int j, int k, const Alg& v) {
    if (e > c || v.is_zero()) return;
    T[e][{j, k}] += v;
  };
  if (br.swapped) {
    // y = g(z): q dominates when a is below the valuation of g(r + ...)
    int vr = g.r.is_zero() ? b : std::min(g.r.valuation(), b);
    if (!br.terms.empty() && Rational(a) >= br.leading_exp() * vr)
      throw DomainError("swapped branch not dominated by the kernel line");
    Form x(1);
    x.add({1, 0, 0}, Alg(1));
    return x;
  }
  if (!br.exact && br.order * a < c) throw PrecisionError("branch truncation order too small for this germ");
  for (int n = 0; n <= g.r.degree(); ++n) add(n, 0, 0, g.r.coeff(n));
  for (int n = 0; n <= g.s.degree(); ++n) add(n + b, 1, 0, g.s.coeff(n));
  add(c, 0, 1, Alg(1));
  for (auto& t : br.terms) {
    for (int j = 0;; ++j) {
      Rational e = t.exp * a + j * (b - a);
      if (e > c) break;
      add(e, j, 0, -t.coeff * Alg(binom(t.exp, j)));
      if (t.exp.get_den() == 1 && t.exp >= 0 && j >= t.exp.get_num().get_si()) break;
    }
  }
  for (auto& [e, poly] : T) {
    std::map<std::pair<int, int>, Alg> nz;
    for (auto& [jk, v] : poly)
      if (!v.is_zero()) nz[jk] = v;
    if (nz.empty()) continue;
    if (!br.exact && e > br.order * a) throw PrecisionError("branch truncation order too small for this germ");
    int d = 1;
    for (auto& [jk, v] : nz) d = std::max(d, jk.first + jk.second);
    Form f(d);
    for (auto& [jk, v] : nz) f.add({d - jk.first - jk.second, jk.first, jk.second}, v);
    return f.normalized();
  }
  throw InvariantError("branch limit vanished");
}

Form branch_product(const std::vector<PuiseuxBranch>& brs, const SpecialGerm& g, int d) {
  BiPoly p{{{0, 0}, Alg(1)}};
  for (auto& b : brs) p = bimul(p, dehomogenize_x(branch_limit(b, g)));
  return homogenize_x(p, d).normalized();
}

bool is_kernel_star(const Form& L, const Germ& g) {
  if (g.center_rank() != 1) throw DomainError("kernel star test needs a rank-1 center");
  Vec3 v = g.kernel_line();
  // vertex P: sum P_i dL/dx_i == 0 and v.P = 0
  Form d[3] = {L.diff(0), L.diff(1), L.diff(2)};
  std::map<Exp, std::vector<Alg>, ExpOrder> eq;
  for (int i = 0; i < 3; ++i)
    for (auto& [e, c] : d[i].terms()) {
      auto& row = eq[e];
      row.resize(3);
      row[i] += c;
    }
  std::vector<std::vector<Alg>> rows;
  for (auto& [e, row] : eq) rows.push_back(row);
  rows.push_back({v[0], v[1], v[2]});
  return !nullspace(rows, 3).empty();
}

}  // namespace pnc
