#include "pnc/curve.hpp"

#include <algorithm>

#include "pnc/factor.hpp"

namespace pnc {

PlaneCurve::PlaneCurve(Form F) : F_(std::move(F)) {
  if (F_.is_zero()) throw DomainError("zero curve");
  fac_ = factor(F_);
  support_ = Form(Alg(1));
  for (auto& [g, m] : fac_.factors) support_ = support_ * g;
}

std::vector<Vec3> PlaneCurve::linear_components() const {
  std::vector<Vec3> out;
  for (auto& [g, m] : fac_.factors)
    if (g.degree() == 1) out.push_back(g.as_line());
  return out;
}

std::vector<std::pair<Form, int>> PlaneCurve::nonlinear_components() const {
  std::vector<std::pair<Form, int>> out;
  for (auto& [g, m] : fac_.factors)
    if (g.degree() > 1) out.push_back({g, m});
  return out;
}

static Vec3 unit(int i) {
  Vec3 v;
  v[i] = Alg(1);
  return v;
}

Mat3 flag_frame(const Flag& f) {
  Vec3 p = normalized(f.p);
  if (!dot(f.l, p).is_zero()) throw DomainError("flag line does not pass through the point");
  Vec3 q;
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i)
    if (dot(f.l, unit(i)).is_zero() && !proportional(unit(i), p)) q = unit(i), found = true;
  for (int i = 0; i < 3 && !found; ++i) {
    Vec3 c = cross(f.l, unit(i));
    if (!is_zero(c) && !proportional(c, p)) q = normalized(c), found = true;
  }
  Vec3 r;
  for (int i = 2; i >= 0; --i)
    if (!dot(f.l, unit(i)).is_zero()) {
      r = unit(i);
      break;
    }
  Mat3 N;
  for (int i = 0; i < 3; ++i) N[i][0] = p[i], N[i][1] = q[i], N[i][2] = r[i];
  return N;
}

Mat3 point_frame(const Vec3& p0) {
  Vec3 p = normalized(p0);
  int k = 0;
  while (p[k].is_zero()) ++k;
  Mat3 N;
  int col = 1;
  for (int i = 0; i < 3; ++i) {
    N[i][0] = p[i];
    if (i != k) N[i][col++] = Alg(1);
  }
  return N;
}

BiPoly local_equation(const Form& F, const Mat3& N) { return dehomogenize_x(F.compose(N)); }

int local_order(const BiPoly& f) {
  int m = INT_MAX;
  for (auto& [e, c] : f) m = std::min(m, e.first + e.second);
  return m;
}

int multiplicity(const Form& F, const Vec3& p) {
  if (!F.eval(p).is_zero()) return 0;
  return local_order(local_equation(F, point_frame(p)));
}

TangentCone tangent_cone(const Form& F, const Vec3& p) {
  Mat3 N = point_frame(p);
  BiPoly f = local_equation(F, N);
  int m = local_order(f);
  if (m == 0) throw DomainError("point not on curve");
  TangentCone tc;
  tc.m = m;
  tc.leading = Form(m);
  for (auto& [e, c] : f)
    if (e.first + e.second == m) tc.leading.add({0, e.first, e.second}, c);
  // lines a*y+b*z: roots of leading(w,1) plus z=0 for the missing degree
  std::vector<Alg> g(m + 1);
  for (auto& [e, c] : tc.leading.terms()) g[e[1]] = c;
  UniPoly gw(g);
  Mat3 NiT = transpose(inverse(N));
  Field fld = common_field(field_of(p), F.field());
  std::vector<std::pair<Vec3, int>> loc;
  if (gw.degree() > 0) {
    auto rl = roots_in_closure(gw, fld);
    fld = rl.field;
    for (auto& [w, mu] : rl.roots) loc.push_back({Vec3{Alg(0), Alg(1), -w}, mu});
  }
  if (gw.degree() < m) loc.push_back({Vec3{Alg(0), Alg(0), Alg(1)}, m - gw.degree()});
  for (auto& [l, mu] : loc) tc.lines.push_back({normalized(mul(NiT, l)), mu});
  tc.field = fld;
  return tc;
}

namespace {

// bivariate in (x,y) from F(x,y,1)
BiPoly chart_z(const Form& F) {
  BiPoly p;
  for (auto& [e, c] : F.terms()) p[{e[0], e[1]}] = c;
  return p;
}

UniPoly eval_x(const BiPoly& g, const Alg& x0) {
  int dy = 0;
  for (auto& [e, c] : g) dy = std::max(dy, e.second);
  std::vector<Alg> v(dy + 1);
  for (auto& [e, c] : g) v[e.second] += c * x0.pow(e.first);
  return UniPoly(v);
}

int ydeg(const BiPoly& g) {
  int dy = -1;
  for (auto& [e, c] : g) dy = std::max(dy, e.second);
  return dy;
}

std::vector<Vec3> common_roots_binary(const Form& G, const Form& H) {
  // points (w:1:0) and (1:0:0) of z=0 where both vanish
  std::vector<Vec3> out;
  auto bin = [](const Form& F) {
    std::vector<Alg> v(F.degree() + 1);
    for (auto& [e, c] : F.terms())
      if (e[2] == 0) v[e[0]] += c;
    return UniPoly(v);
  };
  UniPoly g = bin(G), h = bin(H);
  if (g.is_zero() && h.is_zero()) throw InvariantError("common component z=0");
  UniPoly u = g.is_zero() ? h : (h.is_zero() ? g : gcd(g, h));
  if (u.degree() > 0) {
    for (auto& [f, m] : factor_over(u, u.field())) {
      auto rl = roots_in_closure(f, f.field());
      for (auto& [w, mu] : rl.roots) out.push_back({w, Alg(1), Alg(0)});
    }
  }
  Vec3 e1{Alg(1), Alg(0), Alg(0)};
  if (G.eval(e1).is_zero() && H.eval(e1).is_zero()) out.push_back(e1);
  return out;
}

}  // namespace

std::vector<Vec3> solve_common(const Form& G0, const Form& H0) {
  std::vector<Mat3> frames;
  frames.push_back(identity3());
  {
    Mat3 P;  // cyclic permutation
    P[0][1] = P[1][2] = P[2][0] = Alg(1);
    frames.push_back(P);
    frames.push_back(mul(P, P));
    for (int a = 1; a <= 3; ++a) {
      Mat3 S = identity3();
      S[0][2] = Alg(a);
      S[1][2] = Alg(a + 1);
      frames.push_back(S);
    }
  }
  for (auto& T : frames) {
    Form G = G0.compose(T), H = H0.compose(T);
    BiPoly g = chart_z(G), h = chart_z(H);
    int B = G.degree() * H.degree();
    int dg = ydeg(g), dh = ydeg(h);
    std::vector<Alg> xs, ys;
    for (long x = 0; (int)xs.size() <= B && x < 10 * B + 50; ++x) {
      UniPoly gy = eval_x(g, Alg(x)), hy = eval_x(h, Alg(x));
      if (gy.degree() != dg || hy.degree() != dh) continue;
      xs.push_back(Alg(x));
      ys.push_back(resultant(gy, hy));
    }
    UniPoly R = interpolate(xs, ys);
    if (R.is_zero()) continue;
    std::vector<Vec3> out;
    if (R.degree() > 0) {
      for (auto& [f, m] : factor_over(R, R.field())) {
        auto rl = roots_in_closure(f, f.field());
        for (auto& [x0, mu] : rl.roots) {
          UniPoly gy = eval_x(g, x0), hy = eval_x(h, x0);
          if (gy.is_zero() && hy.is_zero()) throw InvariantError("common vertical component");
          UniPoly u = gy.is_zero() ? hy : (hy.is_zero() ? gy : gcd(gy, hy));
          if (u.degree() <= 0) continue;
          for (auto& [uf, um] : factor_over(u, rl.field)) {
            auto yl = roots_in_closure(uf, rl.field);
            for (auto& [y0, nu] : yl.roots) out.push_back(normalized(mul(T, Vec3{x0, y0, Alg(1)})));
          }
        }
      }
    }
    for (auto& p : common_roots_binary(G, H)) out.push_back(normalized(mul(T, p)));
    std::sort(out.begin(), out.end(), point_less);
    return out;
  }
  throw InvariantError("no elimination frame found (common component?)");
}

std::vector<Vec3> singular_points(const PlaneCurve& C) {
  const Form& G = C.support();
  if (G.degree() <= 1) return {};
  for (auto& v : std::vector<Vec3>{{Alg(0), Alg(0), Alg(1)}, {Alg(0), Alg(1), Alg(0)}, {Alg(1), Alg(0), Alg(0)},
                                   {Alg(1), Alg(1), Alg(1)}, {Alg(1), Alg(2), Alg(3)}, {Alg(2), Alg(-1), Alg(5)},
                                   {Alg(3), Alg(5), Alg(-2)}, {Alg(1), Alg(-3), Alg(7)}}) {
    if (G.eval(v).is_zero()) continue;
    int k = !v[2].is_zero() ? 2 : (!v[1].is_zero() ? 1 : 0);
    int a = k == 0 ? 1 : 0, b = k == 2 ? 1 : 2;
    Mat3 T;
    T[a][0] = Alg(1);
    T[b][1] = Alg(1);
    for (int i = 0; i < 3; ++i) T[i][2] = v[i];
    Form Gt = G.compose(T);
    Form Gx = Gt.diff(0), Gy = Gt.diff(1), Gz = Gt.diff(2);
    std::vector<Vec3> out;
    for (auto& p : solve_common(Gt, Gz))
      if (Gx.eval(p).is_zero() && Gy.eval(p).is_zero()) out.push_back(normalized(mul(T, p)));
    std::sort(out.begin(), out.end(), point_less);
    return out;
  }
  throw InvariantError("no point off the curve found");
}

std::vector<Vec3> inflection_points(const PlaneCurve& C) {
  Form G2(Alg(1));
  bool any = false;
  for (auto& [g, m] : C.nonlinear_components()) G2 = G2 * g, any = true;
  if (!any) return {};
  Form H = hessian(G2);
  const Form& S = C.support();
  Form Hs = hessian(S);
  Form Sx = S.diff(0), Sy = S.diff(1), Sz = S.diff(2);
  auto lines = C.linear_components();
  std::vector<Vec3> out;
  for (auto& p : solve_common(G2, H)) {
    if (Sx.eval(p).is_zero() && Sy.eval(p).is_zero() && Sz.eval(p).is_zero()) continue;
    if (!Hs.eval(p).is_zero()) continue;
    bool online = false;
    for (auto& l : lines)
      if (dot(l, p).is_zero()) online = true;
    if (!online) out.push_back(p);
  }
  return out;
}

bool point_less(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) {
    int c = Alg::compare(a[i], b[i]);
    if (c) return c > 0;
  }
  return false;
}

std::string point_str(const Vec3& p, Namer* names) {
  return "(" + to_string(p[0], names) + ":" + to_string(p[1], names) + ":" + to_string(p[2], names) + ")";
}

std::string line_str(const Vec3& l, Namer* names) { return Form::linear(l).str(names); }

}  // namespace pnc
