// one PASS/FAIL line per acceptance criterion
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "pnc/parse.hpp"
#include "pnc/pnc.hpp"

using namespace pnc;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream why;
  void expect(bool c, const std::string& what) {
    if (!c) {
      if (ok) why << what;
      ok = false;
    }
  }
};

Form F(const std::string& s, ParseContext& c) { return parse_form(s, c); }
Form F(const std::string& s) {
  ParseContext c;
  return parse_form(s, c);
}
Germ G(const std::string& s, ParseContext& c) { return Germ(parse_germ(s, c)); }
Vec3 P(long a, long b, long c) { return {Alg(a), Alg(b), Alg(c)}; }

int count(const PNCResult& r, MarkerType t) {
  int n = 0;
  for (auto& c : r.components) n += c.type == t;
  return n;
}

// a type-IV component at p carrying two representatives
bool merged_at(const PNCResult& r, const Vec3& p) {
  for (auto& c : r.components)
    if (c.type == MarkerType::IV && proportional(c.rep().point, p) && c.reps.size() == 2) return true;
  return false;
}

void criterion1(Check& ck) {
  ParseContext c;
  Form f = F("x*y*z+y^3+z^3", c);
  const char* germs[3][2] = {{"[[-2,-t,0],[1,t,0],[1,0,t^2]]", "x*(x*z+2*y^2)"},
                             {"[[1,0,0],[0,t,0],[0,0,t^2]]", "y*(y^2+x*z)"},
                             {"[[1,0,0],[0,t^2,0],[0,0,t]]", "z*(z^2+x*y)"}};
  for (auto& g : germs) ck.expect(apply_germ(f, G(g[0], c)).form.proportional(F(g[1], c)), std::string("limit ") + g[1]);
  auto r = enumerate_components(PlaneCurve(f));
  ck.expect(r.components.size() == 5 && count(r, MarkerType::II) == 1 && count(r, MarkerType::IV) == 4, "counts");
  ck.expect(merged_at(r, P(1, 0, 0)), "node merge");
}

void criterion2(Check& ck) {
  ParseContext c;
  Form f = F("adjoin r: r^2+r+1=0; (y+z)*(x*y^2+x*y*z+x*z^2+y^2*z+y*z^2)", c);
  const char* germs[8][2] = {{"[[1,0,0],[0,1,0],[0,-1,t]]", "x*y^2*z"},
                             {"[[2,0,0],[-3,t,0],[6,0,t^2]]", "x^2*(8*y^2-9*x*z)"},
                             {"[[1,0,0],[0,t,0],[0,0,t]]", "x*(y+z)*(y^2+y*z+z^2)"},
                             {"[[t,0,0],[0,1,0],[-t,0,t^3]]", "y*(y^2*z+x^3)"},
                             {"[[t,0,0],[-t,t^3,0],[0,0,1]]", "z*(y*z^2+x^3)"},
                             {"[[t,0,0],[0,1,0],[t,-1,t^3]]", "x*(y^2*z-x^3)"},
                             {"[[1,0,0],[0,r*t,0],[0,t,t^2]]", "y^2*(y^2-(r+2)*x*z)"},
                             {"[[1,0,0],[0,r^2*t,0],[0,t,t^2]]", "y^2*(y^2-(r^2+2)*x*z)"}};
  for (auto& g : germs) ck.expect(apply_germ(f, G(g[0], c)).form.proportional(F(g[1], c)), std::string("limit ") + g[1]);
  auto r = enumerate_components(PlaneCurve(f));
  ck.expect(count(r, MarkerType::I) == 1 && count(r, MarkerType::II) == 1 && count(r, MarkerType::III) == 1 &&
                count(r, MarkerType::IV) == 4 && count(r, MarkerType::V) == 0,
            "counts");
  ck.expect(merged_at(r, P(1, 0, 0)), "rho merge");
}

void criterion3(Check& ck) {
  PlaneCurve c2(F("(y^2-x*z)^2-y^3*z"));
  Flag fl{P(1, 0, 0), P(0, 0, 1)};
  auto br = puiseux_branches(c2, fl, Rational(0));
  auto ch = characteristics(br);
  ck.expect(ch.size() == 1, "one characteristic");
  if (ch.size() != 1) return;
  auto& d = ch[0];
  bool gam = d.gamma_C.size() == 2 && ((d.gamma_C[0] == Alg(1) && d.gamma_C[1] == Alg(-1)) ||
                                       (d.gamma_C[0] == Alg(-1) && d.gamma_C[1] == Alg(1)));
  ck.expect(d.lambda0 == 2 && d.C == Rational(5, 2) && d.S() == 2 && gam, "characteristic data");
  TypeVGerm tv = marker_type_V(c2, fl, d);
  ck.expect(tv.local.str() == "[[1,0,0],[t^4,t^5,0],[t^8,2*t^9,t^10]]", "type V rows");
  ck.expect(apply_germ(c2.form(), tv.germ).form.proportional(F("(y^2-x*z+x^2)*(y^2-x*z-x^2)")), "type V limit");
  auto r = enumerate_components(c2);
  ck.expect(count(r, MarkerType::II) == 1 && count(r, MarkerType::IV) == 2 && count(r, MarkerType::V) == 1 &&
                r.components.size() == 4,
            "counts");
  bool dropped = false;
  for (auto& x : r.dropped)
    dropped = dropped || (x.cand.type == MarkerType::IV && x.cand.b == 1 && x.cand.c == 2 &&
                          proportional(x.cand.point, P(1, 0, 0)) && x.reason == "double-conic");
  ck.expect(dropped, "double-conic drop");
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(unsigned long s) : g(s) {}
  int operator()(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }
};

// curve singular at p: random local form of order m in point-frame coordinates
void criterion4(Check& ck) {
  Rng rng(20240601);
  Form x = Form::var(0), y = Form::var(1), z = Form::var(2);
  int sides_checked = 0;
  for (int it = 0; it < 50; ++it) {
    int d = rng(3, 5), m = rng(2, std::min(d, 4));
    Vec3 p{Alg(rng(0, 1)), Alg(rng(-2, 2)), Alg(1)};
    if (rng(0, 3) == 0) p = Vec3{Alg(1), Alg(rng(-2, 2)), Alg(rng(-2, 2))};
    Mat3 N = point_frame(p);
    // tangent cone: z^e times rational lines
    int e = rng(1, m);
    Form Fm = z.pow(e);
    for (int i = e; i < m; ++i) Fm = Fm * (y * Alg(rng(1, 3)) + z * Alg(rng(-3, 3)));
    Form Gl = x.pow(d - m) * Fm;
    for (int j = 0; j <= d; ++j)
      for (int k = 0; j + k <= d; ++k) {
        if (j + k <= m || rng(0, 2) == 0) continue;
        Gl += Form::monomial(Alg(rng(-3, 3)), Exp{d - j - k, j, k});
      }
    Form f = Gl.compose(inverse(N));
    if (f.is_zero()) continue;
    Form Fm_check(d);
    Form loc = f.compose(N);
    for (auto& [ex, c] : loc.terms())
      if (ex[1] + ex[2] == m) Fm_check.add(ex, c);
    Form lim = apply_germ(f, diag_germ(0, 1, 1).left(N)).form;
    ck.expect(lim.proportional(Fm_check) && lim.proportional(x.pow(d - m) * Fm),
              "tangent cone oracle at curve " + std::to_string(it));
    TangentCone tc = tangent_cone(f, p);
    for (auto& [l, mu] : tc.lines) {
      Flag fl{normalized(p), l};
      NewtonPolygon np = newton_polygon(f, fl);
      if (!np.usable) continue;
      for (auto& s : relevant_sides(np)) {
        Form a = apply_germ(f, diag_germ(0, s.b, s.c).left(flag_frame(fl))).form;
        ck.expect(a.proportional(side_limit_form(f, fl, s)), "side oracle at curve " + std::to_string(it));
        ++sides_checked;
      }
    }
  }
  ck.expect(sides_checked >= 20, "too few sides exercised");
  ck.why << (ck.ok ? "" : " ") << "(" << sides_checked << " sides)";
}

void criterion5(Check& ck) {
  Rng rng(777);
  struct Item {
    Form f;
    Flag fl;
  };
  std::vector<Item> curves = {
      {F("(y^2-x*z)^2-y^3*z"), {P(1, 0, 0), P(0, 0, 1)}},
      {F("x*y*z+y^3+z^3"), {P(1, 0, 0), P(0, 0, 1)}},
      {F("(y+z)*(x*y^2+x*y*z+x*z^2+y^2*z+y*z^2)"), {P(1, 0, 0), P(0, 1, 1)}},
      {F("x*z^3-y^4+x*y^3"), {P(1, 0, 0), P(0, 0, 1)}},
      {F("(x*z-y^2)*(x*z-y^2+y*z)+y^3*z+z^4"), {P(1, 0, 0), P(0, 0, 1)}},
      {F("x^2*z^3-x*y^4+y^5+y^2*z^3"), {P(1, 0, 0), P(0, 0, 1)}},
      {F("y*z*(x*z-y^2)+z^4"), {P(1, 0, 0), P(0, 0, 1)}},
  };
  int pairs = 0;
  for (int it = 0; pairs < 20 && it < 200; ++it) {
    auto& cv = curves[it % curves.size()];
    int a = rng(1, 3), b = a + rng(1, 3), c = b + rng(0, 4);
    SpecialGerm sg;
    sg.a = a, sg.b = b, sg.c = c;
    for (int n = a + 1; n < c; ++n)
      if (rng(0, 2) == 0) sg.r += UniPoly::monomial(Alg(rng(-2, 2)), n);
    for (int n = 1; n < c - b; ++n)
      if (rng(0, 2) == 0) sg.s += UniPoly::monomial(Alg(rng(-2, 2)), n);
    PlaneCurve C(cv.f);
    Mat3 N = flag_frame(cv.fl);
    auto br = puiseux_branches(C, cv.fl, Rational(c, a) + 1);
    Form lhs = apply_germ(cv.f, sg.germ().left(N)).form;
    Form rhs = branch_product(br, sg, cv.f.degree());
    ck.expect(lhs.proportional(rhs), "pair " + std::to_string(pairs));
    ++pairs;
  }
  ck.expect(pairs == 20, "pairs");
}

void criterion6(Check& ck) {
  Rng rng(4242);
  std::vector<Form> curves = {F("x*y*z+y^3+z^3"), F("(y^2-x*z)^2-y^3*z"), F("y^2*z-x^3-x*z^2")};
  int done = 0;
  for (int it = 0; done < 100 && it < 1000; ++it) {
    auto tri = [&](bool lower) {
      PolyMat m = const_polymat(identity3());
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (lower ? i > j : i < j)
            m[i][j] = UniPoly(std::vector<Alg>{Alg(rng(-2, 2)), Alg(rng(-2, 2)), Alg(rng(0, 2) == 0 ? rng(-1, 1) : 0)});
      return Germ(m, false);
    };
    auto cst = [&]() {
      Mat3 A;
      do
        for (auto& row : A)
          for (auto& e : row) e = Alg(rng(-2, 2));
      while (det(A).is_zero());
      return A;
    };
    int b = rng(1, 3), c = b + rng(0, 3);
    Germ a = (tri(true) * tri(false)).left(cst()) * diag_germ(0, b, c) * (tri(false) * tri(true)).right(cst());
    int deg = 0;
    for (auto& row : a.mat())
      for (auto& e : row) deg = std::max(deg, e.degree());
    if (deg > 6) continue;
    ++done;
    StandardForm s = normalize_germ(a);
    bool bounds = s.b <= s.c && s.q.degree() < s.b && s.r.degree() < s.c && s.s.degree() < s.c - s.b &&
                  s.q.coeff(0).is_zero() && s.r.coeff(0).is_zero() && s.s.coeff(0).is_zero() &&
                  (s.b != s.c || s.s.is_zero());
    if (s.b == s.c && !s.q.is_zero() && !s.r.is_zero()) bounds = bounds && s.q.valuation() < s.r.valuation();
    if (!s.q.is_zero()) bounds = bounds && s.q == UniPoly::monomial(Alg(1), s.q.valuation());
    ck.expect(bounds, "degree bounds at germ " + std::to_string(done));
    Germ beta = s.reconstruct();
    for (auto& f : curves) ck.expect(germ_equivalent_limits(a, beta, f), "limit mismatch at germ " + std::to_string(done));
  }
  ck.expect(done == 100, "germ count");
}

void criterion7(Check& ck) {
  const char* reps[13] = {"",
                          "x^2",
                          "x*y",
                          "x*y*(x+y)",
                          "x*y*z",
                          "x*y*(x+y)*z",
                          "y^2-x*z",
                          "x*(y^2-x*z)",
                          "x*z*(y^2-x*z)",
                          "y*(y^2-x*z)",
                          "(y^2+x*z)*(y^2+2*x*z)",
                          "y^3+x^2*z",
                          "(y^2-x*z+x^2)*(y^2-x*z-x^2)"};
  std::cout << "  item  dim  label                         representative\n";
  for (int i = 1; i <= 12; ++i) {
    SmallOrbitClass c = classify_limit(F(reps[i]));
    std::string lbl = item_label(i);
    lbl.resize(30, ' ');
    std::cout << "  " << (i < 10 ? " " : "") << i << "    " << item_dimension(i) << "    " << lbl << reps[i]
              << (c.item == i ? "" : "  <- misclassified") << "\n";
    ck.expect(c.item == i && c.dim == item_dimension(i), std::string("item ") + std::to_string(i));
  }
  ck.expect(specializes_to(7, 3) && !specializes_to(7, 6), "poset");
}

}  // namespace

int main() {
  std::vector<std::tuple<int, double, std::function<void(Check&)>>> crits = {
      {1, 10, criterion1}, {2, 60, criterion2},  {3, 60, criterion3}, {4, 300, criterion4},
      {5, 300, criterion5}, {6, 300, criterion6}, {7, 60, criterion7}};
  int fails = 0;
  for (auto& [n, budget, fn] : crits) {
    Check ck;
    auto t0 = Clock::now();
    try {
      fn(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    ck.expect(secs < budget, "over time budget");
    std::cout << "criterion " << n << ": " << (ck.ok ? "PASS" : "FAIL") << " (" << secs << " s)";
    std::string w = ck.why.str();
    if (!w.empty()) std::cout << " " << w;
    std::cout << std::endl;
    fails += !ck.ok;
  }
  return fails ? 1 : 0;
}
