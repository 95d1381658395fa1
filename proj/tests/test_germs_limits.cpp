#include <random>

#include "doctest.h"
#include "pnc/limits.hpp"
#include "pnc/parse.hpp"

using namespace pnc;

static Form F(const std::string& s) {
  ParseContext c;
  return parse_form(s, c);
}
static Germ G(const std::string& s) {
  ParseContext c;
  return Germ(parse_germ(s, c));
}
static Vec3 P(long a, long b, long c) { return {Alg(a), Alg(b), Alg(c)}; }

TEST_CASE("exone limits along the printed germs") {
  Form f = F("x*y*z+y^3+z^3");
  CHECK(apply_germ(f, G("[[-2,-t,0],[1,t,0],[1,0,t^2]]")).form.proportional(F("x*(x*z+2*y^2)")));
  CHECK(apply_germ(f, G("diag(1,t,t^2)")).form.proportional(F("y*(y^2+x*z)")));
  CHECK(apply_germ(f, G("diag(1,t^2,t)")).form.proportional(F("z*(z^2+x*y)")));
  CHECK_FALSE(germ_equivalent_limits(G("diag(1,t,t^2)"), G("diag(1,t^2,t)"), f));
  Germ a = G("[[1,t,0],[t^2,t,0],[0,t^3,t^2+t]]");
  CHECK(germ_equivalent_limits(a, a.reparam(UniPoly(std::vector<Alg>{0, 1, 1})), f));
}

TEST_CASE("marker constructors") {
  PlaneCurve exone(F("x*y*z+y^3+z^3"));
  auto gp = general_point(exone, exone.nonlinear_components()[0].first);
  CHECK(proportional(gp.p, P(-2, 1, 1)));
  Germ g2 = marker_type_II(exone, gp.p);
  CHECK(g2.center_rank() == 1);
  // x^(d-2)(y^2+rho*x*z) in flag coordinates, projectively x(xz+2y^2)
  Form l2 = apply_germ(exone.form(), g2).form;
  CHECK(l2.terms().size() == 2);
  CHECK(!l2.coeff({2, 0, 1}).is_zero());
  CHECK(!l2.coeff({1, 2, 0}).is_zero());
  CHECK_THROWS_AS(marker_type_II(exone, P(1, 0, 0)), DomainError);
  CHECK_THROWS_AS(marker_type_III(exone, P(1, 0, 0)), DomainError);

  PlaneCurve c1(F("(y+z)*(x*y^2+x*y*z+x*z^2+y^2*z+y*z^2)"));
  Germ g1 = marker_type_I(c1, P(0, 1, 1));
  CHECK(g1.str() == "[[1,0,0],[0,1,0],[0,-1,t]]");
  CHECK(g1.center_rank() == 2);
  CHECK(apply_germ(c1.form(), g1).form.proportional(F("x*y^2*z")));
  CHECK_THROWS_AS(marker_type_I(c1, P(1, 0, 0)), DomainError);
  Germ g3 = marker_type_III(c1, P(1, 0, 0));
  CHECK(apply_germ(c1.form(), g3).form.proportional(F("x*(y+z)*(y^2+y*z+z^2)")));

  Flag fl{P(1, 0, 0), P(0, 0, 1)};
  auto sides = relevant_sides(newton_polygon(exone.form(), fl));
  REQUIRE(sides.size() == 1);
  Germ g4 = marker_type_IV(exone, fl, sides[0]);
  CHECK(apply_germ(exone.form(), g4).form.proportional(F("y*(y^2+x*z)")));
  CHECK(g4.kernel_line() == P(1, 0, 0));
}

TEST_CASE("type V germ of C2") {
  PlaneCurve c2(F("(y^2-x*z)^2-y^3*z"));
  Flag fl{P(1, 0, 0), P(0, 0, 1)};
  auto br = puiseux_branches(c2, fl, Rational(0));
  auto ch = characteristics(br);
  REQUIRE(ch.size() == 1);
  TypeVGerm tv = marker_type_V(c2, fl, ch[0]);
  CHECK(tv.a == 4);
  CHECK(tv.b == 5);
  CHECK(tv.c == 10);
  CHECK(tv.local.str() == "[[1,0,0],[t^4,t^5,0],[t^8,2*t^9,t^10]]");
  LimitCurve L = apply_germ(c2.form(), tv.germ);
  CHECK(L.form.proportional(F("(y^2-x*z+x^2)*(y^2-x*z-x^2)")));
  CHECK_FALSE(is_kernel_star(L.form, tv.germ));
  // branch product law
  SpecialGerm sg = as_special(tv.local);
  CHECK(branch_product(br, sg, 4).proportional(L.form));
  CharacteristicDatum bad = ch[0];
  bad.gamma_C = {Alg(1), Alg(1)};
  CHECK_THROWS_AS(marker_type_V(c2, fl, bad), DomainError);
}

TEST_CASE("branch limits of the C2 branches") {
  SpecialGerm g{4, 5, 10, UniPoly::monomial(Alg(1), 8), UniPoly::monomial(Alg(2), 4)};
  PuiseuxBranch b;
  b.terms = {{Rational(2), Alg(1)}, {Rational(5, 2), Alg(1)}};
  b.exact = true;
  CHECK(branch_limit(b, g).proportional(F("y^2-x*z+x^2")));
  b.terms[1].coeff = Alg(-1);
  CHECK(branch_limit(b, g).proportional(F("y^2-x*z-x^2")));
  PuiseuxBranch tr;
  tr.terms = {{Rational(1), Alg(3)}};
  tr.exact = true;
  CHECK(branch_limit(tr, g).proportional(F("x")));
}

TEST_CASE("kernel stars") {
  Germ g = G("diag(1,t,t^2)");
  CHECK(is_kernel_star(F("x^3"), g));
  CHECK(is_kernel_star(F("x*y*(x+y)"), g));  // vertex (0:0:1) lies on x=0
  CHECK_FALSE(is_kernel_star(F("y*z*(y+z)"), g));  // vertex (1:0:0)
  CHECK_FALSE(is_kernel_star(F("y*(y^2+x*z)"), g));
  CHECK_THROWS_AS(is_kernel_star(F("x"), G("[[1,0,0],[0,1,0],[0,0,t]]")), DomainError);
}

TEST_CASE("normalize_germ") {
  auto s = normalize_germ(G("diag(1,t,t^2)"));
  CHECK(s.b == 1);
  CHECK(s.c == 2);
  CHECK(s.q.is_zero());
  CHECK(s.H == identity3());
  CHECK(s.M == identity3());
  s = normalize_germ(G("[[1,0,0],[t,1,0],[0,0,1]]*diag(1,t,t^2)"));
  CHECK(s.b == 1);
  CHECK(s.c == 2);
  s = normalize_germ(G("diag(1,t^2,t^4)"));
  CHECK(s.b == 1);
  CHECK(s.c == 2);
  CHECK(s.reduced == 2);
  Germ a = G("[[1,0,0],[t^2+t^3,1,0],[t^4,0,1]]*diag(1,t^3,t^7)");
  s = normalize_germ(a);
  CHECK(s.b == 3);
  CHECK(s.c == 7);
  CHECK(s.q == UniPoly::monomial(Alg(1), 2));
  Form f = F("x*y*z+y^3+z^3");
  Form g = F("(y^2-x*z)^2-y^3*z");
  CHECK(germ_equivalent_limits(a, s.reconstruct(), f));
  CHECK(germ_equivalent_limits(a, s.reconstruct(), g));
  s = normalize_germ(G("[[1,0,0],[0,t,0],[0,0,t]]*[[1,0,0],[t,1,0],[t+t^2,0,1]]"));
  CHECK(s.b == s.c);
  CHECK(s.s.is_zero());
}

TEST_CASE("normalize random sandwiches") {
  std::mt19937_64 rng(7);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Form curves[] = {F("x*y*z+y^3+z^3"), F("(y^2-x*z)^2-y^3*z"), F("y^2*z-x^3-x*z^2")};
  for (int it = 0; it < 15; ++it) {
    auto unimod = [&](bool lower) {
      PolyMat m = const_polymat(identity3());
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (lower ? i > j : i < j) m[i][j] = UniPoly(std::vector<Alg>{rnd(-2, 2), rnd(-2, 2)});
      return Germ(m, false);
    };
    int b = rnd(0, 3), c = b + rnd(0, 3);
    Germ a = unimod(true) * unimod(false) * diag_germ(0, b, c) * unimod(false) * unimod(true);
    auto s = normalize_germ(a);
    CHECK(s.q.degree() < s.b);
    CHECK(s.r.degree() < s.c);
    CHECK(s.s.degree() < s.c - s.b);
    for (auto& f : curves) CHECK(germ_equivalent_limits(a, s.reconstruct(), f));
  }
}
