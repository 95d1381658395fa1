#include "doctest.h"
#include "pnc/newton.hpp"
#include "pnc/parse.hpp"
#include "pnc/puiseux.hpp"

using namespace pnc;

static Form F(const std::string& s) {
  ParseContext c;
  return parse_form(s, c);
}
static Vec3 P(long a, long b, long c) { return {Alg(a), Alg(b), Alg(c)}; }

TEST_CASE("newton polygon of the node") {
  Form f = F("x*y*z+y^3+z^3");
  auto np = newton_polygon(f, {P(1, 0, 0), P(0, 0, 1)});
  CHECK(np.usable);
  auto rs = relevant_sides(np);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].b == 1);
  CHECK(rs[0].c == 2);
  CHECK(rs[0].S == 1);
  CHECK(rs[0].j0 == 1);
  CHECK(rs[0].k0 == 1);
  Form L = side_limit_form(f, {P(1, 0, 0), P(0, 0, 1)}, rs[0]);
  CHECK(L.proportional(F("y*(y^2+x*z)")));
}

TEST_CASE("newton polygon of the C2 cusp and ramphoid cusp") {
  Form f = F("(y^2-x*z)^2-y^3*z");
  // ordinary cusp at (0:0:1) with tangent x=0
  Flag fl{P(0, 0, 1), P(1, 0, 0)};
  auto np = newton_polygon(f, fl);
  auto rs = relevant_sides(np);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].b == 2);
  CHECK(rs[0].c == 3);
  CHECK(rs[0].S == 1);
  auto np2 = newton_polygon(f, {P(1, 0, 0), P(0, 0, 1)});
  auto rs2 = relevant_sides(np2);
  REQUIRE(rs2.size() == 1);
  CHECK(rs2[0].b == 1);
  CHECK(rs2[0].c == 2);
  CHECK(rs2[0].S == 2);
  CHECK(side_limit_form(f, {P(1, 0, 0), P(0, 0, 1)}, rs2[0]).proportional(F("(y^2-x*z)^2")));
  // conic tangent flag: single side of slope -1/2
  auto np3 = newton_polygon(F("y^2-x*z"), {P(1, 0, 0), P(0, 0, 1)});
  REQUIRE(np3.sides.size() == 1);
  CHECK(np3.sides[0].b == 1);
  CHECK(np3.sides[0].c == 2);
  // a line through p has no relevant side
  CHECK(relevant_sides(newton_polygon(F("z"), {P(1, 0, 0), P(0, 0, 1)})).empty());
}

TEST_CASE("puiseux branches of C2") {
  PlaneCurve C(F("(y^2-x*z)^2-y^3*z"));
  auto br = puiseux_branches(C, {P(1, 0, 0), P(0, 0, 1)}, Rational(3));
  REQUIRE(br.size() == 2);
  for (auto& b : br) {
    CHECK(!b.swapped);
    CHECK(b.ramification == 2);
    CHECK(b.terms[0].exp == 2);
    CHECK(b.terms[0].coeff == Alg(1));
    CHECK(b.terms[1].exp == Rational(5, 2));
  }
  CHECK(br[0].terms[1].coeff == -br[1].terms[1].coeff);
  auto ch = characteristics(br);
  REQUIRE(ch.size() == 1);
  CHECK(ch[0].C == Rational(5, 2));
  CHECK(ch[0].S() == 2);
  CHECK(ch[0].lambda0 == 2);
  CHECK(ch[0].gamma0 == Alg(1));
  CHECK(ch[0].gamma_mid == Alg(0));
  CHECK(((ch[0].gamma_C[0] == Alg(1) && ch[0].gamma_C[1] == Alg(-1)) ||
         (ch[0].gamma_C[0] == Alg(-1) && ch[0].gamma_C[1] == Alg(1))));
}

TEST_CASE("puiseux simple cases") {
  PlaneCurve conic(F("z*x-y^2"));
  auto br = puiseux_branches(conic, {P(1, 0, 0), P(0, 0, 1)}, Rational(5));
  REQUIRE(br.size() == 1);
  CHECK(br[0].exact);
  REQUIRE(br[0].terms.size() == 1);
  CHECK(br[0].terms[0].exp == 2);
  PlaneCurve ex(F("x*y*z+y^3+z^3"));
  auto b2 = puiseux_branches(ex, {P(1, 0, 0), P(0, 0, 1)}, Rational(4));
  REQUIRE(b2.size() == 2);
  CHECK(!b2[0].swapped);
  CHECK(b2[0].terms[0].exp == 2);
  CHECK(b2[0].terms[0].coeff == Alg(-1));
  CHECK(b2[1].swapped);
  CHECK(characteristics(b2).empty());
  // non-reduced: duplicated branches give no characteristic
  PlaneCurve dbl(F("(z*x-y^2)^2"));
  auto b3 = puiseux_branches(dbl, {P(1, 0, 0), P(0, 0, 1)}, Rational(4));
  CHECK(b3.size() == 2);
  CHECK(characteristics(b3).empty());
}

TEST_CASE("branch count equals multiplicity") {
  const char* curves[] = {"(y+z)*(x*y^2+x*y*z+x*z^2+y^2*z+y*z^2)", "x*(y^3-x*z^2)+y^4", "y^2*z^2*x-y^5+x^2*z^3",
                          "x^2*y^3+z^5-x*y^4", "(y^2-x*z)^2-y^3*z"};
  for (auto s : curves) {
    PlaneCurve C(F(s));
    for (auto& p : singular_points(C)) {
      auto tc = tangent_cone(C.form(), p);
      Vec3 l = tc.lines[0].first;
      auto br = puiseux_branches(C, {p, l}, Rational(3));
      CHECK(br.size() == multiplicity(C.form(), p));
    }
  }
}
