#include "doctest.h"
#include "pnc/curve.hpp"
#include "pnc/parse.hpp"

using namespace pnc;

static Form F(const std::string& s) {
  ParseContext c;
  return parse_form(s, c);
}
static Vec3 P(long a, long b, long c) { return {Alg(a), Alg(b), Alg(c)}; }

const char* kExone = "x*y*z+y^3+z^3";
const char* kC1 = "(y+z)*(x*y^2+x*y*z+x*z^2+y^2*z+y*z^2)";
const char* kC2 = "(y^2-x*z)^2-y^3*z";

TEST_CASE("multiplicity") {
  CHECK(multiplicity(F(kExone), P(1, 0, 0)) == 2);
  CHECK(multiplicity(F(kC1), P(1, 0, 0)) == 3);
  CHECK(multiplicity(F(kExone), P(1, 1, 1)) == 0);
  CHECK(multiplicity(F(kC2), P(0, 0, 1)) == 2);
}

TEST_CASE("tangent cones") {
  auto t1 = tangent_cone(F(kExone), P(1, 0, 0));
  CHECK(t1.m == 2);
  CHECK(t1.lines.size() == 2);
  auto t2 = tangent_cone(F(kC1), P(1, 0, 0));
  CHECK(t2.m == 3);
  CHECK(t2.lines.size() == 3);
  auto t3 = tangent_cone(F(kC2), P(1, 0, 0));
  CHECK(t3.m == 2);
  REQUIRE(t3.lines.size() == 1);
  CHECK(t3.lines[0].second == 2);
  CHECK(proportional(t3.lines[0].first, P(0, 0, 1)));
}

TEST_CASE("singular points") {
  PlaneCurve c2(F(kC2));
  auto s2 = singular_points(c2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == P(1, 0, 0));
  CHECK(s2[1] == P(0, 0, 1));
  CHECK(singular_points(PlaneCurve(F("y^2-x*z"))).empty());
  auto s1 = singular_points(PlaneCurve(F(kC1)));
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == P(1, 0, 0));
  CHECK(s1[1] == P(0, 1, -1));
  auto s0 = singular_points(PlaneCurve(F(kExone)));
  REQUIRE(s0.size() == 1);
}

TEST_CASE("inflection points") {
  CHECK(inflection_points(PlaneCurve(F(kExone))).size() == 3);
  auto f2 = inflection_points(PlaneCurve(F(kC2)));
  REQUIRE(f2.size() == 1);
  Vec3 q{Alg(135), Alg(-576), Alg(-4096)};
  CHECK(proportional(f2[0], q));
  CHECK(inflection_points(PlaneCurve(F("x"))).empty());
  auto f1 = inflection_points(PlaneCurve(F(kC1)));
  CHECK(f1.size() == 2);
}

TEST_CASE("flag frame") {
  Mat3 N = flag_frame({P(1, 0, 0), P(0, 1, 0)});
  Mat3 E;
  E[0][0] = Alg(1);
  E[2][1] = Alg(1);
  E[1][2] = Alg(1);
  CHECK(N[0][0] == Alg(1));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(N[i][j] == E[i][j]);
}
