#include "doctest.h"
#include "pnc/parse.hpp"

using namespace pnc;

static Form F(const std::string& s) {
  ParseContext c;
  return parse_form(s, c);
}
static PolyMat G(const std::string& s) {
  ParseContext c;
  return parse_germ(s, c);
}

TEST_CASE("parse and print") {
  Form f = F("x*y*z + y^3 + z^3");
  CHECK(f.degree() == 3);
  CHECK(f.str() == "x*y*z+y^3+z^3");
  CHECK(F("(y^2-x*z)^2-y^3*z").str() == "x^2*z^2-2*x*y^2*z+y^4-y^3*z");
  CHECK_THROWS_AS(F("x^2+y"), ParseError);
  CHECK_THROWS_AS(F("x+$"), ParseError);
  ParseContext c;
  Form r = parse_form("adjoin rho: rho^2+rho+1=0\ny^2-(rho+2)*x*z", c);
  CHECK(r.str(&c.names) == "(-rho-2)*x*z+y^2");
}

TEST_CASE("substitute and dominant part") {
  Form f = F("x*y*z+y^3+z^3");
  auto E = substitute(f, G("diag(1,t,t^2)"));
  CHECK(E.coeffs.at({1, 1, 1}) == UniPoly::monomial(Alg(1), 3));
  CHECK(E.coeffs.at({0, 3, 0}) == UniPoly::monomial(Alg(1), 3));
  CHECK(E.coeffs.at({0, 0, 3}) == UniPoly::monomial(Alg(1), 6));
  auto [o, L] = dominant_part(E);
  CHECK(o == 3);
  CHECK(L.proportional(F("y*(y^2+x*z)")));
  auto [o2, L2] = dominant_part(substitute(f, G("diag(1,t^2,t)")));
  CHECK(o2 == 3);
  CHECK(L2.proportional(F("z*(z^2+x*y)")));
  auto [o3, L3] = dominant_part(substitute(f, G("diag(1,1,1)")));
  CHECK(o3 == 0);
  CHECK(L3 == f);
  // xz with rows (1,0,0),(t,t^2,0),(0,0,t): x^2 coefficient 0, xz gains t
  auto E4 = substitute(F("x*z"), G("[[1,0,0],[t,t^2,0],[0,0,t]]"));
  CHECK(E4.coeffs.count({2, 0, 0}) == 0);
  CHECK(E4.coeffs.at({1, 0, 1}) == UniPoly::monomial(Alg(1), 1));
}

TEST_CASE("substitution is multiplicative") {
  Form a = F("x^2+3*y*z-z^2"), b = F("x-2*y+5*z");
  PolyMat M = G("[[1,t,0],[t^2,1-t,3],[0,t,t^3+1]]");
  auto Eab = substitute(a * b, M), Ea = substitute(a, M), Eb = substitute(b, M);
  auto [oa, la] = dominant_part(Ea);
  auto [ob, lb] = dominant_part(Eb);
  auto [oab, lab] = dominant_part(Eab);
  CHECK(oab == oa + ob);
  CHECK(lab == la * lb);
}

TEST_CASE("factorization") {
  auto f1 = factor(F("x*y*z+y^3+z^3"));
  CHECK(f1.factors.size() == 1);
  CHECK(f1.factors[0].second == 1);
  auto f2 = factor(F("(y+z)*(x*y^2+x*y*z+x*z^2+y^2*z+y*z^2)"));
  REQUIRE(f2.factors.size() == 2);
  CHECK(f2.factors[0].second == 1);
  CHECK(f2.factors[1].second == 1);
  CHECK(f2.expand() == F("(y+z)*(x*y^2+x*y*z+x*z^2+y^2*z+y*z^2)"));
  ParseContext c;
  Form g = parse_form("adjoin rho: rho^2+rho+1=0\ny^2*(y^2-(rho+2)*x*z)", c);
  auto f3 = factor(g);
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.factors[0].first == F("y"));
  CHECK(f3.factors[0].second == 2);
  CHECK(f3.expand() == g);
  // absolutely reducible over Q-irreducible
  auto f4 = factor(F("x*(y^2+y*z+z^2)"));
  CHECK(f4.factors.size() == 3);
  CHECK(f4.expand() == F("x*(y^2+y*z+z^2)"));
  auto f5 = factor(F("(y^2-x*z+x^2)*(y^2-x*z-x^2)"));
  CHECK(f5.factors.size() == 2);
  auto f6 = factor(F("x^2*(8*y^2-9*x*z)"));
  REQUIRE(f6.factors.size() == 2);
  CHECK(f6.factors[1].first.field() == nullptr);
  auto f7 = factor(F("y^3-2*x^3"));
  CHECK(f7.factors.size() == 3);
  CHECK(f7.expand() == F("y^3-2*x^3"));
}

TEST_CASE("implicit series") {
  // z = y + z^2 -> catalan numbers
  BiPoly f{{{1, 0}, Alg(1)}, {{0, 1}, Alg(-1)}, {{0, 2}, Alg(1)}};
  auto z = implicit_series(f, 6);
  CHECK(z[1] == Alg(1));
  CHECK(z[2] == Alg(1));
  CHECK(z[3] == Alg(2));
  CHECK(z[4] == Alg(5));
  CHECK(z[5] == Alg(14));
}
