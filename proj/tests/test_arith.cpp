#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "pnc/factor.hpp"

using namespace pnc;

static UniPoly P(std::vector<long> c) {
  std::vector<Alg> v;
  for (long x : c) v.push_back(Alg(x));
  return UniPoly(v);
}

TEST_CASE("adjoin linear factor keeps the tower") {
  auto [F, r] = adjoin_root(nullptr, P({-3, 1}));
  CHECK(F == nullptr);
  CHECK(r == Alg(3));
}

TEST_CASE("cube root of unity") {
  auto [F, rho] = adjoin_root(nullptr, P({1, 1, 1}));
  REQUIRE(F);
  CHECK(rho * rho == -rho - Alg(1));
  CHECK(rho.pow(3) == Alg(1));
  CHECK(rho * rho + rho + Alg(1) == Alg(0));
  CHECK(rho != rho * rho);
  CHECK(rho * rho.inverse() == Alg(1));
}

TEST_CASE("sqrt2 sqrt3 tower") {
  auto [F1, s2] = adjoin_root(nullptr, P({-2, 0, 1}));
  auto [F2, s3] = adjoin_root(F1, P({-3, 0, 1}));
  CHECK(field_height(F2) == 2);
  CHECK((s2 * s3).pow(2) == Alg(6));
  CHECK(s2 * s2 == Alg(2));
  Alg x = s2 + s3 + Alg(1);
  CHECK(x * x.inverse() == Alg(1));
  CHECK(x * s2 == s2 * x);
  // w^2-2 splits over Q(sqrt2)
  CHECK(factor_over(P({-2, 0, 1}), F1).size() == 2);
  CHECK(is_irreducible_over(F2->minpoly.empty() ? P({}) : UniPoly(F2->minpoly), F1));
}

TEST_CASE("roots in closure") {
  auto r = roots_in_closure(P({1, 1, 1}), nullptr);
  REQUIRE(r.roots.size() == 2);
  for (auto& [x, m] : r.roots) {
    CHECK(m == 1);
    CHECK(x * x + x + Alg(1) == Alg(0));
  }
  auto r2 = roots_in_closure(P({-1, 3, -3, 1}), nullptr);
  REQUIRE(r2.roots.size() == 1);
  CHECK(r2.roots[0].first == Alg(1));
  CHECK(r2.roots[0].second == 3);
  auto r3 = roots_in_closure(P({-2, 0, 0, 1}), nullptr);
  REQUIRE(r3.roots.size() == 3);
  CHECK(field_height(r3.field) == 2);
  for (auto& [x, m] : r3.roots) CHECK(x.pow(3) == Alg(2));
  CHECK(r3.roots[0].first != r3.roots[1].first);
}

TEST_CASE("zassenhaus over Q") {
  // (x^2+1)(x^3-x-1)(x-2)^2 (x^4+1)
  UniPoly f = P({1, 0, 1}) * P({-1, -1, 0, 1}) * P({-2, 1}).pow(2) * P({1, 0, 0, 0, 1});
  auto fl = factor_over(f, nullptr);
  REQUIRE(fl.size() == 4);
  UniPoly prod(Alg(1));
  for (auto& [g, m] : fl) prod *= g.pow(m);
  CHECK(prod == f.monic());
  // Swinnerton-Dyer style: x^4-10x^2+1 irreducible though it splits mod every p
  CHECK(factor_over(P({1, 0, -10, 0, 1}), nullptr).size() == 1);
  // over Q(sqrt2) it splits into two quadratics, over Q(sqrt2,sqrt3) fully
  auto [F1, s2] = adjoin_root(nullptr, P({-2, 0, 1}));
  CHECK(factor_over(P({1, 0, -10, 0, 1}), F1).size() == 2);
}

TEST_CASE("resultant and interpolation") {
  CHECK(resultant(P({-1, 0, 1}), P({-2, 1})) == Alg(3));
  std::vector<Alg> xs{Alg(0), Alg(1), Alg(2)}, ys{Alg(1), Alg(2), Alg(5)};
  CHECK(interpolate(xs, ys) == P({1, 0, 1}));
}
