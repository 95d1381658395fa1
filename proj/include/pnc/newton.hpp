#pragma once
#include <vector>

#include "pnc/curve.hpp"

namespace pnc {

struct PolygonSide {
  int j0, k0, j1, k1;  // j0 < j1, k0 > k1
  int b, c;            // slope -b/c, coprime
  int S;               // lattice segments
  Rational slope() const { return Rational(-b, c); }
};

struct NewtonPolygon {
  std::vector<std::pair<int, int>> vertices;
  std::vector<PolygonSide> sides;
  bool usable = true;  // false when the flag line is not in the tangent cone
};

NewtonPolygon newton_polygon(const BiPoly& f);
NewtonPolygon newton_polygon(const Form& F, const Flag& flag);
std::vector<PolygonSide> relevant_sides(const NewtonPolygon& np);
// F o N restricted to the monomials on the side, in flag coordinates
Form side_limit_form(const Form& F, const Flag& flag, const PolygonSide& side);

}  // namespace pnc
