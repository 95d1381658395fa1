#include "pnc/newton.hpp"

#include <algorithm>
#include <numeric>

namespace pnc {

NewtonPolygon newton_polygon(const BiPoly& f) {
  NewtonPolygon np;
  if (f.empty()) return np;
  std::vector<std::pair<int, int>> pts;
  for (auto& [e, c] : f) pts.push_back(e);
  std::sort(pts.begin(), pts.end());
  // lower hull, monotone chain
  std::vector<std::pair<int, int>> hull;
  auto crossz = [](std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
    return (long)(a.first - o.first) * (b.second - o.second) - (long)(a.second - o.second) * (b.first - o.first);
  };
  for (auto& p : pts) {
    while (hull.size() >= 2 && crossz(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  // keep the strictly descending part
  np.vertices.push_back(hull[0]);
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (hull[i].second >= np.vertices.back().second) break;
    np.vertices.push_back(hull[i]);
  }
  for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
    auto [j0, k0] = np.vertices[i];
    auto [j1, k1] = np.vertices[i + 1];
    int dj = j1 - j0, dk = k0 - k1;
    int g = std::gcd(dj, dk);
    np.sides.push_back({j0, k0, j1, k1, dk / g, dj / g, g});
  }
  return np;
}

NewtonPolygon newton_polygon(const Form& F, const Flag& flag) {
  BiPoly f = local_equation(F, flag_frame(flag));
  NewtonPolygon np = newton_polygon(f);
  // flag line z=0 lies in the tangent cone iff the leading form vanishes on it,
  // i.e. no pure y^m term of lowest order
  int m = local_order(f);
  np.usable = m > 0 && m != INT_MAX && !f.count({m, 0});
  return np;
}

std::vector<PolygonSide> relevant_sides(const NewtonPolygon& np) {
  std::vector<PolygonSide> out;
  for (auto& s : np.sides)
    if (s.b < s.c) out.push_back(s);
  return out;
}

Form side_limit_form(const Form& F, const Flag& flag, const PolygonSide& side) {
  Form G = F.compose(flag_frame(flag));
  long w = (long)side.b * side.j0 + (long)side.c * side.k0;
  Form out(F.degree());
  for (auto& [e, c] : G.terms())
    if ((long)side.b * e[1] + (long)side.c * e[2] == w) out.add(e, c);
  return out;
}

}  // namespace pnc
