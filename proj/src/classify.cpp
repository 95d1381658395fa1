#include "pnc/classify.hpp"

#include <map>
#include <set>

#include "pnc/curve.hpp"
#include "pnc/factor.hpp"

namespace pnc {

namespace {

const int kDims[13] = {-1, 2, 4, 5, 6, 7, 5, 6, 7, 7, 7, 7, 7};
const char* kLabels[13] = {"large orbit",
                           "single line",
                           "two lines",
                           "star",
                           "triangle",
                           "fan",
                           "conic",
                           "conic and tangent line",
                           "conic and two tangent lines",
                           "conic and transversal line",
                           "bitangent conics",
                           "cuspidal pencil",
                           "quadritangent conics"};

// arrows of the specialization diagram (orbit dimension drops along each)
const std::map<int, std::vector<int>> kArrows = {
    {2, {1}},          {3, {2}},          {4, {3, 2}},          {5, {4, 3}},
    {6, {2, 1}},       {7, {3, 2, 1}},    {8, {7, 4, 3}},       {9, {7, 4, 3}},
    {10, {7, 4, 3}}, {11, {7, 4, 3, 2, 1}}, {12, {7, 6, 3}},
};

SmallOrbitClass make(int item, std::string params = "") {
  SmallOrbitClass c;
  c.item = item;
  c.dim = kDims[item];
  c.params = std::move(params);
  return c;
}

bool concurrent(const std::vector<Vec3>& ls) {
  std::vector<std::vector<Alg>> rows;
  for (auto& l : ls) rows.push_back({l[0], l[1], l[2]});
  return rank(rows, 3) <= 2;
}

Vec3 meet(const Vec3& a, const Vec3& b) { return cross(a, b); }

// points spanning the line l
std::pair<Vec3, Vec3> span(const Vec3& l) {
  auto ns = nullspace({{l[0], l[1], l[2]}}, 3);
  return {Vec3{ns[0][0], ns[0][1], ns[0][2]}, Vec3{ns[1][0], ns[1][1], ns[1][2]}};
}

// Q restricted to l as A s^2 + B s u + C u^2
struct Restriction {
  Alg A, B, C;
  Vec3 P1, P2;
};
Restriction restrict(const Form& Q, const Vec3& l) {
  auto [P1, P2] = span(l);
  Restriction r;
  r.P1 = P1, r.P2 = P2;
  r.A = Q.eval(P1);
  r.C = Q.eval(P2);
  Vec3 S{P1[0] + P2[0], P1[1] + P2[1], P1[2] + P2[2]};
  r.B = Q.eval(S) - r.A - r.C;
  return r;
}

// tangency point of l with the conic, if tangent
std::optional<Vec3> tangency(const Form& Q, const Vec3& l) {
  Restriction r = restrict(Q, l);
  if (!(r.B * r.B - Alg(4) * r.A * r.C).is_zero()) return std::nullopt;
  if (r.A.is_zero()) return normalized(r.P1);
  Vec3 p;
  for (int i = 0; i < 3; ++i) p[i] = -r.B * r.P1[i] + Alg(2) * r.A * r.P2[i];
  return normalized(p);
}

using Sym = std::array<std::array<Alg, 3>, 3>;
Sym conic_matrix(const Form& Q) {
  Sym m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exp e{0, 0, 0};
      e[i]++, e[j]++;
      m[i][j] = i == j ? Q.coeff(e) : Q.coeff(e) / Alg(2);
    }
  return m;
}

std::vector<Alg> conic_vec(const Form& Q) {
  std::vector<Alg> v;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Exp e{0, 0, 0};
      e[i]++, e[j]++;
      v.push_back(Q.coeff(e));
    }
  return v;
}

// rank-one member l^2 of the pencil spanned by Q1, Q2
std::optional<Vec3> double_line_member(const Form& Q1, const Form& Q2) {
  Sym a = conic_matrix(Q1), b = conic_matrix(Q2);
  // 2x2 minors of a + mu b as polynomials in mu
  UniPoly g;
  for (int i0 = 0; i0 < 3; ++i0)
    for (int i1 = i0 + 1; i1 < 3; ++i1)
      for (int j0 = 0; j0 < 3; ++j0)
        for (int j1 = j0 + 1; j1 < 3; ++j1) {
          auto ent = [&](int i, int j) { return UniPoly(std::vector<Alg>{a[i][j], b[i][j]}); };
          UniPoly m = ent(i0, j0) * ent(i1, j1) - ent(i0, j1) * ent(i1, j0);
          g = g.is_zero() ? m : (m.is_zero() ? g : gcd(g, m));
        }
  if (g.is_zero() || g.degree() != 1) return std::nullopt;
  Alg mu = -g.coeff(0) / g.coeff(1);
  for (int i = 0; i < 3; ++i) {
    Vec3 row{a[i][0] + mu * b[i][0], a[i][1] + mu * b[i][1], a[i][2] + mu * b[i][2]};
    if (!is_zero(row)) return normalized(row);
  }
  return std::nullopt;
}

SmallOrbitClass lines_only(const std::vector<Vec3>& ls) {
  int k = (int)ls.size();
  if (k == 1) return make(1);
  if (k == 2) return make(2);
  if (concurrent(ls)) return make(3, "lines=" + std::to_string(k));
  if (k == 3) return make(4);
  for (int i = 0; i < k; ++i) {
    std::vector<Vec3> rest;
    for (int j = 0; j < k; ++j)
      if (j != i) rest.push_back(ls[j]);
    if (concurrent(rest)) return make(5, "lines=" + std::to_string(k));
  }
  return SmallOrbitClass{};
}

SmallOrbitClass one_conic(const Form& Q, const std::vector<Vec3>& ls) {
  if (ls.empty()) return make(6);
  std::vector<Vec3> tang, trans;
  std::vector<Vec3> tpts;
  for (auto& l : ls) {
    auto t = tangency(Q, l);
    if (t)
      tang.push_back(l), tpts.push_back(*t);
    else
      trans.push_back(l);
  }
  if (trans.empty()) {
    if (tang.size() == 1) return make(7);
    if (tang.size() == 2) return make(8);
    return SmallOrbitClass{};
  }
  if (trans.size() != 1) return SmallOrbitClass{};
  for (auto& p : tpts)
    if (!dot(trans[0], p).is_zero()) return SmallOrbitClass{};
  return make(9, "tangents=" + std::to_string(tang.size()));
}

SmallOrbitClass conic_pencil(const std::vector<Form>& qs, const std::vector<Vec3>& ls) {
  std::vector<std::vector<Alg>> rows;
  for (auto& q : qs) rows.push_back(conic_vec(q));
  if (rank(rows, 6) != 2) return SmallOrbitClass{};
  auto l = double_line_member(qs[0], qs[1]);
  if (!l) return SmallOrbitClass{};
  std::string n = "conics=" + std::to_string(qs.size());
  if (tangency(qs[0], *l)) {
    for (auto& m : ls)
      if (!proportional(m, *l)) return SmallOrbitClass{};
    return make(12, n);
  }
  for (auto& m : ls) {
    if (proportional(m, *l)) continue;
    auto t = tangency(qs[0], m);
    if (!t || !dot(*l, *t).is_zero()) return SmallOrbitClass{};
  }
  return make(10, n);
}

// members of y^b + lambda z^a x^(b-a) in a frame found from the distinguished points
SmallOrbitClass cusp_pencil(const std::vector<Form>& gs, const std::vector<Vec3>& ls) {
  int b = gs[0].degree();
  for (auto& g : gs)
    if (g.degree() != b) return SmallOrbitClass{};
  PlaneCurve G(gs[0]);
  std::vector<Vec3> pts = singular_points(G);
  for (auto& p : inflection_points(G)) pts.push_back(p);
  auto single_tangent = [&](const Vec3& p) -> std::optional<Vec3> {
    TangentCone tc = tangent_cone(gs[0], p);
    if (tc.lines.size() != 1) return std::nullopt;
    return tc.lines[0].first;
  };
  for (auto& P : pts)
    for (auto& Q : pts) {
      if (proportional(P, Q)) continue;
      auto lz = single_tangent(P), lx = single_tangent(Q);
      if (!lz || !lx || proportional(*lz, *lx)) continue;
      Vec3 R = meet(*lx, *lz);
      Mat3 T;
      for (int i = 0; i < 3; ++i) T[i][0] = P[i], T[i][1] = R[i], T[i][2] = Q[i];
      if (det(T).is_zero()) continue;
      int a = -1;
      bool ok = true;
      for (auto& g : gs) {
        Form h = g.compose(T);
        if (h.terms().size() != 2 || h.coeff({0, b, 0}).is_zero()) {
          ok = false;
          break;
        }
        for (auto& [e, c] : h.terms()) {
          if (e[1] == b) continue;
          if (e[1] != 0 || e[2] < 1 || e[0] < 1 || (a >= 0 && e[2] != a)) ok = false;
          a = e[2];
        }
        if (!ok) break;
      }
      if (!ok) continue;
      // allowed lines are the frame lines x, y, z
      Mat3 Tt = transpose(T);
      for (auto& l : ls) {
        Vec3 m = mul(Tt, l);  // line in frame coordinates
        int nz = 0;
        for (auto& c : m) nz += !c.is_zero();
        if (nz != 1) ok = false;
      }
      if (ok) return make(11, "a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
  return SmallOrbitClass{};
}

}  // namespace

std::string SmallOrbitClass::id() const { return item ? "item_" + std::to_string(item) : "large-orbit"; }
std::string SmallOrbitClass::label() const { return kLabels[item]; }
int item_dimension(int item) { return kDims[item]; }
std::string item_label(int item) { return kLabels[item]; }

std::vector<int> direct_specializations(int item) {
  auto it = kArrows.find(item);
  return it == kArrows.end() ? std::vector<int>{} : it->second;
}

bool specializes_to(int from, int to) {
  if (from == to) return true;
  std::set<int> seen{from};
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : direct_specializations(u)) {
      if (v == to) return true;
      if (seen.insert(v).second) stack.push_back(v);
    }
  }
  return false;
}

SmallOrbitClass classify_limit(const Form& L) { return classify_limit(factor(L)); }

SmallOrbitClass classify_limit(const Factorization& f) {
  std::vector<Vec3> ls;
  std::vector<Form> conics, higher;
  for (auto& [g, m] : f.factors) {
    if (g.degree() == 1)
      ls.push_back(normalized(g.as_line()));
    else if (g.degree() == 2)
      conics.push_back(g);
    else
      higher.push_back(g);
  }
  if (!higher.empty()) return conics.empty() ? cusp_pencil(higher, ls) : SmallOrbitClass{};
  if (conics.empty()) return ls.empty() ? SmallOrbitClass{} : lines_only(ls);
  if (conics.size() == 1) return one_conic(conics[0], ls);
  return conic_pencil(conics, ls);
}

}  // namespace pnc
