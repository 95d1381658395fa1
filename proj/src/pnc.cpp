#include "pnc/pnc.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace pnc {

std::string type_name(MarkerType t) {
  static const char* n[] = {"", "I", "II", "III", "IV", "V"};
  return n[(int)t];
}

std::string Candidate::feature(Namer* names) const {
  switch (type) {
    case MarkerType::I:
      return "linear component " + line_str(point, names);
    case MarkerType::II:
      return "nonlinear component " + component.str(names) + " at general point " + point_str(point, names);
    case MarkerType::III:
      return "point " + point_str(point, names);
    case MarkerType::IV:
      return "point " + point_str(point, names) + ", line " + line_str(*line, names) + ", side slope -" +
             std::to_string(b) + "/" + std::to_string(c);
    case MarkerType::V:
      return "point " + point_str(point, names) + ", line " + line_str(*line, names) + ", C=" + to_string(C);
  }
  return "";
}

namespace {

Candidate make(MarkerType t, const Form& F, Germ g) {
  Candidate c;
  c.type = t;
  c.germ = std::move(g);
  c.limit = apply_germ(F, c.germ);
  return c;
}

bool all_kernel(const std::vector<Vec3>& ls, const Vec3& ker) {
  for (auto& l : ls)
    if (!proportional(l, ker)) return false;
  return true;
}

int cand_order(const Candidate& a, const Candidate& b) {
  if (a.type != b.type) return (int)a.type < (int)b.type ? -1 : 1;
  if (point_less(a.point, b.point)) return -1;
  if (point_less(b.point, a.point)) return 1;
  if (a.line && b.line) {
    if (point_less(*a.line, *b.line)) return -1;
    if (point_less(*b.line, *a.line)) return 1;
  }
  if (a.b * b.c != b.b * a.c) return a.b * b.c < b.b * a.c ? -1 : 1;
  return 0;
}

}  // namespace

std::optional<std::string> exclusion_check(const PlaneCurve& C, const Candidate& cand) {
  if (cand.type == MarkerType::I) {
    if (C.support().degree() == 1) return "multiple-line";
    return std::nullopt;
  }
  const Form& L = cand.limit.form;
  if (is_kernel_star(L, cand.germ)) return "kernel-star";
  if (cand.type == MarkerType::IV && 2 * cand.b == cand.c) {
    Factorization f = factor(L);
    std::vector<Vec3> ls;
    int conics = 0, mult = 0;
    bool other = false;
    for (auto& [g, m] : f.factors) {
      if (g.degree() == 1)
        ls.push_back(g.as_line());
      else if (g.degree() == 2)
        ++conics, mult = m;
      else
        other = true;
    }
    if (!other && conics == 1 && all_kernel(ls, cand.germ.kernel_line()))
      return mult >= 2 ? "double-conic" : "conic-support";
  }
  if (cand.type == MarkerType::V) {
    Factorization f = factor(L);
    int conics = 0;
    for (auto& [g, m] : f.factors) conics += g.degree() == 2;
    if (conics < 2) return "single-conic";
  }
  return std::nullopt;
}

bool torus_related(const Form& A, const Form& B) {
  auto test = [](const Form& A, const Form& B) {
    if (A.degree() != B.degree() || A.terms().size() != B.terms().size()) return false;
    struct V {
      long j, k;
      Alg val;
    };
    std::vector<V> vs;
    Exp e0{};
    Alg r0;
    bool first = true;
    for (auto& [e, a] : A.terms()) {
      Alg b = B.coeff(e);
      if (b.is_zero()) return false;
      Alg r = b / a;
      if (first) {
        e0 = e, r0 = r, first = false;
        continue;
      }
      vs.push_back({e[1] - e0[1], e[2] - e0[2], r / r0});
    }
    // integer elimination carrying the character values
    for (int coord = 0; coord < 2; ++coord) {
      auto key = [&](const V& v) { return coord == 0 ? v.j : v.k; };
      while (true) {
        int piv = -1;
        for (int i = 0; i < (int)vs.size(); ++i)
          if (key(vs[i]) != 0 && (piv < 0 || std::labs(key(vs[i])) < std::labs(key(vs[piv])))) piv = i;
        if (piv < 0) break;
        bool reduced = false;
        for (int i = 0; i < (int)vs.size(); ++i) {
          if (i == piv || key(vs[i]) == 0) continue;
          long q = key(vs[i]) / key(vs[piv]);
          vs[i].j -= q * vs[piv].j;
          vs[i].k -= q * vs[piv].k;
          vs[i].val = vs[i].val / vs[piv].val.pow(q);
          reduced = true;
        }
        if (!reduced) {
          // pivot is alone in this coordinate: it is a basis vector, drop it
          vs.erase(vs.begin() + piv);
          break;
        }
      }
    }
    for (auto& v : vs)
      if (v.j == 0 && v.k == 0 && !v.val.is_one()) return false;
    return true;
  };
  if (test(A, B)) return true;
  Mat3 sw = identity3();
  sw[1][1] = sw[2][2] = Alg(0);
  sw[1][2] = sw[2][1] = Alg(1);
  return test(A, B.compose(sw));
}

std::vector<PNCComponent> merge_components(std::vector<Candidate> cands) {
  std::stable_sort(cands.begin(), cands.end(), [](auto& a, auto& b) { return cand_order(a, b) < 0; });
  std::vector<PNCComponent> out;
  for (auto& c : cands) {
    bool merged = false;
    for (auto& comp : out) {
      const Candidate& r = comp.rep();
      if (r.type != c.type || !proportional(r.point, c.point)) continue;
      if (c.type == MarkerType::I || c.type == MarkerType::III) continue;
      if (!torus_related(r.limit.form, c.limit.form)) continue;
      comp.reps.push_back(c);
      merged = true;
      break;
    }
    if (merged) continue;
    PNCComponent comp;
    comp.type = c.type;
    comp.reps.push_back(c);
    out.push_back(std::move(comp));
  }
  for (auto& comp : out) {
    comp.limit_factors = factor(comp.rep().limit.form);
    comp.cls = classify_limit(comp.limit_factors);
  }
  return out;
}

PNCResult enumerate_components(const PlaneCurve& C) {
  const Form& F = C.form();
  std::vector<Candidate> cands;
  // I
  for (auto& l : C.linear_components()) {
    Candidate c = make(MarkerType::I, F, marker_type_I(C, l));
    c.point = l;
    c.component = Form::linear(l);
    cands.push_back(c);
  }
  // II
  for (auto& [G, m] : C.nonlinear_components()) {
    GeneralPoint gp = general_point(C, G);
    Candidate c = make(MarkerType::II, F, marker_type_II(C, gp.p));
    c.point = gp.p;
    c.line = gp.tangent;
    c.component = G;
    cands.push_back(c);
  }
  std::vector<Vec3> sing = C.support().degree() > 1 ? singular_points(C) : std::vector<Vec3>{};
  std::vector<Vec3> flex = C.support().degree() > 1 ? inflection_points(C) : std::vector<Vec3>{};
  // III
  for (auto& p : sing) {
    TangentCone tc = tangent_cone(F, p);
    if (tc.lines.size() < 3) continue;
    Candidate c = make(MarkerType::III, F, marker_type_III(C, p));
    c.point = p;
    cands.push_back(c);
  }
  // IV, V
  std::vector<std::pair<Vec3, bool>> pts;
  for (auto& p : sing) pts.push_back({p, true});
  for (auto& p : flex) pts.push_back({p, false});
  for (auto& [p, singular] : pts) {
    TangentCone tc = tangent_cone(F, p);
    for (auto& [l, mu] : tc.lines) {
      Flag fl{p, l};
      NewtonPolygon np = newton_polygon(F, fl);
      if (!np.usable) continue;
      for (auto& side : relevant_sides(np)) {
        Candidate c = make(MarkerType::IV, F, marker_type_IV(C, fl, side));
        c.point = p, c.line = l, c.b = side.b, c.c = side.c, c.S = side.S;
        cands.push_back(c);
      }
      if (!singular) continue;
      auto br = puiseux_branches(C, fl, Rational(0));
      for (auto& d : characteristics(br)) {
        Candidate c;
        c.type = MarkerType::V;
        c.point = p, c.line = l, c.C = d.C, c.S = d.S();
        try {
          TypeVGerm tv = marker_type_V(C, fl, d);
          c.germ = tv.germ;
          c.b = tv.b, c.c = tv.c;
          c.limit = apply_germ(F, c.germ);
        } catch (const DomainError&) {
          c.germ = diag_germ(0, 1, 2);  // placeholder, never emitted
          cands.push_back(c);
          cands.back().limit.form = Form();
          cands.back().b = -1;
          continue;
        }
        cands.push_back(c);
      }
    }
  }
  PNCResult res;
  std::vector<Candidate> kept;
  for (auto& c : cands) {
    if (c.type == MarkerType::V && c.b < 0) {
      res.dropped.push_back({c, "single-conic"});
      continue;
    }
    auto why = exclusion_check(C, c);
    if (why)
      res.dropped.push_back({c, *why});
    else
      kept.push_back(c);
  }
  std::stable_sort(res.dropped.begin(), res.dropped.end(),
                   [](auto& a, auto& b) { return cand_order(a.cand, b.cand) < 0; });
  res.components = merge_components(std::move(kept));
  return res;
}

Boundary boundary(const PlaneCurve& C) { return boundary(C, enumerate_components(C)); }

Boundary boundary(const PlaneCurve& C, const PNCResult& r) {
  Boundary b;
  for (auto& comp : r.components) b.limits.push_back({comp.rep().limit, comp.cls});
  b.star_family = "rank-2 limits (not enumerated): for each line l, the star joining a point of l to the " +
                  std::to_string(C.degree()) + " points of the curve on l, counted with multiplicity";
  return b;
}

}  // namespace pnc
