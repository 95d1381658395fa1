#include "pnc/germs.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>

#include "pnc/factor.hpp"

namespace pnc {

namespace {

using SMat = PolyMat;

Vec3 unit(int i) {
  Vec3 v{Alg(0), Alg(0), Alg(0)};
  v[i] = Alg(1);
  return v;
}

UniPoly tpow(int k, const Alg& c = Alg(1)) { return UniPoly::monomial(c, k); }

SMat pmul(const SMat& a, const SMat& b, int P = -1) {
  SMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      UniPoly s;
      for (int k = 0; k < 3; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) s += a[i][k] * b[k][j];
      r[i][j] = P >= 0 ? s.truncated(P) : s;
    }
  return r;
}

SMat identity_pm() { return const_polymat(identity3()); }

Mat3 at_zero(const SMat& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[i][j].coeff(0);
  return r;
}

UniPoly pdet(const SMat& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

SMat padj(const SMat& m, int P) {
  SMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]).truncated(P);
    }
  return r;
}

// 1/u mod t^P, u(0) != 0
UniPoly sinv(const UniPoly& u, int P) {
  Alg u0i = u.coeff(0).inverse();
  std::vector<Alg> w(P);
  for (int n = 0; n < P; ++n) {
    Alg s = n == 0 ? Alg(1) : Alg(0);
    for (int k = 1; k <= n && k <= u.degree(); ++k) s -= u.coeff(k) * w[n - k];
    w[n] = s * u0i;
  }
  return UniPoly(w);
}

// w^g mod t^P for w(0)=1
UniPoly spow(const UniPoly& w, const Rational& g, int P) {
  UniPoly e = (w - UniPoly(Alg(1))).truncated(P);
  UniPoly out(Alg(1)), ek(Alg(1));
  Rational bin = 1;
  for (int k = 1; k < P; ++k) {
    ek = (ek * e).truncated(P);
    if (ek.is_zero()) break;
    bin = bin * (g - (k - 1)) / k;
    out += ek * Alg(bin);
  }
  return out.truncated(P);
}

UniPoly scompose(const UniPoly& p, const UniPoly& tau, int P) {
  UniPoly r;
  for (int k = p.degree(); k >= 0; --k) r = (r * tau + UniPoly(p.coeff(k))).truncated(P);
  return r;
}

struct MPI {
  UniPoly q, r, s;
  Mat3 L;
};

// h1 = h * j with h unipotent (q, r, s) and diag(t^e)^{-1} j diag(t^e) holomorphic; L = that at t=0
MPI mpi(const SMat& h1, int b, int c, int P) {
  const UniPoly &v1 = h1[0][0], &e1 = h1[0][1], &f1 = h1[0][2];
  const UniPoly &a2 = h1[1][0], &u2 = h1[1][1], &c2 = h1[1][2];
  const UniPoly &a3 = h1[2][0], &b3 = h1[2][1], &u3 = h1[2][2];
  MPI o;
  o.q = (a2 * sinv(v1, P)).truncated(b);
  UniPoly d2 = (a2 - o.q * v1).truncated(P), v2 = (u2 - o.q * e1).truncated(P), f2 = (c2 - o.q * f1).truncated(P);
  UniPoly di = sinv((v1 * v2 - e1 * d2).truncated(P), P);
  o.r = (di * (v2 * a3 - d2 * b3).truncated(P)).truncated(c);
  o.s = (di * (v1 * b3 - e1 * a3).truncated(P)).truncated(c - b);
  UniPoly d3 = (a3 - v1 * o.r - d2 * o.s).truncated(P), e3 = (b3 - e1 * o.r - v2 * o.s).truncated(P),
          v3 = (u3 - f1 * o.r - f2 * o.s).truncated(P);
  SMat j = {{{v1, e1, f1}, {d2, v2, f2}, {d3, e3, v3}}};
  int e[3] = {0, b, c};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (e[i] < e[k]) {
        o.L[i][k] = Alg(0);
        continue;
      }
      if (j[i][k].valuation() < e[i] - e[k]) throw InvariantError("normalize: division step failed");
      o.L[i][k] = j[i][k].coeff(e[i] - e[k]);
    }
  return o;
}

SMat unipotent(const UniPoly& q, const UniPoly& r, const UniPoly& s) {
  SMat h = identity_pm();
  h[1][0] = q, h[2][0] = r, h[2][1] = s;
  return h;
}

}  // namespace

PolyMat const_polymat(const Mat3& A) {
  PolyMat m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = UniPoly(A[i][j]);
  return m;
}

Germ diag_germ(int a, int b, int c) {
  PolyMat m = const_polymat(Mat3{Vec3{Alg(0), Alg(0), Alg(0)}, Vec3{Alg(0), Alg(0), Alg(0)}, Vec3{Alg(0), Alg(0), Alg(0)}});
  m[0][0] = tpow(a), m[1][1] = tpow(b), m[2][2] = tpow(c);
  return Germ(m);
}

Germ::Germ(PolyMat m, bool check) : m_(std::move(m)) {
  if (!check) return;
  if (pdet(m_).is_zero()) throw DomainError("germ determinant is identically zero");
  Mat3 c = center();
  bool nz = false;
  for (auto& row : c)
    for (auto& x : row) nz = nz || !x.is_zero();
  if (!nz) throw DomainError("germ center is zero");
}

Mat3 Germ::center() const { return at_zero(m_); }

int Germ::center_rank() const {
  Mat3 c = center();
  std::vector<std::vector<Alg>> rows;
  for (auto& r : c) rows.push_back({r[0], r[1], r[2]});
  return rank(rows, 3);
}

UniPoly Germ::det() const { return pdet(m_); }

Field Germ::field() const {
  Field f;
  for (auto& row : m_)
    for (auto& e : row) f = common_field(f, e.field());
  return f;
}

Germ Germ::left(const Mat3& A) const { return Germ(pmul(const_polymat(A), m_), false); }
Germ Germ::right(const Mat3& A) const { return Germ(pmul(m_, const_polymat(A)), false); }
Germ Germ::operator*(const Germ& o) const { return Germ(pmul(m_, o.m_), false); }

Germ Germ::reparam(const UniPoly& tau) const {
  if (tau.coeff(0) != Alg(0)) throw DomainError("reparametrization must vanish at 0");
  PolyMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m_[i][j].compose(tau);
  return Germ(r);
}

Vec3 Germ::kernel_line() const {
  if (center_rank() != 1) throw DomainError("kernel line needs a rank-1 center");
  Mat3 c = center();
  for (auto& row : c)
    if (!is_zero(row)) return normalized(row);
  throw InvariantError("zero center");
}

Vec3 Germ::image_point() const {
  if (center_rank() != 1) throw DomainError("image point needs a rank-1 center");
  Mat3 ct = transpose(center());
  for (auto& col : ct)
    if (!is_zero(col)) return normalized(col);
  throw InvariantError("zero center");
}

std::string Germ::str(Namer* names) const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < 3; ++j) s += (j ? "," : "") + m_[i][j].str("t", names);
    s += "]";
  }
  return s + "]";
}

// ---- markers

Germ marker_type_I(const PlaneCurve& C, const Vec3& L0) {
  Vec3 L = normalized(L0);
  bool comp = false;
  for (auto& l : C.linear_components()) comp = comp || proportional(l, L);
  if (!comp) throw DomainError("line is not a component of the curve");
  std::vector<Vec3> basis;
  for (int i = 0; i < 3 && basis.size() < 2; ++i)
    if (dot(L, unit(i)).is_zero()) basis.push_back(unit(i));
  for (int i = 0; i < 3 && basis.size() < 2; ++i) {
    Vec3 v = cross(L, unit(i));
    if (!is_zero(v) && !proportional(v, basis[0])) basis.push_back(normalized(v));
  }
  Vec3 R;
  for (int i = 2; i >= 0; --i)
    if (!dot(L, unit(i)).is_zero()) {
      R = unit(i);
      break;
    }
  PolyMat m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = UniPoly(basis[0][i]);
    m[i][1] = UniPoly(basis[1][i]);
    m[i][2] = UniPoly::monomial(R[i], 1);
  }
  return Germ(m);
}

namespace {

// nonsingular on the support, not a flex, not on a line
bool is_general(const PlaneCurve& C, const Form& hess, const Vec3& p) {
  const Form& S = C.support();
  if (!S.eval(p).is_zero()) return false;
  bool grad = false;
  for (int i = 0; i < 3; ++i) grad = grad || !S.diff(i).eval(p).is_zero();
  if (!grad) return false;
  for (auto& l : C.linear_components())
    if (dot(l, p).is_zero()) return false;
  return !hess.eval(p).is_zero();
}

std::vector<Rational> small_rationals(int H) {
  std::vector<Rational> out{Rational(0)};
  for (int h = 1; h <= H; ++h) {
    std::vector<Rational> lvl;
    for (int d = 1; d <= h; ++d)
      for (int n = -h; n <= h; ++n) {
        if (std::max(std::abs(n), d) != h || std::gcd(n, d) != 1) continue;
        lvl.push_back(Rational(n, d));
      }
    std::sort(lvl.begin(), lvl.end(), [](const Rational& a, const Rational& b) {
      if (a.get_den() != b.get_den()) return a.get_den() < b.get_den();
      if (abs(a) != abs(b)) return abs(a) < abs(b);
      return a > b;
    });
    out.insert(out.end(), lvl.begin(), lvl.end());
  }
  return out;
}

UniPoly restrict_z(const Form& G, const Vec3& base, const Vec3& dir) {
  // G(base + z*dir) as a polynomial in z
  std::vector<Alg> c(G.degree() + 1);
  for (auto& [e, a] : G.terms()) {
    UniPoly term(a);
    for (int i = 0; i < 3; ++i) {
      UniPoly lin(std::vector<Alg>{base[i], dir[i]});
      term *= lin.pow(e[i]);
    }
    for (int k = 0; k <= term.degree(); ++k) c[k] += term.coeff(k);
  }
  return UniPoly(c);
}

}  // namespace

GeneralPoint general_point(const PlaneCurve& C, const Form& G) {
  if (G.degree() < 2) throw DomainError("general point needs a nonlinear component");
  Form hess = hessian(C.support());
  Field K = G.field();
  std::vector<std::pair<Vec3, Vec3>> lines;  // (base, direction)
  auto rs = small_rationals(6);
  for (auto& y0 : rs) {
    lines.push_back({Vec3{Alg(1), Alg(y0), Alg(0)}, unit(2)});
    if (y0 == 0) lines.push_back({unit(1), unit(2)});
  }
  auto tangent = [&](const Vec3& p) {
    Vec3 g;
    for (int i = 0; i < 3; ++i) g[i] = C.support().diff(i).eval(p);
    return normalized(g);
  };
  for (int pass = 0; pass < 2; ++pass)
    for (auto& [base, dir] : lines) {
      UniPoly g = restrict_z(G, base, dir);
      if (g.degree() < 1) continue;
      if (pass == 0) {
        for (auto& [f, mu] : factor_over(g, K)) {
          if (f.degree() != 1) continue;
          Alg z0 = -f.coeff(0) / f.coeff(1);
          Vec3 p = normalized(Vec3{base[0] + z0 * dir[0], base[1] + z0 * dir[1], base[2] + z0 * dir[2]});
          if (is_general(C, hess, p)) return {p, tangent(p)};
        }
      } else {
        auto fl = factor_over(g, K);
        std::sort(fl.begin(), fl.end(), [](auto& a, auto& b) { return a.first.degree() < b.first.degree(); });
        for (auto& [f, mu] : fl) {
          auto [L, z0] = adjoin_root(K, f);
          Vec3 p = normalized(Vec3{base[0] + z0 * dir[0], base[1] + z0 * dir[1], base[2] + z0 * dir[2]});
          if (is_general(C, hess, p)) return {p, tangent(p)};
        }
      }
    }
  throw InvariantError("no general point found");
}

Germ marker_type_II(const PlaneCurve& C, const Vec3& p0) {
  Vec3 p = normalized(p0);
  Form hess = hessian(C.support());
  if (!is_general(C, hess, p)) throw DomainError("point is singular, inflectional, or on a line");
  Vec3 g;
  for (int i = 0; i < 3; ++i) g[i] = C.support().diff(i).eval(p);
  return diag_germ(0, 1, 2).left(flag_frame({p, normalized(g)}));
}

Germ marker_type_III(const PlaneCurve& C, const Vec3& p0) {
  Vec3 p = normalized(p0);
  TangentCone tc = tangent_cone(C.form(), p);
  if (tc.lines.size() < 3) throw DomainError("tangent cone has fewer than 3 distinct lines");
  return diag_germ(0, 1, 1).left(point_frame(p));
}

Germ marker_type_IV(const PlaneCurve& C, const Flag& flag, const PolygonSide& side) {
  if (!(side.b > 0 && side.b < side.c)) throw DomainError("side slope outside (-1,0)");
  NewtonPolygon np = newton_polygon(C.form(), flag);
  if (!np.usable) throw DomainError("flag line not in the tangent cone");
  return diag_germ(0, side.b, side.c).left(flag_frame(flag));
}

TypeVGerm marker_type_V(const PlaneCurve& C, const Flag& flag, const CharacteristicDatum& d) {
  (void)C;
  if (d.C <= d.lambda0) throw DomainError("characteristic exponent must exceed lambda0");
  {
    std::vector<Alg> g = d.gamma_C;
    bool two = false;
    for (std::size_t i = 1; i < g.size() && !two; ++i) two = g[i] != g[0];
    if (!two) throw DomainError("degenerate datum: single conic");
  }
  Rational B = (d.C - d.lambda0) / 2 + 1;
  Integer a = 1;
  auto fold = [&](const Rational& q) { a = lcm(a, q.get_den()); };
  fold(d.C), fold(B);
  for (auto& t : d.shared)
    if (t.exp < d.C) fold(t.exp);
  TypeVGerm out;
  out.a = (int)a.get_si();
  Rational bq = B * a, cq = d.C * a;
  out.b = (int)bq.get_num().get_si();
  out.c = (int)cq.get_num().get_si();
  UniPoly r, s;
  for (auto& t : d.shared) {
    if (t.exp >= d.C) continue;
    Rational e1 = t.exp * a;
    int k = (int)e1.get_num().get_si();
    if (k < out.c) r += tpow(k, t.coeff);
    Rational e2 = (t.exp - 1) * a + out.b;
    int k2 = (int)e2.get_num().get_si();
    if (k2 < out.c && t.exp != 0) s += tpow(k2, t.coeff * Alg(t.exp));
  }
  PolyMat m = const_polymat(identity3());
  m[1][0] = tpow(out.a), m[1][1] = tpow(out.b);
  m[2][0] = r, m[2][1] = s, m[2][2] = tpow(out.c);
  out.local = Germ(m);
  out.frame = flag_frame(flag);
  out.germ = out.local.left(out.frame);
  return out;
}

// ---- normalization

Germ StandardForm::reconstruct() const {
  SMat D = diag_germ(0, b, c).mat();
  SMat m = pmul(pmul(const_polymat(H), unipotent(q, r, s)), pmul(D, const_polymat(M)));
  return Germ(m);
}

std::string StandardForm::str(Namer* names) const {
  auto mat = [&](const Mat3& A) {
    std::string o = "[";
    for (int i = 0; i < 3; ++i) {
      o += i ? ",[" : "[";
      for (int j = 0; j < 3; ++j) o += (j ? "," : "") + to_string(A[i][j], names);
      o += "]";
    }
    return o + "]";
  };
  std::string o = "b=" + std::to_string(b) + " c=" + std::to_string(c);
  o += "\nq=" + q.str("t", names) + "\nr=" + r.str("t", names) + "\ns=" + s.str("t", names);
  o += "\nH=" + mat(H) + "\nM=" + mat(M);
  if (tau != UniPoly::x()) o += "\nreparametrization t -> " + tau.str("t", names);
  if (reduced > 1) o += "\nrescaled t -> t^(1/" + std::to_string(reduced) + ")";
  return o;
}

StandardForm normalize_germ(const Germ& g) {
  UniPoly dt = g.det();
  if (dt.is_zero()) throw DomainError("germ determinant is identically zero");
  int vdet = dt.valuation();
  int maxdeg = 0;
  for (auto& row : g.mat())
    for (auto& e : row) maxdeg = std::max(maxdeg, e.degree());
  const int P = 2 * vdet + 8;
  if (P > limits().t_degree_cap) throw PrecisionError("normalization precision exceeds t-degree cap");

  // Smith form over K[[t]]/t^P: alpha = hl * A * kr
  SMat A, hl = identity_pm(), kr = identity_pm();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A[i][j] = g.at(i, j).truncated(P);
  int v[3];
  for (int i = 0; i < 3; ++i) {
    int bi = -1, bj = -1, bv = INT_MAX;
    for (int r = i; r < 3; ++r)
      for (int c = i; c < 3; ++c) {
        int vv = A[r][c].valuation();
        if (vv < bv) bv = vv, bi = r, bj = c;
      }
    if (bv == INT_MAX || bv >= P - vdet) throw InvariantError("normalize: precision lost");
    if (bi != i) {
      std::swap(A[bi], A[i]);
      for (int r = 0; r < 3; ++r) std::swap(hl[r][bi], hl[r][i]);
    }
    if (bj != i) {
      for (int r = 0; r < 3; ++r) std::swap(A[r][bj], A[r][i]);
      std::swap(kr[bj], kr[i]);
    }
    v[i] = bv;
    UniPoly ui = sinv(A[i][i].shifted_down(bv), P);
    for (int r = i + 1; r < 3; ++r) {
      if (A[r][i].is_zero()) continue;
      UniPoly f = (A[r][i].shifted_down(bv) * ui).truncated(P);
      for (int c = 0; c < 3; ++c) A[r][c] = (A[r][c] - f * A[i][c]).truncated(P);
      for (int rr = 0; rr < 3; ++rr) hl[rr][i] = (hl[rr][i] + f * hl[rr][r]).truncated(P);
    }
    for (int c = i + 1; c < 3; ++c) {
      if (A[i][c].is_zero()) continue;
      UniPoly f = (A[i][c].shifted_down(bv) * ui).truncated(P);
      for (int r = 0; r < 3; ++r) A[r][c] = (A[r][c] - f * A[r][i]).truncated(P);
      for (int cc = 0; cc < 3; ++cc) kr[i][cc] = (kr[i][cc] + f * kr[c][cc]).truncated(P);
    }
  }
  if (v[0] != 0) throw DomainError("germ center is zero");
  Mat3 K;
  for (int i = 0; i < 3; ++i) {
    Alg u0 = A[i][i].coeff(v[i]);
    for (int c = 0; c < 3; ++c) K[i][c] = u0 * kr[i][c].coeff(0);
  }
  StandardForm sf;
  sf.b = v[1], sf.c = v[2];
  int b = sf.b, c = sf.c;
  Mat3 H = at_zero(hl);
  SMat h1 = pmul(const_polymat(inverse(H)), hl, P);
  MPI m = mpi(h1, b, c, P);
  Mat3 M = mul(m.L, K);
  UniPoly q = m.q, r = m.r, s = m.s;

  if (b == c) {
    // conjugate by constant G on coordinates 2,3 so that v(q) < v(r)
    Mat3 G = identity3();  // acts on (q, r) as new = Ginv * old
    auto apply = [&](const Mat3& E) {  // (q, r) <- E (q, r); H <- H * E^{-1}, M <- E * M
      UniPoly nq = q * E[1][1] + r * E[1][2], nr = q * E[2][1] + r * E[2][2];
      q = nq, r = nr;
      H = mul(H, inverse(E));
      M = mul(E, M);
    };
    for (int guard = 0; guard < 4 * (b + 2) && !q.is_zero() && !r.is_zero() && q.valuation() >= r.valuation(); ++guard) {
      Mat3 E = identity3();
      if (r.valuation() < q.valuation()) {
        E[1][1] = Alg(0), E[1][2] = Alg(1), E[2][1] = Alg(1), E[2][2] = Alg(0);
      } else {
        E[2][1] = -(r.coeff(r.valuation()) / q.coeff(q.valuation()));
      }
      apply(E);
    }
    if (q.is_zero() && !r.is_zero()) {
      Mat3 E = identity3();
      E[1][1] = Alg(0), E[1][2] = Alg(1), E[2][1] = Alg(1), E[2][2] = Alg(0);
      apply(E);
    }
    (void)G;
  }

  UniPoly tau = UniPoly::x();
  if (!q.is_zero()) {
    int a = q.valuation();
    Alg lam = q.coeff(a);
    if (lam != Alg(1)) {
      // diag(1, lam, mu) conjugation with mu = lam keeps s
      Mat3 E = identity3();
      E[1][1] = lam.inverse(), E[2][2] = lam.inverse();
      q = q * lam.inverse(), r = r * lam.inverse();
      H = mul(H, inverse(E));
      M = mul(E, M);
    }
    if (q != tpow(a)) {
      UniPoly u = q.shifted_down(a);
      UniPoly nu(Alg(1));
      for (int it = 0; it < P; ++it) {
        UniPoly tn = (UniPoly::x() * nu).truncated(P);
        UniPoly nn = spow(scompose(u, tn, P), Rational(-1, a), P);
        if (nn == nu) break;
        nu = nn;
      }
      tau = (UniPoly::x() * nu).truncated(P);
      SMat ht = unipotent(scompose(q, tau, P), scompose(r, tau, P), scompose(s, tau, P));
      MPI m2 = mpi(ht, b, c, P);
      q = m2.q, r = m2.r, s = m2.s;
      M = mul(m2.L, M);
    }
  }
  sf.q = q, sf.r = r, sf.s = s, sf.H = H, sf.M = M, sf.tau = tau;

  // certify: adj(beta) * alpha(tau) = det(H) det(M) t^(b+c) (I + O(t))
  {
    Germ beta = sf.reconstruct();
    SMat at;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) at[i][j] = scompose(g.at(i, j), tau, P);
    SMat prod = pmul(padj(beta.mat(), P), at, P);
    Alg dd = det(H) * det(M);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (prod[i][j].valuation() < b + c) throw InvariantError("normalize: certification failed");
        if (prod[i][j].coeff(b + c) != (i == j ? dd : Alg(0))) throw InvariantError("normalize: certification failed");
      }
  }
  if (!(q.degree() < b && r.degree() < c && s.degree() < c - b)) throw InvariantError("normalize: degree bounds");
  if (!q.coeff(0).is_zero() || !r.coeff(0).is_zero() || !s.coeff(0).is_zero())
    throw InvariantError("normalize: vanishing at 0");

  // t -> t^(1/k) when every exponent is divisible by k
  int k = std::gcd(b, c);
  for (auto* p : {&sf.q, &sf.r, &sf.s})
    for (int e = 0; e <= p->degree(); ++e)
      if (!p->coeff(e).is_zero()) k = std::gcd(k, e);
  if (k > 1) {
    auto shrink = [&](const UniPoly& p) {
      std::vector<Alg> cs(p.is_zero() ? 0 : p.degree() / k + 1);
      for (int e = 0; e <= p.degree(); e += k) cs[e / k] = p.coeff(e);
      return UniPoly(cs);
    };
    sf.q = shrink(sf.q), sf.r = shrink(sf.r), sf.s = shrink(sf.s);
    sf.b /= k, sf.c /= k;
    sf.reduced = k;
  }
  return sf;
}

bool germ_equivalent_limits(const Germ& a, const Germ& b, const Form& F) {
  Form la = dominant_part(substitute(F, a.mat())).second;
  Form lb = dominant_part(substitute(F, b.mat())).second;
  return la.proportional(lb);
}

}  // namespace pnc
