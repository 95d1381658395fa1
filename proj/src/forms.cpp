#include "pnc/forms.hpp"

#include <algorithm>

#include "pnc/factor.hpp"

namespace pnc {

Form Form::monomial(const Alg& c, const Exp& e) {
  Form f(e[0] + e[1] + e[2]);
  f.add(e, c);
  return f;
}

Form Form::var(int i) {
  Exp e{0, 0, 0};
  e[i] = 1;
  return monomial(Alg(1), e);
}

Form Form::linear(const Vec3& l) {
  Form f(1);
  f.add({1, 0, 0}, l[0]);
  f.add({0, 1, 0}, l[1]);
  f.add({0, 0, 1}, l[2]);
  return f;
}

Alg Form::coeff(const Exp& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Alg(0) : it->second;
}

void Form::add(const Exp& e, const Alg& c) {
  if (c.is_zero()) return;
  if (e[0] + e[1] + e[2] != d_) {
    if (t_.empty())
      d_ = e[0] + e[1] + e[2];
    else
      throw InvariantError("inhomogeneous term");
  }
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Field Form::field() const {
  Field f;
  for (auto& [e, c] : t_) f = common_field(f, c.field());
  return f;
}

const Alg& Form::leading_coeff() const {
  if (t_.empty()) throw DomainError("zero form");
  return t_.begin()->second;
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

Form& Form::operator+=(const Form& o) {
  if (t_.empty()) d_ = o.d_;
  for (auto& [e, c] : o.t_) add(e, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (t_.empty()) d_ = o.d_;
  for (auto& [e, c] : o.t_) add(e, -c);
  return *this;
}

Form operator*(const Form& a, const Form& b) {
  Form r(a.d_ + b.d_);
  for (auto& [e1, c1] : a.t_)
    for (auto& [e2, c2] : b.t_) r.add({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
  return r;
}

Form operator*(Form a, const Alg& c) {
  if (c.is_zero()) return Form(a.d_);
  for (auto& [e, x] : a.t_) x *= c;
  return a;
}

bool operator==(const Form& a, const Form& b) {
  if (a.t_.size() != b.t_.size()) return false;
  if (a.t_.empty()) return true;
  auto i = a.t_.begin();
  auto j = b.t_.begin();
  for (; i != a.t_.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

Form Form::pow(int e) const {
  Form r(Alg(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Alg Form::eval(const Vec3& p) const {
  Alg s(0);
  for (auto& [e, c] : t_) s += c * p[0].pow(e[0]) * p[1].pow(e[1]) * p[2].pow(e[2]);
  return s;
}

Form Form::diff(int v) const {
  Form r(std::max(d_ - 1, 0));
  for (auto& [e, c] : t_) {
    if (e[v] == 0) continue;
    Exp f = e;
    f[v] -= 1;
    r.add(f, c * Alg(e[v]));
  }
  return r;
}

namespace {

template <class C>
using GTerms = std::map<Exp, C, ExpOrder>;

template <class C>
GTerms<C> gmul(const GTerms<C>& a, const GTerms<C>& b) {
  GTerms<C> r;
  for (auto& [e1, c1] : a)
    for (auto& [e2, c2] : b) {
      Exp e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
      auto it = r.find(e);
      if (it == r.end())
        r.emplace(e, c1 * c2);
      else
        it->second += c1 * c2;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

// F(M X) where M has entries of type C
template <class C, class M>
GTerms<C> gcompose(const Form& F, const M& mat) {
  std::array<std::vector<GTerms<C>>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    GTerms<C> lin;
    for (int j = 0; j < 3; ++j) {
      Exp e{0, 0, 0};
      e[j] = 1;
      if (!mat[i][j].is_zero()) lin.emplace(e, C(mat[i][j]));
    }
    GTerms<C> one;
    one.emplace(Exp{0, 0, 0}, C(Alg(1)));
    pw[i].push_back(one);
    pw[i].push_back(lin);
  }
  auto power = [&](int i, int k) -> const GTerms<C>& {
    while ((int)pw[i].size() <= k) pw[i].push_back(gmul(pw[i].back(), pw[i][1]));
    return pw[i][k];
  };
  GTerms<C> r;
  for (auto& [e, c] : F.terms()) {
    GTerms<C> m = gmul(gmul(power(0, e[0]), power(1, e[1])), power(2, e[2]));
    for (auto& [f, x] : m) {
      C v = x * c;
      auto it = r.find(f);
      if (it == r.end())
        r.emplace(f, v);
      else
        it->second += v;
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

Form Form::compose(const Mat3& M) const {
  Form r(d_);
  for (auto& [e, c] : gcompose<Alg>(*this, M)) r.add(e, c);
  return r;
}

Form Form::normalized() const {
  if (t_.empty()) return *this;
  Form r = *this * leading_coeff().inverse();
  for (auto& [e, c] : r.t_) c = c.reduced();
  return r;
}

bool Form::proportional(const Form& o) const {
  if (d_ != o.d_ || t_.size() != o.t_.size()) return false;
  return normalized() == o.normalized();
}

Vec3 Form::as_line() const {
  if (d_ != 1) throw DomainError("not a linear form");
  return {coeff({1, 0, 0}), coeff({0, 1, 0}), coeff({0, 0, 1})};
}

std::string Form::str(Namer* names) const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto& [e, c] : t_) {
    std::string mono;
    const char* v[3] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += v[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = to_string(c, names);
    std::string term;
    if (mono.empty())
      term = needs_parens(c) && !out.empty() ? "(" + cs + ")" : cs;
    else if (c.is_one())
      term = mono;
    else if (c == Alg(-1))
      term = "-" + mono;
    else
      term = (needs_parens(c) ? "(" + cs + ")" : cs) + "*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

std::optional<Form> exact_div(const Form& a, const Form& b) {
  if (b.is_zero()) throw DomainError("division by zero form");
  Form r = a, q(a.degree() - b.degree());
  if (a.degree() < b.degree()) return a.is_zero() ? std::optional<Form>(Form(0)) : std::nullopt;
  const Exp lb = b.terms().begin()->first;
  Alg li = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    auto [ea, ca] = *r.terms().begin();
    Exp e{ea[0] - lb[0], ea[1] - lb[1], ea[2] - lb[2]};
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) return std::nullopt;
    Alg c = ca * li;
    q.add(e, c);
    r -= Form::monomial(c, e) * b;
  }
  return q;
}

Form hessian(const Form& F) {
  std::array<std::array<Form, 3>, 3> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = F.diff(i).diff(j);
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

BiPoly dehomogenize_x(const Form& F) {
  BiPoly p;
  for (auto& [e, c] : F.terms()) p[{e[1], e[2]}] = c;
  return p;
}

Form homogenize_x(const BiPoly& p, int d) {
  Form f(d);
  for (auto& [jk, c] : p) f.add({d - jk.first - jk.second, jk.first, jk.second}, c);
  return f;
}

BiPoly bimul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (auto& [e1, c1] : a)
    for (auto& [e2, c2] : b) r[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

BiPoly bishift(const BiPoly& f, const Alg& y0, const Alg& z0) {
  // expand (y0+Y)^j (z0+Z)^k with binomials
  int J = 0, K = 0;
  for (auto& [e, c] : f) J = std::max(J, e.first), K = std::max(K, e.second);
  auto binrow = [](const Alg& a, int n) {
    std::vector<Alg> r(n + 1);
    Integer b = 1;
    for (int i = 0; i <= n; ++i) {
      r[i] = Alg(Rational(b)) * a.pow(n - i);
      b = b * (n - i) / (i + 1);
    }
    return r;
  };
  std::vector<std::vector<Alg>> yr(J + 1), zr(K + 1);
  for (int j = 0; j <= J; ++j) yr[j] = binrow(y0, j);
  for (int k = 0; k <= K; ++k) zr[k] = binrow(z0, k);
  BiPoly r;
  for (auto& [e, c] : f) {
    auto& ys = yr[e.first];
    auto& zs = zr[e.second];
    for (int a = 0; a <= e.first; ++a) {
      if (ys[a].is_zero()) continue;
      for (int b = 0; b <= e.second; ++b)
        if (!zs[b].is_zero()) r[{a, b}] += c * ys[a] * zs[b];
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

std::vector<Alg> implicit_series(const BiPoly& f, int n) {
  auto it = f.find({0, 1});
  if (it == f.end() || it->second.is_zero()) throw InvariantError("implicit series needs a simple root");
  if (f.count({0, 0})) throw InvariantError("implicit series needs f(0,0)=0");
  Alg inv = it->second.inverse();
  int K = 0;
  for (auto& [e, c] : f) K = std::max(K, e.second);
  // P[k][m] = coefficient of Y^m in Z^k
  std::vector<std::vector<Alg>> P(K + 1, std::vector<Alg>(n));
  P[0][0] = Alg(1);
  std::vector<Alg> z(n);
  for (int m = 1; m < n; ++m) {
    for (int k = 2; k <= K; ++k) {
      Alg s(0);
      for (int i = 1; i < m; ++i)
        if (!z[i].is_zero() && !P[k - 1][m - i].is_zero()) s += z[i] * P[k - 1][m - i];
      P[k][m] = s;
    }
    Alg rhs(0);
    for (auto& [e, c] : f) {
      auto [j, k] = e;
      if (j == 0 && k == 1) continue;
      if (j > m) continue;
      const Alg& pk = P[k][m - j];
      if (!pk.is_zero()) rhs += c * pk;
    }
    z[m] = -rhs * inv;
    P[1][m] = z[m];
  }
  return z;
}

GermExpansion substitute(const Form& F, const PolyMat& M) {
  GermExpansion E;
  E.degree = F.degree();
  for (auto& [e, c] : gcompose<UniPoly>(F, M)) {
    if (c.degree() > limits().t_degree_cap)
      throw PrecisionError("t-degree " + std::to_string(c.degree()) + " exceeds cap");
    E.coeffs.emplace(e, c);
  }
  return E;
}

std::pair<int, Form> dominant_part(const GermExpansion& E) {
  int v = INT_MAX;
  for (auto& [e, c] : E.coeffs) v = std::min(v, c.valuation());
  if (v == INT_MAX) throw InvariantError("identically zero expansion");
  Form f(E.degree);
  for (auto& [e, c] : E.coeffs) f.add(e, c.coeff(v));
  return {v, f};
}

Form Factorization::expand() const {
  Form r(unit);
  for (auto& [f, m] : factors) r = r * f.pow(m);
  return r;
}

namespace {

std::vector<Vec3> aux_points() {
  std::vector<Vec3> pts = {{Alg(0), Alg(0), Alg(1)}, {Alg(0), Alg(1), Alg(0)}, {Alg(1), Alg(0), Alg(0)}};
  for (int s = 1; s <= 4; ++s)
    for (int a = -s; a <= s; ++a)
      for (int b = -s; b <= s; ++b)
        if (std::max(std::abs(a), std::abs(b)) == s || s == 1) pts.push_back({Alg(a), Alg(b), Alg(1)});
  return pts;
}

// elements of K'=K(alpha) as vectors over K
std::vector<Alg> over_parent(const Alg& a, const Field& Kp) {
  const Field& K = Kp;
  Alg al = a.lifted(K);
  std::size_t D = field_dim(K->parent);
  std::vector<Alg> out;
  for (int i = 0; i < K->degree; ++i) {
    std::vector<Rational> v(al.coeffs().begin() + i * D, al.coeffs().begin() + (i + 1) * D);
    out.push_back(Alg(K->parent, v));
  }
  return out;
}

// try to rewrite coefficients living in L=K(alpha) over a smaller field
std::vector<Alg> descend(const std::vector<Alg>& coefs, const Field& L) {
  Field K = L->parent;
  bool inK = true;
  for (auto& c : coefs) {
    auto v = over_parent(c, L);
    for (int i = 1; i < (int)v.size(); ++i)
      if (!v[i].is_zero()) inK = false;
  }
  if (inK) {
    std::vector<Alg> out;
    for (auto& c : coefs) out.push_back(over_parent(c, L)[0]);
    return out;
  }
  int n = L->degree;
  std::vector<Alg> cands;
  for (auto& c : coefs)
    if (!c.is_rational()) cands.push_back(c);
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size() && j < i + 3; ++j) cands.push_back(cands[i] + Alg(2) * cands[j]);
  for (auto& th : cands) {
    // smallest k with theta^k dependent on lower powers over K
    std::vector<std::vector<Alg>> pw;
    Alg p(1);
    int k = 0;
    std::vector<Alg> rel;
    for (k = 0; k <= n; ++k) {
      pw.push_back(over_parent(p, L));
      // columns = powers; solve for dependency
      std::vector<std::vector<Alg>> rows(n, std::vector<Alg>(k + 1));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c <= k; ++c) rows[r][c] = pw[c][r];
      auto ns = nullspace(rows, k + 1);
      if (!ns.empty()) {
        rel = ns[0];
        break;
      }
      p *= th;
    }
    if (k >= n || k <= 1) continue;
    // minpoly of theta over K, degree k < n
    std::vector<Alg> mp(rel.begin(), rel.begin() + k + 1);
    UniPoly m = UniPoly(mp).monic();
    Field M = make_level(K, m);
    Alg g = Alg::generator(M);
    std::vector<Alg> out;
    bool ok = true;
    for (auto& c : coefs) {
      // c = sum a_i theta^i
      std::vector<std::vector<Alg>> rows(n, std::vector<Alg>(k + 1));
      auto cv = over_parent(c, L);
      for (int r = 0; r < n; ++r) {
        for (int i = 0; i < k; ++i) rows[r][i] = pw[i][r];
        rows[r][k] = -cv[r];
      }
      auto ns = nullspace(rows, k + 1);
      bool found = false;
      for (auto& v : ns)
        if (!v[k].is_zero()) {
          Alg s(0);
          for (int i = 0; i < k; ++i) s += v[i] / v[k] * g.pow(i);
          out.push_back(s);
          found = true;
          break;
        }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) return out;
  }
  return coefs;
}

struct FoundFactor {
  Form P;
};

std::optional<Form> try_branch(const Form& H, const BiPoly& h, const Alg& y0, const Alg& z0, int mu, const Field& Kbase) {
  int d = H.degree();
  // D = d^{mu-1}/dz^{mu-1} h
  BiPoly D = h;
  for (int r = 1; r < mu; ++r) {
    BiPoly nd;
    for (auto& [e, c] : D)
      if (e.second > 0) nd[{e.first, e.second - 1}] = c * Alg(e.second);
    D = nd;
  }
  BiPoly Ds = bishift(D, y0, z0);
  int N = d * d + 2;
  std::vector<Alg> Z = implicit_series(Ds, N);
  Z[0] = z0;
  auto trunc_mul = [&](const std::vector<Alg>& a, const std::vector<Alg>& b) {
    std::vector<Alg> r(N);
    for (int i = 0; i < N; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j < N; ++j)
        if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
  };
  std::vector<std::vector<Alg>> ypw{std::vector<Alg>(N)}, zpw{std::vector<Alg>(N)};
  ypw[0][0] = Alg(1);
  zpw[0][0] = Alg(1);
  std::vector<Alg> yl(N);
  yl[0] = y0;
  if (N > 1) yl[1] = Alg(1);
  for (int e = 1; e <= d; ++e) {
    ypw.push_back(trunc_mul(ypw.back(), yl));
    zpw.push_back(trunc_mul(zpw.back(), Z));
  }
  for (int e = 1; e <= d; ++e) {
    std::vector<std::pair<int, int>> monos;
    for (int a = 0; a <= e; ++a)
      for (int b = 0; a + b <= e; ++b) monos.push_back({a, b});
    int rowsN = std::min(N, e * d + 1);
    std::vector<std::vector<Alg>> rows(rowsN, std::vector<Alg>(monos.size()));
    for (std::size_t m = 0; m < monos.size(); ++m) {
      auto prod = trunc_mul(ypw[monos[m].first], zpw[monos[m].second]);
      for (int n = 0; n < rowsN; ++n) rows[n][m] = prod[n];
    }
    auto ns = nullspace(rows, (int)monos.size());
    if (ns.empty()) continue;
    std::vector<Alg> coefs = ns[0];
    // scale so the first nonzero is 1
    for (auto& c : coefs)
      if (!c.is_zero()) {
        Alg s = c.inverse();
        for (auto& x : coefs) x *= s;
        break;
      }
    Field L = Kbase;
    for (auto& c : coefs) L = common_field(L, c.field());
    if (L && L != Kbase && L->parent && is_ancestor(Kbase, L->parent)) coefs = descend(coefs, L);
    BiPoly P;
    for (std::size_t m = 0; m < monos.size(); ++m)
      if (!coefs[m].is_zero()) P[monos[m]] = coefs[m];
    Form Ph = homogenize_x(P, e);
    if (exact_div(H, Ph)) return Ph;
    return std::nullopt;
  }
  return std::nullopt;
}

// one irreducible factor of G (deg >= 1)
Form find_factor(const Form& G) {
  int d = G.degree();
  if (d == 1) return G;
  for (int v = 0; v < 3; ++v) {
    Form xv = Form::var(v);
    if (exact_div(G, xv)) return xv;
  }
  Field K = G.field();
  for (auto& v : aux_points()) {
    if (G.eval(v).is_zero()) continue;
    int k = !v[2].is_zero() ? 2 : (!v[1].is_zero() ? 1 : 0);
    int a = k == 0 ? 1 : 0, b = k == 2 ? 1 : 2;
    Mat3 T;
    T[a][0] = Alg(1);
    T[b][1] = Alg(1);
    for (int i = 0; i < 3; ++i) T[i][2] = v[i];
    Mat3 Ti = inverse(T);
    Form H = G.compose(T);
    if (exact_div(H, Form::var(0))) return Form::linear(Ti[0]).normalized();
    BiPoly h = dehomogenize_x(H);
    auto back = [&](const Form& P) { return P.compose(Ti).normalized(); };
    for (int pass = 0; pass < 2; ++pass) {
      for (int s = 0; s < 24; ++s) {
        Alg y0((long)((s + 1) / 2 * (s % 2 ? 1 : -1)));
        std::vector<Alg> gc(d + 1);
        for (auto& [e, c] : h) gc[e.second] += c * y0.pow(e.first);
        UniPoly g(gc);
        auto fl = factor_over(g, K);
        auto& [phi, mu] = fl.front();
        if (pass == 0 && phi.degree() != 1) continue;
        if (pass == 1 && phi.degree() == 1) continue;
        Alg z0;
        Field L = K;
        if (phi.degree() == 1) {
          z0 = -phi.coeff(0) / phi.coeff(1);
        } else {
          auto [F2, r] = adjoin_root(K, phi);
          L = F2;
          z0 = r;
        }
        auto P = try_branch(H, h, y0, z0, mu, K);
        if (P) return back(*P);
      }
    }
  }
  throw InvariantError("absolute factorization failed");
}

bool form_less(const std::pair<Form, int>& a, const std::pair<Form, int>& b) {
  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
  auto i = a.first.terms().begin(), j = b.first.terms().begin();
  for (; i != a.first.terms().end() && j != b.first.terms().end(); ++i, ++j) {
    if (i->first != j->first) return i->first > j->first;
    int c = Alg::compare(i->second, j->second);
    if (c) return c < 0;
  }
  if (a.first.terms().size() != b.first.terms().size()) return a.first.terms().size() < b.first.terms().size();
  return a.second < b.second;
}

}  // namespace

Factorization factor(const Form& F) {
  if (F.is_zero()) throw DomainError("factor of zero form");
  if (F.degree() > limits().degree_cap) throw PrecisionError("degree exceeds cap");
  Factorization out;
  Form G = F;
  while (G.degree() > 0) {
    Form P = find_factor(G).normalized();
    int m = 0;
    while (true) {
      auto q = exact_div(G, P);
      if (!q) break;
      G = *q;
      ++m;
    }
    if (m == 0) throw InvariantError("factor does not divide");
    out.factors.push_back({P, m});
  }
  out.unit = G.leading_coeff();
  std::sort(out.factors.begin(), out.factors.end(), form_less);
  return out;
}

std::string factored_str(const Factorization& f, Namer* names) {
  std::string s;
  if (!f.unit.is_one()) s = needs_parens(f.unit) ? "(" + to_string(f.unit, names) + ")" : to_string(f.unit, names);
  // linear and monomial factors first, as usually written
  for (auto& [g, m] : f.factors) {
    std::string gs = g.str(names);
    if (g.terms().size() > 1) gs = "(" + gs + ")";
    if (m > 1) gs += "^" + std::to_string(m);
    if (!s.empty() && s != "-1") s += "*";
    if (s == "-1") s = "-";
    s += gs;
  }
  if (s.empty()) s = "1";
  return s;
}

}  // namespace pnc
