#include "pnc/puiseux.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "pnc/factor.hpp"
#include "pnc/newton.hpp"

namespace pnc {

Alg PuiseuxBranch::coeff_at(const Rational& e) const {
  for (auto& t : terms)
    if (t.exp == e) return t.coeff;
  return Alg(0);
}

Rational PuiseuxBranch::leading_exp() const { return terms.empty() ? Rational(0) : terms[0].exp; }

std::string PuiseuxBranch::str(Namer* names) const {
  std::string v = swapped ? "z" : "y";
  std::string out = (swapped ? "y = " : "z = ");
  std::string body;
  for (auto& t : terms) {
    std::string cs = to_string(t.coeff, names);
    std::string mono = v;
    if (t.exp != 1) mono += "^" + (t.exp.get_den() == 1 ? to_string(t.exp) : "(" + to_string(t.exp) + ")");
    std::string term;
    if (t.coeff.is_one())
      term = mono;
    else if (t.coeff == Alg(-1))
      term = "-" + mono;
    else
      term = (needs_parens(t.coeff) ? "(" + cs + ")" : cs) + "*" + mono;
    if (!body.empty() && term[0] != '-') body += " + ";
    else if (!body.empty()) body += " ";
    body += term;
  }
  if (body.empty()) body = "0";
  out += body;
  if (!exact) out += " + O(" + v + "^" + (order.get_den() == 1 ? to_string(order) : "(" + to_string(order) + ")") + ")";
  return out;
}

namespace {

struct State {
  BiPoly f;  // in (u, z_cur), y = u^Q
  int Q = 1;
  Rational E = 0;  // z = terms + y^E * z_cur
  std::vector<PuiseuxTerm> terms;
};

// f(v^q, v^p (g + z)) / v^w0
BiPoly substitute_side(const BiPoly& f, int p, int q, const Alg& g, long w0) {
  BiPoly r;
  for (auto& [e, c] : f) {
    auto [j, k] = e;
    long w = (long)q * j + (long)p * k - w0;
    // (g+z)^k
    Integer bin = 1;
    for (int i = 0; i <= k; ++i) {
      Alg t = c * Alg(Rational(bin)) * g.pow(k - i);
      if (!t.is_zero()) {
        auto& slot = r[{(int)w, i}];
        slot += t;
      }
      bin = bin * (k - i) / (i + 1);
    }
  }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

void finish(State s, bool exact, const Rational& sep, const Rational& order, std::vector<PuiseuxBranch>& out) {
  PuiseuxBranch b;
  b.terms = std::move(s.terms);
  b.exact = exact;
  b.separation = sep;
  b.order = exact ? Rational(0) : std::max(order, sep);
  int e = 1;
  for (auto& t : b.terms) e = std::lcm(e, (int)t.exp.get_den().get_si());
  b.ramification = e;
  out.push_back(std::move(b));
}

void expand(State s, bool top, const Rational& order, long cap, std::vector<PuiseuxBranch>& out) {
  int k0 = INT_MAX;
  for (auto& [e, c] : s.f) k0 = std::min(k0, e.second);
  if (k0 > 0 && k0 != INT_MAX) {
    for (int i = 0; i < k0; ++i) finish(s, true, s.E, order, out);
    BiPoly g;
    for (auto& [e, c] : s.f) g[{e.first, e.second - k0}] = c;
    s.f = g;
  }
  NewtonPolygon np = newton_polygon(s.f);
  for (auto& side : np.sides) {
    int dj = side.j1 - side.j0, dk = side.k0 - side.k1;
    int gq = std::gcd(dj, dk);
    int p = dj / gq, q = dk / gq;  // lambda = p/q in u units
    Rational lam_y = Rational(p, q) / s.Q;
    if (top && lam_y < 1) continue;
    // characteristic polynomial sum a_jk w^(k-k1) over the side
    std::vector<Alg> phi(dk + 1);
    long w0 = (long)q * side.j0 + (long)p * side.k0;
    for (auto& [e, c] : s.f)
      if ((long)q * e.first + (long)p * e.second == w0) phi[e.second - side.k1] += c;
    Field fld;
    for (auto& [e, c] : s.f) fld = common_field(fld, c.field());
    auto rl = roots_in_closure(UniPoly(phi), fld);
    for (auto& [g, mu] : rl.roots) {
      State n;
      n.f = substitute_side(s.f, p, q, g, w0);
      n.Q = s.Q * q;
      n.E = s.E + lam_y;
      n.terms = s.terms;
      n.terms.push_back({n.E, g});
      if (n.E > cap) throw PrecisionError("Puiseux expansion exceeded the order cap");
      if (mu == 1) {
        bool zero_root = true;
        for (auto& [e, c] : n.f)
          if (e.second == 0) zero_root = false;
        if (zero_root) {
          finish(n, true, n.E, order, out);
          continue;
        }
        Rational need = (order - n.E) * n.Q;
        long N = need > 0 ? Integer(need.get_num() / need.get_den()).get_si() + 1 : 1;
        std::vector<Alg> z = implicit_series(n.f, (int)N);
        for (int i = 1; i < (int)N; ++i)
          if (!z[i].is_zero()) n.terms.push_back({n.E + Rational(i, n.Q), z[i]});
        // exact if the truncated series solves f
        finish(n, false, n.E, order, out);
      } else {
        expand(n, false, order, cap, out);
      }
    }
  }
}

bool branch_less(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  if (a.swapped != b.swapped) return !a.swapped;
  if (a.terms.empty() != b.terms.empty()) return a.terms.empty();
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms[i].exp != b.terms[i].exp) return a.terms[i].exp < b.terms[i].exp;
    int c = Alg::compare(a.terms[i].coeff, b.terms[i].coeff);
    if (c) return c < 0;
  }
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
  return a.component < b.component;
}

}  // namespace

std::vector<PuiseuxBranch> puiseux_local(const BiPoly& f, const Rational& order, long cap) {
  std::vector<PuiseuxBranch> out;
  if (f.empty() || f.count({0, 0})) return out;
  State s;
  s.f = f;
  expand(s, true, order, cap, out);
  BiPoly sw;
  for (auto& [e, c] : f) sw[{e.second, e.first}] = c;
  State t;
  t.f = sw;
  std::vector<PuiseuxBranch> so;
  // swapped orientation: only branches with lambda > 1
  {
    int k0 = INT_MAX;
    for (auto& [e, c] : t.f) k0 = std::min(k0, e.second);
    if (k0 > 0 && k0 != INT_MAX) {
      for (int i = 0; i < k0; ++i) finish(t, true, Rational(0), order, so);
      BiPoly g;
      for (auto& [e, c] : t.f) g[{e.first, e.second - k0}] = c;
      t.f = g;
    }
    // reuse expand with a strict filter by dropping lambda == 1 sides
    std::vector<PuiseuxBranch> tmp;
    expand(t, true, order, cap, tmp);
    for (auto& b : tmp)
      if (!b.terms.empty() && b.terms[0].exp > 1) so.push_back(b);
  }
  for (auto& b : so) b.swapped = true, out.push_back(b);
  return out;
}

std::vector<PuiseuxBranch> puiseux_branches(const PlaneCurve& C, const Flag& flag, const Rational& order) {
  int d = C.degree();
  long cap = limits().puiseux_order_cap > 0 ? limits().puiseux_order_cap : 4L * d * d;
  Rational ord = order;
  if (ord > cap) throw PrecisionError("requested order exceeds the Puiseux order cap");
  Mat3 N = flag_frame(flag);
  std::vector<PuiseuxBranch> out;
  const auto& facs = C.factorization().factors;
  for (std::size_t i = 0; i < facs.size(); ++i) {
    BiPoly f = local_equation(facs[i].first, N);
    auto bs = puiseux_local(f, ord, cap);
    for (auto& b : bs) {
      b.component = (int)i;
      for (int r = 0; r < facs[i].second; ++r) out.push_back(b);
    }
  }
  std::stable_sort(out.begin(), out.end(), branch_less);
  return out;
}

std::vector<CharacteristicDatum> characteristics(const std::vector<PuiseuxBranch>& br) {
  std::vector<int> tang;
  for (int i = 0; i < (int)br.size(); ++i)
    if (!br[i].swapped && !br[i].terms.empty() && br[i].terms[0].exp > 1) tang.push_back(i);
  // first differing exponent, or nullopt if equal within precision
  auto differ = [&](const PuiseuxBranch& a, const PuiseuxBranch& b) -> std::optional<Rational> {
    std::size_t i = 0, j = 0;
    Rational lim = std::min(a.exact ? Rational(1 << 30) : a.order, b.exact ? Rational(1 << 30) : b.order);
    while (i < a.terms.size() || j < b.terms.size()) {
      Rational ea = i < a.terms.size() ? a.terms[i].exp : Rational(1 << 30);
      Rational eb = j < b.terms.size() ? b.terms[j].exp : Rational(1 << 30);
      Rational e = std::min(ea, eb);
      if (e > lim) return std::nullopt;
      Alg ca = ea == e ? a.terms[i].coeff : Alg(0);
      Alg cb = eb == e ? b.terms[j].coeff : Alg(0);
      if (ca != cb) return e;
      if (ea == e) ++i;
      if (eb == e) ++j;
    }
    return std::nullopt;
  };
  std::vector<CharacteristicDatum> out;
  std::vector<Rational> Cs;
  for (std::size_t x = 0; x < tang.size(); ++x)
    for (std::size_t y = x + 1; y < tang.size(); ++y) {
      const auto& A = br[tang[x]];
      const auto& B = br[tang[y]];
      if (A.terms[0].exp != B.terms[0].exp || A.terms[0].coeff != B.terms[0].coeff) continue;
      auto c = differ(A, B);
      if (c && *c > A.terms[0].exp && std::find(Cs.begin(), Cs.end(), *c) == Cs.end()) Cs.push_back(*c);
    }
  std::sort(Cs.begin(), Cs.end());
  for (auto& C : Cs) {
    std::vector<bool> used(br.size());
    for (int i : tang) {
      if (used[i]) continue;
      std::vector<int> cl{i};
      used[i] = true;
      for (int j : tang) {
        if (used[j]) continue;
        auto c = differ(br[i], br[j]);
        if (!c || *c >= C) cl.push_back(j), used[j] = true;
      }
      if (cl.size() < 2) continue;
      // distinct coefficients at C
      std::vector<Alg> gc;
      for (int k : cl) gc.push_back(br[k].coeff_at(C));
      bool two = false;
      for (auto& g : gc)
        if (g != gc[0]) two = true;
      if (!two) continue;
      CharacteristicDatum dt;
      dt.C = C;
      dt.cluster = cl;
      dt.lambda0 = br[i].terms[0].exp;
      dt.gamma0 = br[i].terms[0].coeff;
      dt.gamma_mid = br[i].coeff_at((dt.lambda0 + C) / 2);
      dt.gamma_C = gc;
      for (auto& t : br[i].terms)
        if (t.exp < C) dt.shared.push_back(t);
      out.push_back(dt);
    }
  }
  return out;
}

}  // namespace pnc
