#include "pnc/upoly.hpp"

#include <algorithm>

namespace pnc {

UniPoly::UniPoly(std::vector<Alg> c) : c_(std::move(c)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(const Alg& c, int k) {
  std::vector<Alg> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

const Alg& UniPoly::lc() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

int UniPoly::valuation() const {
  for (int i = 0; i < (int)c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return INT_MAX;
}

Field UniPoly::field() const {
  Field f;
  for (auto& a : c_) f = common_field(f, a.field());
  return f;
}

Alg UniPoly::eval(const Alg& x) const {
  Alg r(0);
  for (int i = (int)c_.size() - 1; i >= 0; --i) r = r * x + c_[i];
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<Alg> v;
  for (int i = 1; i < (int)c_.size(); ++i) v.push_back(c_[i] * Alg(i));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  Alg li = lc().inverse();
  UniPoly r = *this;
  for (auto& a : r.c_) a *= li;
  return r;
}

UniPoly UniPoly::shift(const Alg& a) const {
  // Horner in the shifted variable
  UniPoly r, lin(std::vector<Alg>{a, Alg(1)});
  for (int i = (int)c_.size() - 1; i >= 0; --i) r = r * lin + UniPoly(c_[i]);
  return r;
}

UniPoly UniPoly::truncated(int n) const {
  std::vector<Alg> v(c_.begin(), c_.begin() + std::min<int>(std::max(n, 0), c_.size()));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::shifted_down(int k) const {
  if (k <= 0) return *this;
  if (k >= (int)c_.size()) return UniPoly();
  return UniPoly(std::vector<Alg>(c_.begin() + k, c_.end()));
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly r;
  for (int i = (int)c_.size() - 1; i >= 0; --i) r = r * q + UniPoly(c_[i]);
  return r;
}

UniPoly UniPoly::pow(int e) const {
  UniPoly r(Alg(1)), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

UniPoly UniPoly::lifted(const Field& f) const {
  UniPoly r = *this;
  for (auto& a : r.c_) a = a.lifted(f);
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Alg> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) v[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(v);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Alg& a) {
  for (auto& x : c_) x *= a;
  trim();
  return *this;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

int UniPoly::compare(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int s = Alg::compare(a.c_[i], b.c_[i]);
    if (s) return s;
  }
  return 0;
}

std::string UniPoly::str(const std::string& var, Namer* names) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Alg& c = c_[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
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

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Alg> r = a.coeffs(), q(a.degree() - b.degree() + 1);
  Alg li = b.lc().inverse();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    Alg c = r[k] * li;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j)
      if (!b.coeffs()[j].is_zero()) r[k - db + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XGcd xgcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b, s0(Alg(1)), s1, t0, t1(Alg(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Alg li = r0.lc().inverse();
  return {r0 * li, s0 * li, t0 * li};
}

Alg resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return Alg(0);
  int da = a.degree(), db = b.degree();
  if (da == 0) return a.lc().pow(db);
  if (db == 0) return b.lc().pow(da);
  UniPoly r = a % b;
  if (r.is_zero()) return Alg(0);
  Alg sign = ((long)da * db) % 2 ? Alg(-1) : Alg(1);
  return sign * b.lc().pow(da - r.degree()) * resultant(b, r);
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() <= 0) return out;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = exact_div(f, a), c = exact_div(fp, a);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    UniPoly b2 = exact_div(b, g);
    UniPoly c2 = exact_div(d, g);
    if (g.degree() > 0) out.push_back({g, i});
    b = std::move(b2);
    d = c2 - b.derivative();
    ++i;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  UniPoly r(Alg(1));
  for (auto& [g, m] : squarefree_decomposition(p)) r *= g;
  return r;
}

UniPoly interpolate(const std::vector<Alg>& xs, const std::vector<Alg>& ys) {
  std::size_t n = xs.size();
  std::vector<Alg> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UniPoly r;
  for (std::size_t i = n; i-- > 0;) {
    r = r * UniPoly(std::vector<Alg>{-xs[i], Alg(1)}) + UniPoly(dd[i]);
  }
  return r;
}

}  // namespace pnc
