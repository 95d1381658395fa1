#include "pnc/arith.hpp"

#include <algorithm>
#include <sstream>

namespace pnc {

Limits& limits() {
  static Limits L;
  return L;
}

using Vec = std::vector<Rational>;

int field_height(const Field& f) { return f ? f->height : 0; }
std::size_t field_dim(const Field& f) { return f ? f->dim : 1; }

bool is_ancestor(const Field& a, const Field& b) {
  if (!a) return true;
  for (const TowerLevel* p = b.get(); p; p = p->parent.get())
    if (p == a.get()) return true;
  return false;
}

Field common_field(const Field& a, const Field& b) {
  if (a == b) return a;
  if (is_ancestor(a, b)) return b;
  if (is_ancestor(b, a)) return a;
  throw DomainError("mismatched towers");
}

namespace {

bool vzero(const Vec& v) {
  for (auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

void addto(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}
void subfrom(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
}

Vec mul_raw(const TowerLevel* L, const Vec& a, const Vec& b);
Vec inv_raw(const TowerLevel* L, const Vec& a);

std::vector<Vec> chunks(const Vec& a, int n, std::size_t D) {
  std::vector<Vec> out(n, Vec(D));
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 0; j < D; ++j) out[i][j] = a[i * D + j];
  return out;
}

Vec mul_raw(const TowerLevel* L, const Vec& a, const Vec& b) {
  if (!L) return {a[0] * b[0]};
  const TowerLevel* P = L->parent.get();
  std::size_t D = field_dim(L->parent);
  int n = L->degree;
  auto ac = chunks(a, n, D), bc = chunks(b, n, D);
  std::vector<bool> az(n), bz(n);
  for (int i = 0; i < n; ++i) az[i] = vzero(ac[i]), bz[i] = vzero(bc[i]);
  std::vector<Vec> prod(2 * n - 1, Vec(D));
  for (int i = 0; i < n; ++i) {
    if (az[i]) continue;
    for (int j = 0; j < n; ++j)
      if (!bz[j]) addto(prod[i + j], mul_raw(P, ac[i], bc[j]));
  }
  for (int k = 2 * n - 2; k >= n; --k) {
    if (vzero(prod[k])) continue;
    for (int l = 0; l < n; ++l)
      if (!vzero(L->raw[l])) subfrom(prod[k - n + l], mul_raw(P, prod[k], L->raw[l]));
  }
  Vec out(L->dim);
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 0; j < D; ++j) out[i * D + j] = prod[i][j];
  return out;
}

// polynomials over the parent level, as lists of chunks
using CPoly = std::vector<Vec>;

void ctrim(CPoly& p) {
  while (!p.empty() && vzero(p.back())) p.pop_back();
}

Vec inv_raw(const TowerLevel* L, const Vec& a) {
  if (!L) {
    if (sgn(a[0]) == 0) throw DomainError("division by zero");
    return {1 / a[0]};
  }
  const TowerLevel* P = L->parent.get();
  std::size_t D = field_dim(L->parent);
  int n = L->degree;
  CPoly r0 = L->raw, r1 = chunks(a, n, D);
  ctrim(r1);
  if (r1.empty()) throw DomainError("division by zero");
  CPoly s0, s1{[&] { Vec one(D); one[0] = 1; return one; }()};
  auto sub_mul = [&](CPoly x, const CPoly& q, const CPoly& y) {
    // x - q*y
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (vzero(q[i])) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (x.size() <= i + j) x.resize(i + j + 1, Vec(D));
        subfrom(x[i + j], mul_raw(P, q[i], y[j]));
      }
    }
    ctrim(x);
    return x;
  };
  while (r1.size() > 1) {
    // divide r0 by r1
    CPoly rem = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Vec(D));
    Vec li = inv_raw(P, r1.back());
    while (rem.size() >= r1.size()) {
      std::size_t sh = rem.size() - r1.size();
      Vec c = mul_raw(P, rem.back(), li);
      q[sh] = c;
      for (std::size_t j = 0; j < r1.size(); ++j) subfrom(rem[sh + j], mul_raw(P, c, r1[j]));
      rem.pop_back();
      ctrim(rem);
    }
    CPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw InvariantError("minimal polynomial not irreducible");
  }
  Vec ci = inv_raw(P, r1[0]);
  Vec out(L->dim);
  for (std::size_t i = 0; i < s1.size() && i < (std::size_t)n; ++i) {
    Vec v = mul_raw(P, s1[i], ci);
    for (std::size_t j = 0; j < D; ++j) out[i * D + j] = v[j];
  }
  return out;
}

Vec lift_vec(const Vec& v, std::size_t dim) {
  Vec out(dim);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace

Alg::Alg(Field f, std::vector<Rational> c) : f_(std::move(f)), c_(std::move(c)) {
  if (c_.size() != field_dim(f_)) throw InvariantError("bad element vector size");
}

Alg Alg::generator(const Field& f) {
  if (!f) throw DomainError("rationals have no generator");
  if (f->degree < 2) throw InvariantError("degenerate tower level");
  Vec v(f->dim);
  v[field_dim(f->parent)] = 1;
  return Alg(f, v);
}

bool Alg::is_zero() const { return vzero(c_); }
bool Alg::is_one() const { return c_[0] == 1 && is_rational(); }
bool Alg::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}
Rational Alg::rational() const {
  if (!is_rational()) throw DomainError("not rational");
  return c_[0];
}

Alg Alg::lifted(const Field& f) const {
  if (f == f_) return *this;
  if (!is_ancestor(f_, f)) throw DomainError("mismatched towers");
  return Alg(f, lift_vec(c_, field_dim(f)));
}

Alg Alg::reduced() const {
  Field f = f_;
  std::vector<Rational> c = c_;
  while (f) {
    std::size_t D = field_dim(f->parent);
    bool below = true;
    for (std::size_t i = D; i < c.size() && below; ++i) below = c[i] == 0;
    if (!below) break;
    c.resize(D);
    f = f->parent;
  }
  return f ? Alg(f, c) : Alg(c[0]);
}

Alg Alg::inverse() const { return Alg(f_, inv_raw(f_.get(), c_)); }

Alg Alg::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Alg r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Alg Alg::operator-() const {
  Alg r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Alg& Alg::operator+=(const Alg& o) {
  Field f = common_field(f_, o.f_);
  if (f != f_) *this = lifted(f);
  addto(c_, o.c_);
  return *this;
}
Alg& Alg::operator-=(const Alg& o) {
  Field f = common_field(f_, o.f_);
  if (f != f_) *this = lifted(f);
  subfrom(c_, o.c_);
  return *this;
}
Alg& Alg::operator*=(const Alg& o) {
  if (o.f_ == nullptr) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (f_ == nullptr) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  Field f = common_field(f_, o.f_);
  Vec a = lift_vec(c_, field_dim(f)), b = lift_vec(o.c_, field_dim(f));
  c_ = mul_raw(f.get(), a, b);
  f_ = f;
  return *this;
}
Alg& Alg::operator/=(const Alg& o) {
  if (o.is_rational()) {
    Rational q = o.rational();
    if (sgn(q) == 0) throw DomainError("division by zero");
    for (auto& x : c_) x /= q;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Alg& a, const Alg& b) {
  Field f = common_field(a.f_, b.f_);
  std::size_t D = field_dim(f);
  for (std::size_t i = 0; i < D; ++i) {
    const Rational& x = i < a.c_.size() ? a.c_[i] : Rational(0);
    const Rational& y = i < b.c_.size() ? b.c_[i] : Rational(0);
    if (x != y) return false;
  }
  return true;
}

bool alg_equals(const Alg& a, const Alg& b) { return a == b; }

int Alg::compare(const Alg& a, const Alg& b) {
  std::size_t D = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < D; ++i) {
    Rational x = i < a.c_.size() ? a.c_[i] : Rational(0);
    Rational y = i < b.c_.size() ? b.c_[i] : Rational(0);
    int s = cmp(x, y);
    if (s) return s < 0 ? -1 : 1;
  }
  return 0;
}

std::string Namer::name(const TowerLevel* L) {
  auto it = names_.find(L);
  if (it != names_.end()) return it->second;
  if (L->parent) name(L->parent.get());
  std::string n = "g" + std::to_string(order_.size() + 1);
  names_[L] = n;
  order_.push_back(L);
  return n;
}

void Namer::preset(const TowerLevel* L, const std::string& n) {
  if (names_.count(L)) return;
  names_[L] = n;
  order_.push_back(L);
}

std::string Namer::header() {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const TowerLevel* L = order_[i];
    std::string n = names_[L];
    std::string poly;
    for (int k = L->degree; k >= 0; --k) {
      const Alg& c = L->minpoly[k];
      if (c.is_zero()) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? n : n + "^" + std::to_string(k));
      std::string cs = to_string(c, this);
      std::string term;
      if (mono.empty())
        term = cs;
      else if (c.is_one())
        term = mono;
      else if (c == Alg(-1))
        term = "-" + mono;
      else
        term = (needs_parens(c) ? "(" + cs + ")" : cs) + "*" + mono;
      if (!poly.empty() && term[0] != '-') poly += "+";
      poly += term;
    }
    out += n + ": " + poly + "=0\n";
  }
  return out;
}

std::string to_string(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

bool needs_parens(const Alg& a) {
  int nz = 0;
  for (auto& x : a.coeffs())
    if (sgn(x)) ++nz;
  return nz > 1;
}

std::string to_string(const Alg& a, Namer* names) {
  Namer local;
  if (!names) names = &local;
  const auto& c = a.coeffs();
  std::vector<const TowerLevel*> chain;
  for (const TowerLevel* p = a.field().get(); p; p = p->parent.get()) chain.push_back(p);
  std::reverse(chain.begin(), chain.end());
  std::string out;
  for (std::size_t idx = c.size(); idx-- > 0;) {
    if (sgn(c[idx]) == 0) continue;
    std::string mono;
    std::size_t rest = idx;
    for (auto* L : chain) {
      int e = rest % L->degree;
      rest /= L->degree;
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += names->name(L);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string term;
    if (mono.empty())
      term = to_string(c[idx]);
    else if (c[idx] == 1)
      term = mono;
    else if (c[idx] == -1)
      term = "-" + mono;
    else
      term = to_string(c[idx]) + "*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace pnc
