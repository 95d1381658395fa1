#include <algorithm>
#include <cstdint>
#include <random>

#include "pnc/factor.hpp"

namespace pnc::detail {

namespace {

using u64 = std::uint64_t;
using MP = std::vector<u64>;

void mtrim(MP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mpow(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}
u64 minv(u64 a, u64 p) { return mpow(a, p - 2, p); }

MP mmul(const MP& a, const MP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  MP r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

MP msub(MP a, const MP& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  mtrim(a);
  return a;
}

void mdivmod(const MP& a, const MP& b, MP& q, MP& r, u64 p) {
  r = a;
  mtrim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  u64 li = minv(b.back(), p);
  for (std::size_t k = r.size(); k-- >= b.size();) {
    u64 c = r[k] * li % p;
    q[k - b.size() + 1] = c;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j) r[k - b.size() + 1 + j] = (r[k - b.size() + 1 + j] + p - c * b[j] % p) % p;
    if (k == b.size() - 1) break;
  }
  r.resize(b.size() - 1);
  mtrim(r);
  mtrim(q);
}

MP mmod(const MP& a, const MP& b, u64 p) {
  MP q, r;
  mdivmod(a, b, q, r, p);
  return r;
}

MP mmonic(MP a, u64 p) {
  if (a.empty()) return a;
  u64 li = minv(a.back(), p);
  for (auto& x : a) x = x * li % p;
  return a;
}

MP mgcd(MP a, MP b, u64 p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    MP r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

// s*a + t*b = 1 for coprime a, b
void mxgcd(const MP& a, const MP& b, MP& s, MP& t, u64 p) {
  MP r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    MP q, r;
    mdivmod(r0, r1, q, r, p);
    MP s2 = msub(s0, mmul(q, s1, p), p), t2 = msub(t0, mmul(q, t1, p), p);
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  u64 li = minv(r0[0], p);
  for (auto& x : s0) x = x * li % p;
  for (auto& x : t0) x = x * li % p;
  s = s0;
  t = t0;
}

MP mpowmod(MP base, const Integer& e, const MP& f, u64 p) {
  MP r{1};
  base = mmod(base, f, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mmod(mmul(r, r, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mmod(mmul(r, base, p), f, p);
  }
  return r;
}

MP mderiv(const MP& a, u64 p) {
  MP r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  mtrim(r);
  return r;
}

void edf(const MP& g, int d, u64 p, std::mt19937_64& rng, std::vector<MP>& out) {
  int n = (int)g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  while (true) {
    MP a(n);
    for (auto& x : a) x = rng() % p;
    mtrim(a);
    if (a.size() < 2) continue;
    MP b = mpowmod(a, e, g, p);
    b = msub(b, MP{1}, p);
    MP u = mgcd(g, b, p);
    if (u.size() > 1 && u.size() < g.size()) {
      MP q, r;
      mdivmod(g, u, q, r, p);
      edf(u, d, p, rng, out);
      edf(mmonic(q, p), d, p, rng, out);
      return;
    }
  }
}

// monic squarefree f mod p -> monic irreducible factors
std::vector<MP> factor_modp(MP f, u64 p) {
  std::mt19937_64 rng(12345);
  std::vector<MP> out;
  MP h{0, 1};
  MP x{0, 1};
  int i = 0;
  while ((int)f.size() - 1 >= 2 * (i + 1)) {
    ++i;
    h = mpowmod(h, Integer((unsigned long)p), f, p);
    MP g = mgcd(f, msub(h, x, p), p);
    if (g.size() > 1) {
      edf(g, i, p, rng, out);
      MP q, r;
      mdivmod(f, g, q, r, p);
      f = q;
      h = mmod(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(mmonic(f, p));
  return out;
}

// ---- integer polynomial helpers ----

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zreduce(ZPoly a, const Integer& m) {
  for (auto& x : a) {
    x %= m;
    if (x < 0) x += m;
  }
  ztrim(a);
  return a;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  ztrim(a);
  return a;
}
ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

// division by monic b modulo m
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
  r = zreduce(a, m);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Integer(0));
  for (std::size_t k = r.size(); k-- >= b.size();) {
    Integer c = r[k];
    q[k - b.size() + 1] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[k - b.size() + 1 + j] -= c * b[j];
    for (auto& x : r) {
      x %= m;
      if (x < 0) x += m;
    }
    if (k == b.size() - 1) break;
  }
  r.resize(b.size() - 1);
  ztrim(r);
  q = zreduce(q, m);
}

ZPoly from_mp(const MP& a) {
  ZPoly r;
  for (auto x : a) r.push_back(Integer((unsigned long)x));
  return r;
}

MP to_mp(const ZPoly& a, u64 p) {
  MP r;
  Integer P((unsigned long)p);
  for (auto& x : a) {
    Integer y = x % P;
    if (y < 0) y += P;
    r.push_back(y.get_ui());
  }
  mtrim(r);
  return r;
}

void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  ZPoly e = zreduce(zsub(f, zmul(g, h)), m2);
  ZPoly q, r;
  zdivmod_monic(zmul(s, e), h, m2, q, r);
  ZPoly g2 = zreduce(zadd(zadd(g, zmul(t, e)), zmul(q, g)), m2);
  ZPoly h2 = zreduce(zadd(h, r), m2);
  ZPoly b = zreduce(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Integer(1)}), m2);
  ZPoly c, d;
  zdivmod_monic(zmul(s, b), h2, m2, c, d);
  s = zreduce(zsub(s, d), m2);
  t = zreduce(zsub(zsub(t, zmul(t, b)), zmul(c, g2)), m2);
  g = g2;
  h = h2;
}

void lift_tree(const ZPoly& F, const std::vector<MP>& facs, u64 p, const Integer& M, std::vector<ZPoly>& out) {
  if (facs.size() == 1) {
    Integer li;
    Integer lc = F.back();
    mpz_invert(li.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    ZPoly r = F;
    for (auto& x : r) x *= li;
    out.push_back(zreduce(r, M));
    return;
  }
  std::size_t half = facs.size() / 2;
  std::vector<MP> A(facs.begin(), facs.begin() + half), B(facs.begin() + half, facs.end());
  MP g0{to_mp(ZPoly{F.back()}, p)[0]}, h0{1};
  for (auto& a : A) g0 = mmul(g0, a, p);
  for (auto& b : B) h0 = mmul(h0, b, p);
  MP s0, t0;
  mxgcd(g0, h0, s0, t0, p);
  ZPoly g = from_mp(g0), h = from_mp(h0), s = from_mp(s0), t = from_mp(t0);
  Integer m((unsigned long)p);
  while (m < M) {
    Integer m2 = m * m;
    hensel_step(F, g, h, s, t, m2);
    m = m2;
  }
  g = zreduce(g, M);
  h = zreduce(h, M);
  lift_tree(g, A, p, M, out);
  lift_tree(h, B, p, M, out);
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (auto& x : a) g = gcd(g, x);
  return g;
}

ZPoly primitive(ZPoly a) {
  Integer g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& x : a) x /= g;
  return a;
}

// exact division over Z, false if not divisible
bool zdivides(const ZPoly& b, const ZPoly& a, ZPoly& q) {
  ZPoly r = a;
  if (r.size() < b.size()) return false;
  q.assign(r.size() - b.size() + 1, Integer(0));
  for (std::size_t k = r.size(); k-- >= b.size();) {
    if (r[k] != 0) {
      if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
      Integer c = r[k] / b.back();
      q[k - b.size() + 1] = c;
      for (std::size_t j = 0; j < b.size(); ++j) r[k - b.size() + 1 + j] -= c * b[j];
    }
    if (k == b.size() - 1) break;
  }
  for (auto& x : r)
    if (x != 0) return false;
  ztrim(q);
  return true;
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& f0) {
  ZPoly f = primitive(f0);
  ztrim(f);
  int n = (int)f.size() - 1;
  if (n <= 1) return {f};
  // choose a prime giving few modular factors
  std::vector<MP> best;
  u64 bestp = 0;
  int tried = 0;
  for (u64 p = 3; tried < 6; p += 2) {
    if (!is_prime_small(p)) continue;
    MP fp = to_mp(f, p);
    if ((int)fp.size() - 1 != n) continue;
    MP g = mgcd(fp, mderiv(fp, p), p);
    if (g.size() != 1) continue;
    ++tried;
    auto facs = factor_modp(mmonic(fp, p), p);
    if (bestp == 0 || facs.size() < best.size()) best = facs, bestp = p;
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};
  u64 p = bestp;
  // coefficient bound for factors, times the leading coefficient
  Integer maxc = 0;
  for (auto& x : f) maxc = std::max(maxc, Integer(abs(x)));
  Integer norm2 = 0;
  for (auto& x : f) norm2 += x * x;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer B = root * (Integer(1) << n) * abs(f.back()) * 2 + 1;
  Integer M((unsigned long)p);
  while (M <= B) M *= M;
  std::vector<ZPoly> lifted;
  lift_tree(f, best, p, M, lifted);

  std::vector<ZPoly> result;
  std::vector<ZPoly> rem = lifted;
  Integer half = M / 2;
  auto sym = [&](ZPoly a) {
    for (auto& x : a) {
      x %= M;
      if (x < 0) x += M;
      if (x > half) x -= M;
    }
    ztrim(a);
    return a;
  };
  std::size_t s = 1;
  while (2 * s <= rem.size()) {
    bool found = false;
    std::vector<int> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = (int)i;
    while (true) {
      ZPoly G{f.back()};
      for (int i : idx) G = zreduce(zmul(G, rem[i]), M);
      G = primitive(sym(G));
      ZPoly q;
      if (zdivides(G, f, q)) {
        result.push_back(G);
        f = q;
        std::vector<ZPoly> nr;
        for (int i = 0; i < (int)rem.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) nr.push_back(rem[i]);
        rem = nr;
        found = true;
        break;
      }
      // next combination
      int k = (int)s - 1;
      while (k >= 0 && idx[k] == (int)rem.size() - (int)s + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < (int)s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) result.push_back(primitive(f));
  return result;
}

}  // namespace pnc::detail
