#pragma once
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "pnc/arith.hpp"

namespace pnc {

// dense univariate polynomial over a tower, low degree first
class UniPoly {
 public:
  static constexpr int kMinusInf = INT_MIN;

  UniPoly() = default;
  explicit UniPoly(std::vector<Alg> c);
  UniPoly(const Alg& c) : UniPoly(std::vector<Alg>{c}) {}
  static UniPoly monomial(const Alg& c, int k);
  static UniPoly x() { return monomial(Alg(1), 1); }

  int degree() const { return c_.empty() ? kMinusInf : (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  int size() const { return (int)c_.size(); }
  const std::vector<Alg>& coeffs() const { return c_; }
  Alg coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Alg(0); }
  const Alg& lc() const;
  // lowest index with nonzero coefficient; INT_MAX for zero
  int valuation() const;
  Field field() const;

  Alg eval(const Alg& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly shift(const Alg& a) const;  // p(x+a)
  UniPoly truncated(int n) const;     // mod x^n
  UniPoly shifted_down(int k) const;  // divide by x^k, dropping lower terms
  UniPoly compose(const UniPoly& q) const;
  UniPoly pow(int e) const;
  UniPoly lifted(const Field& f) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Alg& a);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Alg& b) { return a *= b; }
  friend UniPoly operator*(const Alg& b, UniPoly a) { return a *= b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  static int compare(const UniPoly& a, const UniPoly& b);
  std::string str(const std::string& var = "w", Namer* names = nullptr) const;

 private:
  void trim();
  std::vector<Alg> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);  // monic
// returns (g, s, t) with s*a + t*b = g monic
struct XGcd {
  UniPoly g, s, t;
};
XGcd xgcd(const UniPoly& a, const UniPoly& b);
Alg resultant(const UniPoly& a, const UniPoly& b);
// Yun decomposition: list of (squarefree monic part, multiplicity)
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);

// interpolation through (x_i, y_i)
UniPoly interpolate(const std::vector<Alg>& xs, const std::vector<Alg>& ys);

}  // namespace pnc
