#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pnc/linalg.hpp"
#include "pnc/upoly.hpp"

namespace pnc {

using Exp = std::array<int, 3>;
// descending lex in (i,j,k): x-heavy monomials first
struct ExpOrder {
  bool operator()(const Exp& a, const Exp& b) const { return a > b; }
};

class Form {
 public:
  using Terms = std::map<Exp, Alg, ExpOrder>;
  Form() = default;
  explicit Form(int d) : d_(d) {}
  Form(const Alg& c) : d_(0) { add(Exp{0, 0, 0}, c); }
  static Form monomial(const Alg& c, const Exp& e);
  static Form var(int i);
  static Form linear(const Vec3& l);

  int degree() const { return d_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Alg coeff(const Exp& e) const;
  void add(const Exp& e, const Alg& c);
  Field field() const;
  const Alg& leading_coeff() const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  friend Form operator*(Form a, const Alg& c);
  friend bool operator==(const Form& a, const Form& b);
  Form pow(int e) const;

  Alg eval(const Vec3& p) const;
  Form diff(int var) const;
  // F(M X) for constant M
  Form compose(const Mat3& M) const;
  Form normalized() const;
  bool proportional(const Form& o) const;
  // linear form as its coefficient vector
  Vec3 as_line() const;

  std::string str(Namer* names = nullptr) const;

 private:
  int d_ = 0;
  Terms t_;
};

std::optional<Form> exact_div(const Form& a, const Form& b);
Form hessian(const Form& F);

// bivariate polynomial, exponents (j,k) for y^j z^k
using BiPoly = std::map<std::pair<int, int>, Alg>;
BiPoly dehomogenize_x(const Form& F);  // F(1,y,z)
Form homogenize_x(const BiPoly& p, int d);
BiPoly bimul(const BiPoly& a, const BiPoly& b);
// f(y0+Y, z0+Z)
BiPoly bishift(const BiPoly& f, const Alg& y0, const Alg& z0);
// power series Z(Y) with Z(0)=0 solving f(Y,Z)=0, f(0,0)=0, f_Z(0,0)!=0; coefficients 0..n-1
std::vector<Alg> implicit_series(const BiPoly& f, int n);

// polynomial matrices in t
using PolyMat = std::array<std::array<UniPoly, 3>, 3>;

class GermExpansion {
 public:
  int degree = 0;
  std::map<Exp, UniPoly, ExpOrder> coeffs;
};

GermExpansion substitute(const Form& F, const PolyMat& M);
std::pair<int, Form> dominant_part(const GermExpansion& E);

struct Factorization {
  Alg unit;
  std::vector<std::pair<Form, int>> factors;  // normalized irreducible factors
  Form expand() const;
};
Factorization factor(const Form& F);
std::string factored_str(const Factorization& f, Namer* names = nullptr);

}  // namespace pnc
