#pragma once
#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pnc/common.hpp"

namespace pnc {

using Integer = mpz_class;
using Rational = mpq_class;

struct TowerLevel;
// nullptr is the rationals
using Field = std::shared_ptr<const TowerLevel>;

int field_height(const Field& f);
std::size_t field_dim(const Field& f);
bool is_ancestor(const Field& a, const Field& b);  // a below or equal to b
Field common_field(const Field& a, const Field& b);

// element of a tower, stored as a dense rational vector in mixed radix
// (lower generators vary fastest)
class Alg {
 public:
  Alg() : c_{Rational(0)} {}
  Alg(long v) : c_{Rational(v)} {}
  Alg(const Rational& q) : c_{q} {}
  Alg(const Integer& z) : c_{Rational(z)} {}
  Alg(Field f, std::vector<Rational> c);

  static Alg generator(const Field& f);

  const Field& field() const { return f_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational() const;
  Alg lifted(const Field& f) const;
  // same element in the lowest level that contains it
  Alg reduced() const;
  Alg inverse() const;
  Alg pow(long e) const;

  Alg operator-() const;
  Alg& operator+=(const Alg& o);
  Alg& operator-=(const Alg& o);
  Alg& operator*=(const Alg& o);
  Alg& operator/=(const Alg& o);
  friend Alg operator+(Alg a, const Alg& b) { return a += b; }
  friend Alg operator-(Alg a, const Alg& b) { return a -= b; }
  friend Alg operator*(Alg a, const Alg& b) { return a *= b; }
  friend Alg operator/(Alg a, const Alg& b) { return a /= b; }
  friend bool operator==(const Alg& a, const Alg& b);
  friend bool operator!=(const Alg& a, const Alg& b) { return !(a == b); }

  // total order used only for deterministic sorting
  static int compare(const Alg& a, const Alg& b);

 private:
  Field f_;
  std::vector<Rational> c_;
};

bool alg_equals(const Alg& a, const Alg& b);

class UniPoly;

struct TowerLevel {
  Field parent;
  int height = 1;
  int degree = 1;
  std::size_t dim = 1;
  std::vector<Alg> minpoly;  // monic, low to high, coefficients in parent
  std::vector<std::vector<Rational>> raw;  // minpoly lifted to the parent, for the kernels
};

// names generators g1, g2, ... in order of first appearance
class Namer {
 public:
  std::string name(const TowerLevel* L);
  std::vector<const TowerLevel*> order() const { return order_; }
  std::string header();
  void preset(const TowerLevel* L, const std::string& n);

 private:
  std::map<const TowerLevel*, std::string> names_;
  std::vector<const TowerLevel*> order_;
};

std::string to_string(const Alg& a, Namer* names = nullptr);
std::string to_string(const Rational& q);
// true when the printed form needs brackets as a factor
bool needs_parens(const Alg& a);

}  // namespace pnc
