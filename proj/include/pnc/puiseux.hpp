#pragma once
#include <vector>

#include "pnc/curve.hpp"

namespace pnc {

struct PuiseuxTerm {
  Rational exp;
  Alg coeff;
};

struct PuiseuxBranch {
  std::vector<PuiseuxTerm> terms;  // nonzero coefficients, increasing exponents
  Rational order;                  // every term with exponent <= order is present
  Rational separation;             // exponent at which the branch became isolated
  int ramification = 1;
  bool swapped = false;  // y = g(z), tangent to y=0
  bool exact = false;    // finite sum, no truncation
  int component = 0;     // index into the curve factorization
  Alg coeff_at(const Rational& e) const;
  Rational leading_exp() const;  // exponent of the first term (undefined if empty)
  std::string str(Namer* names = nullptr) const;
};

// all formal branches at the flag point, in flag coordinates; order 0 means automatic
std::vector<PuiseuxBranch> puiseux_branches(const PlaneCurve& C, const Flag& flag, const Rational& order);
std::vector<PuiseuxBranch> puiseux_local(const BiPoly& f, const Rational& order, long cap);

struct CharacteristicDatum {
  Rational C;
  std::vector<int> cluster;  // indices into the branch list
  Rational lambda0;
  Alg gamma0;
  Alg gamma_mid;                  // coefficient of y^{(lambda0+C)/2}
  std::vector<Alg> gamma_C;       // per cluster branch
  std::vector<PuiseuxTerm> shared;  // common terms below C
  int S() const { return (int)cluster.size(); }
};

std::vector<CharacteristicDatum> characteristics(const std::vector<PuiseuxBranch>& branches);

}  // namespace pnc
