#pragma once
#include <vector>

#include "pnc/forms.hpp"

namespace pnc {

class PlaneCurve {
 public:
  explicit PlaneCurve(Form F);
  const Form& form() const { return F_; }
  int degree() const { return F_.degree(); }
  const Factorization& factorization() const { return fac_; }
  const Form& support() const { return support_; }
  std::vector<Vec3> linear_components() const;
  // nonlinear irreducible factors with multiplicity
  std::vector<std::pair<Form, int>> nonlinear_components() const;

 private:
  Form F_;
  Factorization fac_;
  Form support_;
};

struct Flag {
  Vec3 p;  // point, first nonzero coordinate 1
  Vec3 l;  // line through p
};

// N with N*e1 ~ p and the line N^{-T}... so that F(N X) has flag ((1:0:0), z=0)
Mat3 flag_frame(const Flag& f);
// a frame moving p to (1:0:0) only
Mat3 point_frame(const Vec3& p);
// (F o N)(1,y,z)
BiPoly local_equation(const Form& F, const Mat3& N);
int local_order(const BiPoly& f);

int multiplicity(const Form& F, const Vec3& p);

struct TangentCone {
  int m = 0;
  Form leading;                           // binary form in y,z in point-frame coordinates
  std::vector<std::pair<Vec3, int>> lines;  // lines through p in plane coordinates
  Field field;
};
TangentCone tangent_cone(const Form& F, const Vec3& p);

// common zeros of two forms without common components
std::vector<Vec3> solve_common(const Form& G, const Form& H);
std::vector<Vec3> singular_points(const PlaneCurve& C);
std::vector<Vec3> inflection_points(const PlaneCurve& C);
bool point_less(const Vec3& a, const Vec3& b);
std::string point_str(const Vec3& p, Namer* names = nullptr);
std::string line_str(const Vec3& l, Namer* names = nullptr);

}  // namespace pnc
