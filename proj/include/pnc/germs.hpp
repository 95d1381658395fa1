#pragma once
#include <string>

#include "pnc/newton.hpp"
#include "pnc/puiseux.hpp"

namespace pnc {

class Germ {
 public:
  Germ() = default;
  explicit Germ(PolyMat m, bool check = true);
  const PolyMat& mat() const { return m_; }
  const UniPoly& at(int i, int j) const { return m_[i][j]; }
  Mat3 center() const;
  int center_rank() const;
  UniPoly det() const;
  Field field() const;
  Germ left(const Mat3& A) const;
  Germ right(const Mat3& A) const;
  Germ operator*(const Germ& o) const;
  Germ reparam(const UniPoly& tau) const;  // alpha(tau(t))
  // rank-1 center u v^T: kernel line v, image point u
  Vec3 kernel_line() const;
  Vec3 image_point() const;
  std::string str(Namer* names = nullptr) const;

 private:
  PolyMat m_;
};

PolyMat const_polymat(const Mat3& A);
Germ diag_germ(int a, int b, int c);

Germ marker_type_I(const PlaneCurve& C, const Vec3& L);
struct GeneralPoint {
  Vec3 p;
  Vec3 tangent;
};
GeneralPoint general_point(const PlaneCurve& C, const Form& component);
Germ marker_type_II(const PlaneCurve& C, const Vec3& p);
Germ marker_type_III(const PlaneCurve& C, const Vec3& p);
Germ marker_type_IV(const PlaneCurve& C, const Flag& flag, const PolygonSide& side);

struct TypeVGerm {
  Germ germ;   // in plane coordinates, frame * local
  Germ local;  // in flag coordinates
  Mat3 frame;
  int a = 0, b = 0, c = 0;
};
TypeVGerm marker_type_V(const PlaneCurve& C, const Flag& flag, const CharacteristicDatum& d);

struct StandardForm {
  int b = 0, c = 0;
  UniPoly q, r, s;
  Mat3 H, M;
  UniPoly tau;      // reparametrization: the input along t -> tau(t) is equivalent to reconstruct()
  int reduced = 1;  // gcd(b,c) when q=r=s=0 (t -> t^(1/gcd) would give coprime exponents)
  Germ reconstruct() const;
  std::string str(Namer* names = nullptr) const;
};
StandardForm normalize_germ(const Germ& g);
bool germ_equivalent_limits(const Germ& a, const Germ& b, const Form& F);

}  // namespace pnc
