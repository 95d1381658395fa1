#pragma once
#include <optional>
#include <string>
#include <vector>

#include "pnc/classify.hpp"
#include "pnc/limits.hpp"

namespace pnc {

enum class MarkerType { I = 1, II, III, IV, V };
std::string type_name(MarkerType t);

struct Candidate {
  MarkerType type = MarkerType::I;
  Vec3 point;  // base point; for type I the line itself
  std::optional<Vec3> line;
  Form component;  // types I, II
  int b = 0, c = 0, S = 0;  // type IV side, type V exponents
  Rational C;               // type V
  Germ germ;
  LimitCurve limit;
  std::string feature(Namer* names = nullptr) const;
};

struct PNCComponent {
  MarkerType type = MarkerType::I;
  std::vector<Candidate> reps;  // merged representatives, first is canonical
  const Candidate& rep() const { return reps.front(); }
  Factorization limit_factors;
  SmallOrbitClass cls;
};

struct DroppedCandidate {
  Candidate cand;
  std::string reason;  // multiple-line, kernel-star, double-conic, conic-support, single-conic
};

struct PNCResult {
  std::vector<PNCComponent> components;
  std::vector<DroppedCandidate> dropped;
};

PNCResult enumerate_components(const PlaneCurve& C);
std::optional<std::string> exclusion_check(const PlaneCurve& C, const Candidate& cand);
std::vector<PNCComponent> merge_components(std::vector<Candidate> cands);
// limits related by diag(1,s,u), possibly after swapping y and z
bool torus_related(const Form& A, const Form& B);

struct Boundary {
  std::vector<std::pair<LimitCurve, SmallOrbitClass>> limits;
  std::string star_family;
};
Boundary boundary(const PlaneCurve& C);
Boundary boundary(const PlaneCurve& C, const PNCResult& r);

}  // namespace pnc
