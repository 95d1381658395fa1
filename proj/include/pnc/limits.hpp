#pragma once
#include <string>

#include "pnc/germs.hpp"

namespace pnc {

struct LimitCurve {
  Form form;       // normalized: leading coefficient 1
  int order = 0;   // t-order of the dominant term
  std::string germ;  // provenance
  std::string curve;
};

LimitCurve apply_germ(const Form& F, const Germ& g);

// special germ rows (1,0,0),(t^a,t^b,0),(r,s*t^b,t^c) with 0 < a < b <= c
struct SpecialGerm {
  int a = 0, b = 0, c = 0;
  UniPoly r, s;
  Germ germ() const;
};
SpecialGerm as_special(const Germ& g);  // throws DomainError if not of that shape

// limit of one formal branch (flag coordinates) along a special germ
Form branch_limit(const PuiseuxBranch& br, const SpecialGerm& g);

// product of the branch limits (each dehomogenized at x=1), homogenized to degree d
Form branch_product(const std::vector<PuiseuxBranch>& brs, const SpecialGerm& g, int d);

// star of lines through a point on the kernel line of a rank-1 center
bool is_kernel_star(const Form& L, const Germ& g);

}  // namespace pnc
