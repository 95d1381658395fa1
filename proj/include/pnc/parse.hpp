#pragma once
#include <map>
#include <string>

#include "pnc/forms.hpp"

namespace pnc {

struct ParseContext {
  std::map<std::string, Alg> symbols;
  Field field;
  Namer names;
};

// optional `adjoin g: <poly in g>=0` lines (separated by newlines or ';'), then the form
Form parse_form(const std::string& src, ParseContext& ctx);
// matrix of polynomials in t: [[..],[..],[..]], diag(a,b,c), products with '*'
PolyMat parse_germ(const std::string& src, ParseContext& ctx);
// comma separated triple "(1:0:0)" or "1,0,0"
Vec3 parse_point(const std::string& src, ParseContext& ctx);

}  // namespace pnc
