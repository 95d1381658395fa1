#pragma once
#include <utility>
#include <vector>

#include "pnc/upoly.hpp"

namespace pnc {

using FactorList = std::vector<std::pair<UniPoly, int>>;

// monic irreducible factors over K (coefficients of p must live below K)
FactorList factor_over(const UniPoly& p, const Field& K);
bool is_irreducible_over(const UniPoly& p, const Field& K);

// new level over `tower` with the given irreducible monic minpoly (no checks)
Field make_level(const Field& tower, const UniPoly& minpoly);
std::pair<Field, Alg> adjoin_root(const Field& tower, const UniPoly& minpoly);

struct RootList {
  Field field;
  std::vector<std::pair<Alg, int>> roots;  // all lifted to `field`
};
RootList roots_in_closure(const UniPoly& p, const Field& tower);

namespace detail {
using ZPoly = std::vector<Integer>;
// irreducible factors of a primitive squarefree integer polynomial
std::vector<ZPoly> zassenhaus(const ZPoly& f);
}  // namespace detail

}  // namespace pnc
