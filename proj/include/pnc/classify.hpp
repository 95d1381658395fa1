#pragma once
#include <string>
#include <vector>

#include "pnc/forms.hpp"

namespace pnc {

struct SmallOrbitClass {
  int item = 0;  // 0: large orbit
  int dim = -1;
  std::string params;
  bool small() const { return item > 0; }
  std::string id() const;  // item_k or large-orbit
  std::string label() const;
};

SmallOrbitClass classify_limit(const Form& L);
SmallOrbitClass classify_limit(const Factorization& f);

int item_dimension(int item);
std::string item_label(int item);
// reflexive-transitive closure of the specialization arrows
bool specializes_to(int from, int to);
std::vector<int> direct_specializations(int item);

}  // namespace pnc
