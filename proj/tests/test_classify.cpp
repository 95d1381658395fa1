#include "doctest.h"
#include "pnc/classify.hpp"
#include "pnc/parse.hpp"

using namespace pnc;

static int item(const std::string& s) {
  ParseContext c;
  return classify_limit(parse_form(s, c)).item;
}

TEST_CASE("taxonomy items") {
  CHECK(item("x^3") == 1);
  CHECK(item("x^2*y") == 2);
  CHECK(item("x*y*(x+y)") == 3);
  CHECK(item("x*(y+z)*(y^2+y*z+z^2)") == 5);
  CHECK(item("x*y^2*z") == 4);
  CHECK(item("x*y*(x+y)*z") == 5);
  CHECK(item("(y^2-x*z)^2") == 6);
  CHECK(item("x*(x*z+2*y^2)") == 7);
  CHECK(item("x^2*(8*y^2-9*x*z)") == 7);
  CHECK(item("x*z*(y^2-x*z)") == 8);
  CHECK(item("y*(y^2+x*z)") == 9);
  CHECK(item("x*y*(y^2+x*z)") == 9);
  CHECK(item("x*y*z*(y^2+x*z)") == 9);
  CHECK(item("y^2*(y^2-3*x*z)") == 9);
  CHECK(item("(y^2+x*z)*(y^2+2*x*z)") == 10);
  CHECK(item("x*y*(y^2+x*z)*(y^2-x*z)") == 10);
  CHECK(item("y*(y^2*z+x^3)") == 11);
  CHECK(item("z*(y*z^2+x^3)") == 11);
  CHECK(item("x*(y^2*z-x^3)") == 11);
  CHECK(item("y^5+x^2*z^3") == 11);
  CHECK(item("(y^2-x*z+x^2)*(y^2-x*z-x^2)") == 12);
  CHECK(item("x*(y^2-x*z+x^2)*(y^2-x*z-x^2)*(y^2-x*z)") == 12);
  // large orbits
  CHECK(item("x*y*z+y^3+z^3") == 0);
  CHECK(item("x*y*(x+y)*z*(y+z)") == 0);
  CHECK(item("(y^2-x*z)*(x^2+y^2+z^2)") == 0);
  CHECK(item("z*(x*z+y^2)*(y+z)") == 9);
  CHECK(item("(y^2+x*z)*y*(x+y)") == 0);
}

TEST_CASE("rho limits of C1 over Q(rho)") {
  ParseContext c;
  Form f = parse_form("adjoin r: r^2+r+1=0; y^2*(y^2-(r+2)*x*z)", c);
  auto k = classify_limit(f);
  CHECK(k.item == 9);
  CHECK(k.dim == 7);
  CHECK(k.id() == "item_9");
}

TEST_CASE("specialization poset") {
  CHECK(specializes_to(7, 3));
  CHECK_FALSE(specializes_to(7, 6));
  for (int i = 1; i <= 12; ++i) CHECK(specializes_to(i, i));
  CHECK(specializes_to(12, 1));
  CHECK_FALSE(specializes_to(1, 2));
  for (int i = 1; i <= 12; ++i)
    for (int j : direct_specializations(i)) CHECK(item_dimension(j) < item_dimension(i));
}
