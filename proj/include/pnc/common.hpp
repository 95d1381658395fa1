#pragma once
#include <stdexcept>
#include <string>

namespace pnc {

// error kinds map onto CLI exit codes (parse 2, cap 3, invariant 4)
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& m, std::size_t p) : Error(m + " at position " + std::to_string(p)), pos(p) {}
};
struct PrecisionError : Error {
  using Error::Error;
};
struct InvariantError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};

struct Limits {
  int tower_height = 4;
  int t_degree_cap = 512;
  int degree_cap = 12;
  int poly_degree_cap = 24;
  // 0 means 4*d^2
  long puiseux_order_cap = 0;
};

Limits& limits();

}  // namespace pnc
