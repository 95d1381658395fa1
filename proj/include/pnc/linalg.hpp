#pragma once
#include <array>
#include <vector>

#include "pnc/arith.hpp"

namespace pnc {

using Vec3 = std::array<Alg, 3>;
using Mat3 = std::array<Vec3, 3>;

Mat3 identity3();
Mat3 mul(const Mat3& a, const Mat3& b);
Vec3 mul(const Mat3& a, const Vec3& v);
Alg det(const Mat3& a);
Mat3 inverse(const Mat3& a);
Mat3 transpose(const Mat3& a);
Vec3 cross(const Vec3& a, const Vec3& b);
Alg dot(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
// scale so the first nonzero entry is 1
Vec3 normalized(const Vec3& v);
bool proportional(const Vec3& a, const Vec3& b);
Field field_of(const Vec3& v);
Field field_of(const Mat3& m);

// basis of the right nullspace of a matrix with `ncols` columns
std::vector<std::vector<Alg>> nullspace(std::vector<std::vector<Alg>> rows, int ncols);
int rank(std::vector<std::vector<Alg>> rows, int ncols);

}  // namespace pnc
