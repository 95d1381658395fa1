#include "pnc/linalg.hpp"

namespace pnc {

Mat3 identity3() {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m[i][i] = Alg(1);
  return m;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Vec3 mul(const Mat3& a, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (!a[i][k].is_zero() && !v[k].is_zero()) r[i] += a[i][k] * v[k];
  return r;
}

Alg det(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 inverse(const Mat3& a) {
  Alg d = det(a);
  if (d.is_zero()) throw DomainError("singular matrix");
  Alg di = d.inverse();
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1]) * di;
    }
  return r;
}

Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Alg dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3 normalized(const Vec3& v) {
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_zero()) {
      Alg s = v[i].inverse();
      Vec3 r;
      for (int j = 0; j < 3; ++j) r[j] = v[j] * s;
      r[i] = Alg(1);
      return r;
    }
  return v;
}

bool proportional(const Vec3& a, const Vec3& b) { return is_zero(cross(a, b)); }

Field field_of(const Vec3& v) {
  Field f;
  for (auto& x : v) f = common_field(f, x.field());
  return f;
}

Field field_of(const Mat3& m) {
  Field f;
  for (auto& r : m) f = common_field(f, field_of(r));
  return f;
}

namespace {
// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(std::vector<std::vector<Alg>>& a, int ncols) {
  std::vector<int> piv;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Alg inv = a[r][c].inverse();
    for (int j = c; j < ncols; ++j)
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Alg f = a[i][c];
      for (int j = c; j < ncols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}
}  // namespace

std::vector<std::vector<Alg>> nullspace(std::vector<std::vector<Alg>> rows, int ncols) {
  auto piv = rref(rows, ncols);
  std::vector<bool> isp(ncols);
  for (int c : piv) isp[c] = true;
  std::vector<std::vector<Alg>> out;
  for (int f = 0; f < ncols; ++f) {
    if (isp[f]) continue;
    std::vector<Alg> v(ncols);
    v[f] = Alg(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][f];
    out.push_back(v);
  }
  return out;
}

int rank(std::vector<std::vector<Alg>> rows, int ncols) { return (int)rref(rows, ncols).size(); }

}  // namespace pnc
