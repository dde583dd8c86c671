// Copyright 2026 The MathSculpt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mathsculpt/geom.hpp"

#include "mathsculpt/error.hpp"

namespace mathsculpt {

double Mat3::determinant() const {
  const Mat3& a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat3 Mat3::inverse() const {
  const double det = determinant();
  if (det == 0 || !std::isfinite(det)) {
    throw GeometryError("singular linear transform");
  }
  const Mat3& a = *this;
  Mat3 r;
  r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / det;
  r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / det;
  r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / det;
  r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / det;
  r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / det;
  r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / det;
  r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / det;
  r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / det;
  r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / det;
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  }
  return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    }
  }
  return r;
}

bool AffineTransform::is_rigid(double tolerance) const {
  const Mat3 g = linear.transposed() * linear;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (std::abs(g(i, j) - (i == j ? 1.0 : 0.0)) > tolerance) return false;
    }
  }
  return std::abs(linear.determinant() - 1.0) <= tolerance;
}

AffineTransform AffineTransform::inverse() const {
  const Mat3 inv = linear.inverse();
  return {inv, -(inv * translation)};
}

AffineTransform rotation_about_axis(double angle, const Vec3& axis_dir,
                                    const Vec3& axis_point) {
  const double len = norm(axis_dir);
  if (!(len > 0) || !std::isfinite(len)) {
    throw GeometryError("rotation axis direction must be nonzero");
  }
  const Vec3 k = axis_dir / len;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double t = 1 - c;
  // Rodrigues: R = c I + s [k]x + (1 - c) k k^T
  Mat3 r;
  r(0, 0) = c + t * k.x * k.x;
  r(0, 1) = t * k.x * k.y - s * k.z;
  r(0, 2) = t * k.x * k.z + s * k.y;
  r(1, 0) = t * k.y * k.x + s * k.z;
  r(1, 1) = c + t * k.y * k.y;
  r(1, 2) = t * k.y * k.z - s * k.x;
  r(2, 0) = t * k.z * k.x - s * k.y;
  r(2, 1) = t * k.z * k.y + s * k.x;
  r(2, 2) = c + t * k.z * k.z;
  return {r, axis_point - r * axis_point};
}

AffineTransform translation(const Vec3& v) { return {Mat3::identity(), v}; }

AffineTransform scaling(const Vec3& factors, const Vec3& anchor) {
  if (factors.x == 0 || factors.y == 0 || factors.z == 0) {
    throw GeometryError("scale factors must be nonzero");
  }
  const Mat3 d = Mat3::diagonal(factors);
  return {d, anchor - d * anchor};
}

AffineTransform compose(const AffineTransform& a, const AffineTransform& b) {
  return {a.linear * b.linear, a.linear * b.translation + a.translation};
}

}  // namespace mathsculpt
