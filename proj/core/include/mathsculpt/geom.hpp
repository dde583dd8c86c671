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

#pragma once

#include <array>
#include <cmath>
#include <limits>

namespace mathsculpt {

struct Vec3 {
  double x = 0;
  double y = 0;
  double z = 0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(const Vec3& a, double s) {
    return {a.x / s, a.y / s, a.z / s};
  }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Unit vector along v; returns the zero vector when |v| == 0.
inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return n > 0 ? v / n : Vec3{};
}

constexpr Vec3 cwise_min(const Vec3& a, const Vec3& b) {
  return {a.x < b.x ? a.x : b.x, a.y < b.y ? a.y : b.y, a.z < b.z ? a.z : b.z};
}

constexpr Vec3 cwise_max(const Vec3& a, const Vec3& b) {
  return {a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y, a.z > b.z ? a.z : b.z};
}

constexpr Vec3 cwise_mul(const Vec3& a, const Vec3& b) {
  return {a.x * b.x, a.y * b.y, a.z * b.z};
}

inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Axis-aligned bounding box. A default-constructed box is empty (min > max)
/// and absorbs the first point passed to include().
struct Aabb {
  Vec3 min{std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity()};
  Vec3 max{-std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};

  static Aabb from_corners(const Vec3& a, const Vec3& b) {
    return {cwise_min(a, b), cwise_max(a, b)};
  }

  bool empty() const { return min.x > max.x || min.y > max.y || min.z > max.z; }
  Vec3 extent() const { return max - min; }
  Vec3 center() const { return (min + max) * 0.5; }
  double diagonal() const { return empty() ? 0.0 : norm(extent()); }

  void include(const Vec3& p) {
    min = cwise_min(min, p);
    max = cwise_max(max, p);
  }
  void include(const Aabb& b) {
    if (b.empty()) return;
    include(b.min);
    include(b.max);
  }
  Aabb inflated(double margin) const {
    return {min - Vec3{margin, margin, margin}, max + Vec3{margin, margin, margin}};
  }
  bool contains(const Vec3& p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y &&
           p.z >= min.z && p.z <= max.z;
  }

  friend bool operator==(const Aabb&, const Aabb&) = default;
};

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static constexpr Mat3 identity() { return {}; }
  static constexpr Mat3 diagonal(const Vec3& d) {
    return {{d.x, 0, 0, 0, d.y, 0, 0, 0, d.z}};
  }

  constexpr double operator()(int r, int c) const { return m[r * 3 + c]; }
  constexpr double& operator()(int r, int c) { return m[r * 3 + c]; }

  double determinant() const;
  Mat3 inverse() const;
  Mat3 transposed() const;

  friend Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

/// p -> linear * p + translation.
struct AffineTransform {
  Mat3 linear;
  Vec3 translation;

  static AffineTransform identity() { return {}; }

  Vec3 apply(const Vec3& p) const { return linear * p + translation; }
  Vec3 operator()(const Vec3& p) const { return apply(p); }
  double determinant() const { return linear.determinant(); }
  /// True when the linear part is orthogonal with determinant +1.
  bool is_rigid(double tolerance = 1e-12) const;
  /// Throws GeometryError when the linear part is singular.
  AffineTransform inverse() const;

  friend bool operator==(const AffineTransform&, const AffineTransform&) = default;
};

/// Rotation by angle (radians, right-hand rule) about the line through
/// axis_point with direction axis_dir. Throws GeometryError for a zero axis.
AffineTransform rotation_about_axis(double angle, const Vec3& axis_dir,
                                    const Vec3& axis_point = {});

AffineTransform translation(const Vec3& v);

/// p -> anchor + diag(factors) (p - anchor). Throws GeometryError for a zero
/// factor.
AffineTransform scaling(const Vec3& factors, const Vec3& anchor = {});

/// (a o b)(p) = a(b(p)).
AffineTransform compose(const AffineTransform& a, const AffineTransform& b);

}  // namespace mathsculpt
