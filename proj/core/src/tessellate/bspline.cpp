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

#include <algorithm>
#include <cmath>
#include <string>

#include "mathsculpt/error.hpp"
#include "mathsculpt/tessellate.hpp"

namespace mathsculpt::tessellate {

namespace {

struct KnotSetup {
  std::vector<double> knots;
  double s = 0;           // parameter in knot units
  std::size_t span = 0;   // knots[span] <= s < knots[span + 1]
  std::size_t count = 0;  // number of (possibly wrapped) coefficients
};

KnotSetup setup(std::size_t n, bool closed, int degree, double t) {
  if (degree < 1) throw GeometryError("B-spline degree must be at least 1");
  const auto p = static_cast<std::size_t>(degree);
  if (n < p + 1) {
    throw GeometryError("B-spline of degree " + std::to_string(degree) + " needs at least " +
                        std::to_string(p + 1) + " control points, got " + std::to_string(n));
  }
  if (!(t >= 0 && t <= 1)) throw GeometryError("B-spline parameter outside [0, 1]");
  KnotSetup k;
  if (closed) {
    k.count = n + p;
    for (std::size_t i = 0; i <= k.count + p; ++i) k.knots.push_back(static_cast<double>(i));
    k.s = static_cast<double>(p) + t * static_cast<double>(n);
    k.span = std::min(static_cast<std::size_t>(std::floor(k.s)), p + n - 1);
  } else {
    k.count = n;
    const std::size_t interior = n - p - 1;
    for (std::size_t i = 0; i <= p; ++i) k.knots.push_back(0.0);
    for (std::size_t i = 1; i <= interior; ++i) {
      k.knots.push_back(static_cast<double>(i) / static_cast<double>(interior + 1));
    }
    for (std::size_t i = 0; i <= p; ++i) k.knots.push_back(1.0);
    k.s = t;
    k.span = p;
    while (k.span + 1 < n && k.knots[k.span + 1] <= t) ++k.span;
  }
  return k;
}

template <typename T, typename Coef>
T de_boor(const KnotSetup& k, int degree, Coef coef) {
  const auto p = static_cast<std::size_t>(degree);
  std::vector<T> d;
  d.reserve(p + 1);
  for (std::size_t j = 0; j <= p; ++j) d.push_back(coef(j + k.span - p));
  for (std::size_t r = 1; r <= p; ++r) {
    for (std::size_t j = p; j >= r; --j) {
      const std::size_t i = j + k.span - p;
      const double lo = k.knots[i];
      const double hi = k.knots[i + p + 1 - r];
      const double alpha = (k.s - lo) / (hi - lo);
      d[j] = d[j - 1] * (1.0 - alpha) + d[j] * alpha;
    }
  }
  return d[p];
}

}  // namespace

Vec3 bspline_curve_point(std::span<const Vec3> control, bool closed, int degree, double t) {
  const KnotSetup k = setup(control.size(), closed, degree, t);
  const std::size_t n = control.size();
  return de_boor<Vec3>(k, degree, [&](std::size_t i) { return control[i % n]; });
}

std::vector<double> bspline_curve_weights(std::size_t control_count, bool closed, int degree,
                                          double t) {
  const KnotSetup k = setup(control_count, closed, degree, t);
  std::vector<double> w(control_count, 0.0);
  for (std::size_t target = 0; target < control_count; ++target) {
    w[target] = de_boor<double>(k, degree, [&](std::size_t i) {
      return i % control_count == target ? 1.0 : 0.0;
    });
  }
  return w;
}

Vec3 bspline_surface_point(const ControlGrid& control, int degree, double u, double v) {
  if (control.empty()) throw GeometryError("B-spline surface has no control points");
  const std::size_t cols = control.front().size();
  std::vector<Vec3> column;
  column.reserve(control.size());
  for (const auto& row : control) {
    if (row.size() != cols) throw GeometryError("B-spline control grid rows differ in length");
    column.push_back(bspline_curve_point(row, false, degree, v));
  }
  return bspline_curve_point(column, false, degree, u);
}

std::vector<std::vector<double>> bspline_surface_weights(std::size_t rows, std::size_t cols,
                                                         int degree, double u, double v) {
  const std::vector<double> wu = bspline_curve_weights(rows, false, degree, u);
  const std::vector<double> wv = bspline_curve_weights(cols, false, degree, v);
  std::vector<std::vector<double>> w(rows, std::vector<double>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) w[i][j] = wu[i] * wv[j];
  return w;
}

}  // namespace mathsculpt::tessellate
