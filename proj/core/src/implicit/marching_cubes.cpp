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
#include <cstdint>
#include <string>

#include "implicit/mc_table.hpp"
#include "mathsculpt/error.hpp"
#include "mathsculpt/implicit.hpp"
#include "mathsculpt/parallel.hpp"

namespace mathsculpt::implicit {

namespace {

constexpr std::int32_t kNoVertex = -1;

// Crossings stay this fraction of an edge away from the nodes, which keeps
// every emitted triangle well above the degenerate-area threshold.
constexpr double kMinT = 1e-4;

/// Padded lattice: index -1 and n are ghost nodes, stored at 0 and n + 1.
struct Lattice {
  std::array<int, 3> n;  // real nodes per axis
  std::array<int, 3> dim;
  Vec3 origin;           // position of padded node (0, 0, 0)
  Vec3 step;

  Lattice(const GridSpec& g) {
    const Vec3 ext = g.box.extent();
    for (int a = 0; a < 3; ++a) {
      n[a] = g.resolution[a];
      dim[a] = n[a] + 2;
      step[a] = ext[a] / n[a];
      origin[a] = g.box.min[a] - 0.5 * step[a];
    }
  }

  std::size_t count() const { return std::size_t(dim[0]) * dim[1] * dim[2]; }
  std::size_t index(int i, int j, int k) const {
    return (std::size_t(k) * dim[1] + j) * dim[0] + i;
  }
  bool ghost(int i, int j, int k) const {
    return i == 0 || j == 0 || k == 0 || i == dim[0] - 1 || j == dim[1] - 1 || k == dim[2] - 1;
  }
  Vec3 position(int i, int j, int k) const {
    return {origin.x + i * step.x, origin.y + j * step.y, origin.z + k * step.z};
  }
};

double sample(const SignedField& f, const Vec3& p) {
  const double v = f(p);
  if (!std::isfinite(v)) {
    throw GeometryError("field is not finite at (" + std::to_string(p.x) + ", " +
                        std::to_string(p.y) + ", " + std::to_string(p.z) + ")");
  }
  return v;
}

}  // namespace

TriangleMesh marching_cubes(const CsgNode& node, const GridSpec& grid,
                            const MarchingOptions& options) {
  grid.check();
  const SignedField field = to_field(node);
  const Lattice lat(grid);
  const int threads = std::max(1, options.threads);
  const bool linear =
      options.crossing == Crossing::kLinear ||
      (options.crossing == Crossing::kAuto && field.continuity == Continuity::kExactDistance);

  // Node values, ghosts fixed outside.
  std::vector<double> value(lat.count(), 1.0);
  parallel_for(std::size_t(lat.n[2]), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t kk = begin; kk < end; ++kk) {
      const int k = int(kk) + 1;
      for (int j = 1; j <= lat.n[1]; ++j)
        for (int i = 1; i <= lat.n[0]; ++i) {
          value[lat.index(i, j, k)] = sample(field, lat.position(i, j, k));
        }
    }
  });
  auto inside = [&value](std::size_t idx) { return value[idx] <= 0; };

  // Number the crossing lattice edges in a fixed order.
  struct EdgeRef {
    int axis;
    int i, j, k;
  };
  std::array<std::vector<std::int32_t>, 3> vertex_of;
  std::vector<EdgeRef> crossings;
  const std::array<std::size_t, 3> stride{1, std::size_t(lat.dim[0]),
                                          std::size_t(lat.dim[0]) * lat.dim[1]};
  for (int a = 0; a < 3; ++a) {
    vertex_of[a].assign(lat.count(), kNoVertex);
    for (int k = 0; k < lat.dim[2]; ++k)
      for (int j = 0; j < lat.dim[1]; ++j)
        for (int i = 0; i < lat.dim[0]; ++i) {
          const int hi[3] = {i, j, k};
          if (hi[a] + 1 >= lat.dim[a]) continue;
          const std::size_t idx = lat.index(i, j, k);
          if (inside(idx) != inside(idx + stride[a])) {
            vertex_of[a][idx] = std::int32_t(crossings.size());
            crossings.push_back({a, i, j, k});
          }
        }
  }

  std::vector<Vec3> verts(crossings.size());
  const int iterations = grid.bisection_iterations;
  parallel_for(crossings.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const EdgeRef& e = crossings[c];
      int j1[3] = {e.i, e.j, e.k};
      ++j1[e.axis];
      const std::size_t i0 = lat.index(e.i, e.j, e.k);
      const std::size_t i1 = i0 + stride[e.axis];
      Vec3 p0 = lat.position(e.i, e.j, e.k);
      Vec3 p1 = lat.position(j1[0], j1[1], j1[2]);
      if (lat.ghost(e.i, e.j, e.k) || lat.ghost(j1[0], j1[1], j1[2])) {
        verts[c] = (p0 + p1) * 0.5;
        continue;
      }
      if (linear) {
        const double v0 = value[i0];
        const double v1 = value[i1];
        const double t = std::clamp(v0 / (v0 - v1), kMinT, 1.0 - kMinT);
        verts[c] = p0 + (p1 - p0) * t;
        continue;
      }
      // Bisection over the edge parameter, with lo on the inside.
      if (!inside(i0)) std::swap(p0, p1);
      double lo = 0;
      double hi = 1;
      for (int it = 0; it < iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sample(field, p0 + (p1 - p0) * mid) <= 0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      verts[c] = p0 + (p1 - p0) * std::clamp(0.5 * (lo + hi), kMinT, 1.0 - kMinT);
    }
  });

  const auto& edges = detail::cube_edges();
  std::vector<Triangle> tris;
  for (int k = 0; k + 1 < lat.dim[2]; ++k)
    for (int j = 0; j + 1 < lat.dim[1]; ++j)
      for (int i = 0; i + 1 < lat.dim[0]; ++i) {
        int mask = 0;
        for (int c = 0; c < 8; ++c) {
          if (inside(lat.index(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1)))) {
            mask |= 1 << c;
          }
        }
        if (mask == 0 || mask == 255) continue;
        for (const auto& t : detail::case_triangles(mask)) {
          Triangle tri;
          for (int s = 0; s < 3; ++s) {
            const detail::CubeEdge& ce = edges[t[s]];
            const int c = ce.corner;
            const std::size_t idx =
                lat.index(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1));
            tri[s] = std::uint32_t(vertex_of[ce.axis][idx]);
          }
          tris.push_back(tri);
        }
      }
  if (tris.empty()) throw GeometryError("region is empty on the sampling grid");
  return TriangleMesh(std::move(verts), std::move(tris));
}

TriangleMesh iso_shell(const expr::ExprAst& f, double k, double delta, const GridSpec& grid,
                       int threads) {
  if (!(delta > 0) || !std::isfinite(delta)) throw GeometryError("iso_shell delta must be positive");
  if (!std::isfinite(k)) throw GeometryError("iso_shell level must be finite");
  const auto fn = expr::CompiledExpr::compile(f, {"x", "y", "z"});
  SignedField band(
      [fn, k, delta](const Vec3& p) {
        const double args[3] = {p.x, p.y, p.z};
        return std::abs(fn(args) - k) - delta;
      },
      Continuity::kContinuous, FieldSource::kExpression);
  MarchingOptions options;
  options.crossing = Crossing::kLinear;
  options.threads = threads;
  return marching_cubes(CsgNode::leaf(std::move(band)), grid, options);
}

}  // namespace mathsculpt::implicit
