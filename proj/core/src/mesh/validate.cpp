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
#include <limits>
#include <queue>

#include "mathsculpt/mesh.hpp"
#include "mesh/topology.hpp"

namespace mathsculpt {

using detail::DisjointSets;
using detail::edge_key;
using detail::EdgeUse;

ValidationReport validate(const TriangleMesh& m, double weld_tolerance) {
  ValidationReport r;
  const WeldMap w = weld_vertices(m.vertices(), weld_tolerance);
  r.duplicate_vertex_pairs = m.vertex_count() - w.positions.size();

  Aabb box;
  for (const Vec3& p : w.positions) box.include(p);
  const double diag = box.diagonal();
  const double area_floor = 1e-14 * diag * diag;

  std::vector<Triangle> tris;
  tris.reserve(m.triangle_count());
  r.min_triangle_area = m.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (const Triangle& t : m.triangles()) {
    const Triangle q{w.remap[t[0]], w.remap[t[1]], w.remap[t[2]]};
    const double area =
        triangle_area(w.positions[q[0]], w.positions[q[1]], w.positions[q[2]]);
    r.min_triangle_area = std::min(r.min_triangle_area, area);
    if (q[0] == q[1] || q[1] == q[2] || q[0] == q[2]) {
      ++r.degenerate_triangle_count;
      continue;
    }
    if (area < area_floor || area == 0) ++r.degenerate_triangle_count;
    tris.push_back(q);
  }

  std::unordered_map<std::uint64_t, EdgeUse> edges;
  edges.reserve(tris.size() * 2);
  DisjointSets sets(w.positions.size());
  std::vector<bool> used(w.positions.size(), false);
  for (std::uint32_t ti = 0; ti < tris.size(); ++ti) {
    const Triangle& t = tris[ti];
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t a = t[k];
      const std::uint32_t b = t[(k + 1) % 3];
      EdgeUse& e = edges[edge_key(a, b)];
      if (e.count == 0) e.first_triangle = ti;
      ++e.count;
      if (a < b) ++e.forward;
      used[a] = true;
    }
    sets.unite(t[0], t[1]);
    sets.unite(t[0], t[2]);
  }

  bool consistent = true;
  for (const auto& [key, e] : edges) {
    if (e.count == 1) {
      ++r.boundary_edge_count;
      if (r.sample_boundary_edges.size() < 10) {
        r.sample_boundary_edges.push_back(
            {w.positions[key >> 32], w.positions[key & 0xffffffffu]});
      }
    } else if (e.count == 2) {
      if (e.forward != 1) consistent = false;
    } else {
      ++r.nonmanifold_edge_count;
      consistent = false;
    }
  }
  // Hash order is unspecified; report boundary samples in a stable order.
  std::sort(r.sample_boundary_edges.begin(), r.sample_boundary_edges.end(),
            [](const auto& a, const auto& b) {
              for (int i = 0; i < 2; ++i) {
                for (int c = 0; c < 3; ++c) {
                  if (a[i][c] != b[i][c]) return a[i][c] < b[i][c];
                }
              }
              return false;
            });

  std::size_t vertex_count = 0;
  std::size_t components = 0;
  for (std::uint32_t v = 0; v < w.positions.size(); ++v) {
    if (!used[v]) continue;
    ++vertex_count;
    if (sets.find(v) == v) ++components;
  }

  r.vertex_count = vertex_count;
  r.edge_count = edges.size();
  r.triangle_count = tris.size();
  r.connected_components = components;
  r.euler_characteristic = static_cast<long long>(vertex_count) -
                           static_cast<long long>(edges.size()) +
                           static_cast<long long>(tris.size());
  r.orientation_consistent = consistent;
  r.watertight = !tris.empty() && r.boundary_edge_count == 0 && r.nonmanifold_edge_count == 0;
  return r;
}

TriangleMesh orient_consistently(const TriangleMesh& input) {
  const TriangleMesh m = weld(input, 0.0);
  std::vector<Triangle> tris = m.triangles();
  const auto& v = m.vertices();

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> incident;
  for (std::uint32_t ti = 0; ti < tris.size(); ++ti) {
    for (int k = 0; k < 3; ++k) incident[edge_key(tris[ti][k], tris[ti][(k + 1) % 3])].push_back(ti);
  }
  auto has_directed = [](const Triangle& t, std::uint32_t a, std::uint32_t b) {
    for (int k = 0; k < 3; ++k) {
      if (t[k] == a && t[(k + 1) % 3] == b) return true;
    }
    return false;
  };

  std::vector<int> component(tris.size(), -1);
  int next_component = 0;
  for (std::uint32_t seed = 0; seed < tris.size(); ++seed) {
    if (component[seed] >= 0) continue;
    const int c = next_component++;
    std::queue<std::uint32_t> queue;
    queue.push(seed);
    component[seed] = c;
    while (!queue.empty()) {
      const std::uint32_t ti = queue.front();
      queue.pop();
      for (int k = 0; k < 3; ++k) {
        const std::uint32_t a = tris[ti][k];
        const std::uint32_t b = tris[ti][(k + 1) % 3];
        const auto& around = incident[edge_key(a, b)];
        if (around.size() != 2) continue;  // boundary or non-manifold: no propagation
        for (std::uint32_t nb : around) {
          if (nb == ti || component[nb] >= 0) continue;
          if (has_directed(tris[nb], a, b)) std::swap(tris[nb][1], tris[nb][2]);
          component[nb] = c;
          queue.push(nb);
        }
      }
    }
  }

  std::vector<double> volume(static_cast<std::size_t>(next_component), 0.0);
  for (std::uint32_t ti = 0; ti < tris.size(); ++ti) {
    const Triangle& t = tris[ti];
    volume[static_cast<std::size_t>(component[ti])] += dot(v[t[0]], cross(v[t[1]], v[t[2]]));
  }
  for (std::uint32_t ti = 0; ti < tris.size(); ++ti) {
    if (volume[static_cast<std::size_t>(component[ti])] < 0) std::swap(tris[ti][1], tris[ti][2]);
  }
  return TriangleMesh(m.vertices(), std::move(tris), m.colors());
}

}  // namespace mathsculpt
