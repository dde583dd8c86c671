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

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "mathsculpt/mesh.hpp"

namespace mathsculpt {

namespace {

struct CellKey {
  std::int64_t x, y, z;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.y) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.z) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct ExactHash {
  std::size_t operator()(const Vec3& p) const {
    // +0.0 normalizes -0.0 so equal values hash equally.
    const std::hash<double> h;
    std::size_t s = h(p.x + 0.0);
    s ^= h(p.y + 0.0) + 0x9E3779B97F4A7C15ULL + (s << 6) + (s >> 2);
    s ^= h(p.z + 0.0) + 0x9E3779B97F4A7C15ULL + (s << 6) + (s >> 2);
    return s;
  }
};

}  // namespace

WeldMap weld_vertices(std::span<const Vec3> positions, double tolerance) {
  WeldMap out;
  out.remap.resize(positions.size());
  if (!(tolerance > 0)) {
    std::unordered_map<Vec3, std::uint32_t, ExactHash> seen;
    seen.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
      const auto [it, inserted] =
          seen.try_emplace(positions[i], static_cast<std::uint32_t>(out.positions.size()));
      if (inserted) out.positions.push_back(positions[i]);
      out.remap[i] = it->second;
    }
    return out;
  }

  const double inv = 1.0 / tolerance;
  auto cell_of = [inv](const Vec3& p) {
    return CellKey{static_cast<std::int64_t>(std::floor(p.x * inv)),
                   static_cast<std::int64_t>(std::floor(p.y * inv)),
                   static_cast<std::int64_t>(std::floor(p.z * inv))};
  };
  std::unordered_map<CellKey, std::vector<std::uint32_t>, CellHash> grid;
  grid.reserve(positions.size());
  const double tol2 = tolerance * tolerance;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Vec3& p = positions[i];
    const CellKey c = cell_of(p);
    std::uint32_t found = UINT32_MAX;
    for (int dx = -1; dx <= 1 && found == UINT32_MAX; ++dx) {
      for (int dy = -1; dy <= 1 && found == UINT32_MAX; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          const auto it = grid.find({c.x + dx, c.y + dy, c.z + dz});
          if (it == grid.end()) continue;
          for (std::uint32_t rep : it->second) {
            const Vec3 d = out.positions[rep] - p;
            if (dot(d, d) <= tol2 && (found == UINT32_MAX || rep < found)) found = rep;
          }
        }
      }
    }
    if (found == UINT32_MAX) {
      found = static_cast<std::uint32_t>(out.positions.size());
      out.positions.push_back(p);
      grid[c].push_back(found);
    }
    out.remap[i] = found;
  }
  return out;
}

TriangleMesh weld(const TriangleMesh& m, double tolerance) {
  const WeldMap w = weld_vertices(m.vertices(), tolerance);
  std::vector<Triangle> tris;
  tris.reserve(m.triangle_count());
  for (const Triangle& t : m.triangles()) {
    const Triangle r{w.remap[t[0]], w.remap[t[1]], w.remap[t[2]]};
    if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2]) continue;
    tris.push_back(r);
  }
  std::optional<std::vector<Rgb>> colors;
  if (m.has_colors()) {
    colors.emplace(w.positions.size());
    std::vector<bool> set(w.positions.size(), false);
    for (std::size_t i = 0; i < w.remap.size(); ++i) {
      if (!set[w.remap[i]]) {
        (*colors)[w.remap[i]] = (*m.colors())[i];
        set[w.remap[i]] = true;
      }
    }
  }
  return TriangleMesh(w.positions, std::move(tris), std::move(colors));
}

}  // namespace mathsculpt
