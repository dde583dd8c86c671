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
#include <string>

#include "mathsculpt/error.hpp"
#include "mathsculpt/tessellate.hpp"

namespace mathsculpt::tessellate {

TriangleMesh wireframe(std::span<const Vec3> vertices, std::span<const Segment> edges,
                       double thickness, const QualityParams& q) {
  if (!(thickness > 0) || !std::isfinite(thickness)) {
    throw GeometryError("wireframe thickness must be positive");
  }
  std::vector<TriangleMesh> parts;
  parts.reserve(vertices.size() + edges.size());
  for (const Vec3& v : vertices) parts.push_back(primitive(SphereSpec{v, thickness}, q));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].a == edges[i].b) {
      throw GeometryError("wireframe edge " + std::to_string(i) + " has zero length");
    }
    parts.push_back(primitive(CylinderSpec{edges[i].a, edges[i].b, thickness}, q));
  }
  return merge(parts).mesh;
}

}  // namespace mathsculpt::tessellate
