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

#include <vector>

#include "mathsculpt/tessellate.hpp"

namespace mathsculpt::tessellate::detail {

std::vector<std::vector<std::uint32_t>> convex_faces(const std::vector<Vec3>& pts);

/// Orthonormal pair perpendicular to the unit vector t.
void perpendicular_frame(const Vec3& t, Vec3& n, Vec3& b);

/// Largest triangle area in the mesh.
double max_triangle_area(const TriangleMesh& m);

/// Flips every triangle when the enclosed volume is negative.
TriangleMesh outward(TriangleMesh m);

}  // namespace mathsculpt::tessellate::detail
