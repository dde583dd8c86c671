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
#include <cstdint>
#include <vector>

namespace mathsculpt::implicit::detail {

/// Cube corner c sits at offset (c & 1, (c >> 1) & 1, (c >> 2) & 1).
/// Edge e runs along `axis` from `corner`, whose bit `axis` is clear.
struct CubeEdge {
  int axis;
  int corner;
};

const std::array<CubeEdge, 12>& cube_edges();

/// Triangles (as cube edge ids) for a case whose bit c is set when corner c
/// is inside. Winding is counterclockwise seen from outside.
const std::vector<std::array<std::uint8_t, 3>>& case_triangles(int mask);

}  // namespace mathsculpt::implicit::detail
