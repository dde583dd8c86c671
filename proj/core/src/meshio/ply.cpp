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

#include "mathsculpt/error.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/version.hpp"
#include "meshio/encoding.hpp"

namespace mathsculpt::meshio {

namespace {

char channel(double c) {
  return static_cast<char>(static_cast<unsigned char>(std::lround(std::clamp(c, 0.0, 1.0) * 255)));
}

}  // namespace

std::string encode_ply(const TriangleMesh& m) {
  if (m.empty()) throw GeometryError("cannot write an empty mesh");
  if (!m.has_colors()) throw GeometryError("PLY export needs vertex colors");
  std::string out = "ply\nformat binary_little_endian 1.0\ncomment mathsculpt ";
  out += version();
  out += "\nelement vertex " + std::to_string(m.vertex_count()) +
         "\nproperty float x\nproperty float y\nproperty float z\n"
         "property uchar red\nproperty uchar green\nproperty uchar blue\n"
         "element face " +
         std::to_string(m.triangle_count()) +
         "\nproperty list uchar int vertex_indices\nend_header\n";
  const auto& colors = *m.colors();
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    const Vec3& p = m.vertices()[i];
    detail::put_f32(out, static_cast<float>(p.x));
    detail::put_f32(out, static_cast<float>(p.y));
    detail::put_f32(out, static_cast<float>(p.z));
    out += channel(colors[i].r);
    out += channel(colors[i].g);
    out += channel(colors[i].b);
  }
  for (const Triangle& t : m.triangles()) {
    out += static_cast<char>(3);
    for (auto v : t) detail::put_i32(out, static_cast<std::int32_t>(v));
  }
  return out;
}

void write_ply(const TriangleMesh& m, const std::filesystem::path& path) {
  write_file(path, encode_ply(m));
}

}  // namespace mathsculpt::meshio
