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

#include "mathsculpt/error.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/version.hpp"
#include "meshio/encoding.hpp"

namespace mathsculpt::meshio {

std::string encode_wrl(const TriangleMesh& m) {
  if (m.empty()) throw GeometryError("cannot write an empty mesh");
  if (!m.has_colors()) throw GeometryError("WRL export needs vertex colors");
  std::string out = "#VRML V2.0 utf8\n# mathsculpt ";
  out += version();
  out += "\nShape {\n  geometry IndexedFaceSet {\n    solid TRUE\n"
         "    coord Coordinate {\n      point [\n";
  for (const Vec3& p : m.vertices()) {
    out += "        ";
    detail::put_number(out, p.x);
    out += ' ';
    detail::put_number(out, p.y);
    out += ' ';
    detail::put_number(out, p.z);
    out += ",\n";
  }
  out += "      ]\n    }\n    coordIndex [\n";
  for (const Triangle& t : m.triangles()) {
    out += "      " + std::to_string(t[0]) + ' ' + std::to_string(t[1]) + ' ' +
           std::to_string(t[2]) + " -1,\n";
  }
  out += "    ]\n    color Color {\n      color [\n";
  for (const Rgb& c : *m.colors()) {
    out += "        ";
    detail::put_number(out, c.r, 6);
    out += ' ';
    detail::put_number(out, c.g, 6);
    out += ' ';
    detail::put_number(out, c.b, 6);
    out += ",\n";
  }
  out += "      ]\n    }\n    colorPerVertex TRUE\n  }\n}\n";
  return out;
}

void write_wrl(const TriangleMesh& m, const std::filesystem::path& path) {
  write_file(path, encode_wrl(m));
}

}  // namespace mathsculpt::meshio
