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

#include <filesystem>
#include <string>
#include <string_view>

#include "mathsculpt/mesh.hpp"

/// Mesh file formats: STL (read and write), binary PLY and VRML97 (write).
namespace mathsculpt::meshio {

enum class StlFormat { kBinary, kAscii };

/// Binary: 80-byte header ("mathsculpt <version>", zero padded), u32 count,
/// then 50 bytes per triangle (f32 normal, 3 f32 vertices, u16 zero), all
/// little-endian. Normals are recomputed from the winding; degenerate
/// triangles get (0, 0, 0). ASCII uses lowercase keywords and 9 significant
/// digits of the f32 values, so both encodings carry the same numbers.
/// Throws GeometryError for an empty mesh.
std::string encode_stl(const TriangleMesh& m, StlFormat format, std::string_view name = "mathsculpt");

/// Binary when the size is exactly 84 + 50 * count, even if the header
/// starts with "solid"; otherwise ASCII when the text starts with "solid".
/// Vertices are welded within 1e-9 of the bounding-box diagonal and
/// triangles that collapse are dropped. The result has no colors. Throws
/// FormatError, with the byte offset, for truncated, inconsistent or
/// non-finite input.
TriangleMesh decode_stl(std::string_view bytes);

void write_stl(const TriangleMesh& m, const std::filesystem::path& path, StlFormat format);
TriangleMesh read_stl(const std::filesystem::path& path);

/// binary_little_endian PLY: float x y z, uchar red green blue per vertex,
/// faces as `list uchar int`. Throws GeometryError without colors.
std::string encode_ply(const TriangleMesh& m);
void write_ply(const TriangleMesh& m, const std::filesystem::path& path);

/// VRML97 with one Shape / IndexedFaceSet and per-vertex colors. Throws
/// GeometryError without colors.
std::string encode_wrl(const TriangleMesh& m);
void write_wrl(const TriangleMesh& m, const std::filesystem::path& path);

/// Whole-file helpers; IoError on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace mathsculpt::meshio
