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
#include <cstring>
#include <set>

#include <gtest/gtest.h>

#include "mathsculpt/error.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/tessellate.hpp"
#include "mathsculpt/version.hpp"
#include "test_support.hpp"

using namespace mathsculpt;
using namespace mathsculpt::meshio;
using mathsculpt::support::fixture;
using mathsculpt::support::TempDir;
namespace fs = std::filesystem;
namespace ts = mathsculpt::tessellate;

namespace {

TriangleMesh one_triangle() {
  return TriangleMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {Triangle{0, 1, 2}});
}

std::uint32_t u32_at(const std::string& s, std::size_t at) {
  std::uint32_t v;
  std::memcpy(&v, s.data() + at, 4);
  return v;
}

float f32_at(const std::string& s, std::size_t at) {
  float v;
  std::memcpy(&v, s.data() + at, 4);
  return v;
}

std::vector<fs::path> malformed_corpus() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fixture("stl/malformed"))) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Stl, OneTriangleBinaryLayout) {
  const std::string bytes = encode_stl(one_triangle(), StlFormat::kBinary);
  ASSERT_EQ(bytes.size(), 134u);
  EXPECT_EQ(bytes.substr(0, 11), "mathsculpt ");
  EXPECT_EQ(bytes.substr(11, version().size()), version());
  for (std::size_t i = 11 + version().size(); i < 80; ++i) EXPECT_EQ(bytes[i], '\0');
  EXPECT_EQ(u32_at(bytes, 80), 1u);
  // Normal, then the three corners.
  EXPECT_EQ(f32_at(bytes, 84), 0.0f);
  EXPECT_EQ(f32_at(bytes, 88), 0.0f);
  EXPECT_EQ(f32_at(bytes, 92), 1.0f);
  EXPECT_EQ(f32_at(bytes, 96 + 12), 1.0f);
  EXPECT_EQ(f32_at(bytes, 96 + 28), 1.0f);
  EXPECT_EQ(bytes[132], '\0');
  EXPECT_EQ(bytes[133], '\0');
}

TEST(Stl, DegenerateNormalIsZero) {
  const TriangleMesh sliver({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, {Triangle{0, 1, 2}});
  const std::string bytes = encode_stl(sliver, StlFormat::kBinary);
  EXPECT_EQ(f32_at(bytes, 84), 0.0f);
  EXPECT_EQ(f32_at(bytes, 88), 0.0f);
  EXPECT_EQ(f32_at(bytes, 92), 0.0f);
}

TEST(Stl, EmptyMeshRejected) {
  EXPECT_THROW(encode_stl(TriangleMesh{}, StlFormat::kBinary), GeometryError);
}

TEST(Stl, SizeIsAlways84Plus50N) {
  for (const auto& m : {one_triangle(), ts::icosphere(3), support::unit_cube_mesh(),
                        ts::primitive(ts::CylinderSpec{})}) {
    EXPECT_EQ(encode_stl(m, StlFormat::kBinary).size(), 84 + 50 * m.triangle_count());
  }
}

TEST(Stl, BinaryRoundTripIsBitwiseF32) {
  const TriangleMesh m = apply_transform(ts::icosphere(3), translation({0.1, 0.2, 0.3}));
  const TriangleMesh back = decode_stl(encode_stl(m, StlFormat::kBinary));
  EXPECT_EQ(back.triangle_count(), m.triangle_count());
  EXPECT_EQ(back.vertex_count(), m.vertex_count());
  EXPECT_FALSE(back.has_colors());
  std::set<std::array<float, 3>> expected;
  for (const Vec3& v : m.vertices()) {
    expected.insert({static_cast<float>(v.x), static_cast<float>(v.y), static_cast<float>(v.z)});
  }
  for (const Vec3& v : back.vertices()) {
    const std::array<float, 3> f{static_cast<float>(v.x), static_cast<float>(v.y),
                                 static_cast<float>(v.z)};
    EXPECT_EQ(static_cast<double>(f[0]), v.x);
    EXPECT_TRUE(expected.count(f));
  }
  EXPECT_TRUE(validate(back).watertight);
}

TEST(Stl, WriteReadWriteFixpoint) {
  const TriangleMesh m = ts::primitive(ts::ConeSpec{{0.1, 0.2, 0.3}, {1.7, -0.3, 2.9}, 0.77});
  const std::string first = encode_stl(m, StlFormat::kBinary);
  // Normals come from the stored f32 corners, so the first write is
  // already the fixpoint even though m holds doubles.
  EXPECT_EQ(first, encode_stl(decode_stl(first), StlFormat::kBinary));
  const std::string a1 = encode_stl(m, StlFormat::kAscii);
  EXPECT_EQ(a1, encode_stl(decode_stl(a1), StlFormat::kAscii));
  const TriangleMesh ball = ts::icosphere(4);
  const std::string b1 = encode_stl(ball, StlFormat::kBinary);
  EXPECT_EQ(b1, encode_stl(decode_stl(b1), StlFormat::kBinary));
}

TEST(Stl, AsciiAndBinaryAgree) {
  const TriangleMesh m = apply_transform(ts::icosphere(2), scaling({1.3, 0.7, 2.1}));
  const TriangleMesh a = decode_stl(encode_stl(m, StlFormat::kAscii));
  const TriangleMesh b = decode_stl(encode_stl(m, StlFormat::kBinary));
  ASSERT_EQ(a.vertex_count(), b.vertex_count());
  ASSERT_EQ(a.triangles(), b.triangles());
  for (std::size_t i = 0; i < a.vertex_count(); ++i) EXPECT_EQ(a.vertices()[i], b.vertices()[i]);
}

TEST(Stl, AsciiGrammar) {
  const std::string text = encode_stl(one_triangle(), StlFormat::kAscii, "part");
  EXPECT_EQ(text.rfind("solid part\n", 0), 0u);
  EXPECT_NE(text.find("facet normal 0 0 1"), std::string::npos);
  EXPECT_NE(text.find("outer loop"), std::string::npos);
  EXPECT_NE(text.find("vertex 1 0 0"), std::string::npos);
  EXPECT_NE(text.find("endloop"), std::string::npos);
  EXPECT_NE(text.find("endfacet"), std::string::npos);
  EXPECT_NE(text.find("endsolid part"), std::string::npos);
  // 9 significant digits of the f32 value.
  const TriangleMesh third({{0, 0, 0}, {1.0 / 3, 0, 0}, {0, 1, 0}}, {Triangle{0, 1, 2}});
  EXPECT_NE(encode_stl(third, StlFormat::kAscii).find("vertex 0.333333343 0 0"),
            std::string::npos);
}

TEST(Stl, HandWrittenAsciiFixture) {
  const TriangleMesh m = read_stl(fixture("stl/seven_triangles.stl"));
  EXPECT_EQ(m.triangle_count(), 7u);
  EXPECT_EQ(m.vertex_count(), 8u);
  const auto r = validate(m);
  EXPECT_EQ(r.boundary_edge_count, 7u);
  EXPECT_EQ(r.euler_characteristic, 1);
}

TEST(Stl, BinaryFixtures) {
  for (const char* name : {"stl/tetra_binary.stl", "stl/solid_header_binary.stl"}) {
    const std::string bytes = read_file(fixture(name));
    EXPECT_EQ(bytes.size(), 84 + 50 * u32_at(bytes, 80));
    const TriangleMesh m = decode_stl(bytes);
    EXPECT_EQ(m.triangle_count(), 4u);
    EXPECT_EQ(m.vertex_count(), 4u);
    EXPECT_TRUE(validate(m).watertight);
    EXPECT_NEAR(signed_volume(m), 1.0 / 6, 1e-7);
  }
}

TEST(Stl, MalformedCorpusRejected) {
  const auto corpus = malformed_corpus();
  ASSERT_GE(corpus.size(), 6u);
  for (const auto& path : corpus) {
    try {
      read_stl(path);
      ADD_FAILURE() << path << " was accepted";
    } catch (const FormatError& e) {
      EXPECT_NE(std::string(e.what()).find("byte offset"), std::string::npos) << e.what();
    }
  }
}

TEST(Stl, MissingFileIsIoError) {
  EXPECT_THROW(read_stl("/nonexistent/dir/x.stl"), IoError);
  EXPECT_THROW(write_stl(one_triangle(), "/nonexistent/dir/x.stl", StlFormat::kBinary), IoError);
}

TEST(Stl, WritesFiles) {
  TempDir dir;
  write_stl(ts::icosphere(1), dir / "a.stl", StlFormat::kBinary);
  write_stl(ts::icosphere(1), dir / "b.stl", StlFormat::kAscii);
  EXPECT_EQ(fs::file_size(dir / "a.stl"), 84u + 50 * 80);
  EXPECT_EQ(read_stl(dir / "a.stl").triangle_count(), 80u);
  EXPECT_EQ(read_stl(dir / "b.stl").triangle_count(), 80u);
}

TEST(Ply, OneColoredTriangle) {
  const TriangleMesh m = one_triangle().with_color({1, 0.5, 0});
  const std::string bytes = encode_ply(m);
  std::string header = read_file(fixture("ply/one_triangle_header.txt"));
  header.replace(header.find("@VERSION@"), 9, version());
  ASSERT_EQ(bytes.substr(0, header.size()), header);
  EXPECT_EQ(bytes.substr(header.size()), read_file(fixture("ply/one_triangle_body.bin")));
  const auto parsed = support::parse_ply(bytes);
  EXPECT_EQ(parsed.vertices.size(), 3u);
  EXPECT_EQ(parsed.faces.size(), 1u);
  EXPECT_THROW(encode_ply(one_triangle()), GeometryError);
}

TEST(Ply, IndependentReaderAgrees) {
  const TriangleMesh m = ts::icosphere(2).with_color({0.2, 0.4, 0.6});
  const auto parsed = support::parse_ply(encode_ply(m));
  ASSERT_EQ(parsed.vertices.size(), m.vertex_count());
  ASSERT_EQ(parsed.faces.size(), m.triangle_count());
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    EXPECT_EQ(parsed.vertices[i].x, static_cast<float>(m.vertices()[i].x));
    EXPECT_EQ(parsed.vertices[i].r, 51);
    EXPECT_EQ(parsed.vertices[i].g, 102);
    EXPECT_EQ(parsed.vertices[i].b, 153);
  }
  for (std::size_t i = 0; i < m.triangle_count(); ++i) {
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(static_cast<std::uint32_t>(parsed.faces[i][k]), m.triangles()[i][k]);
    }
  }
}

TEST(Wrl, Layout) {
  const TriangleMesh m = one_triangle().with_color({1, 1, 1});
  const std::string text = encode_wrl(m);
  EXPECT_EQ(text.substr(0, text.find('\n')), "#VRML V2.0 utf8");
  EXPECT_NE(text.find("0 1 2 -1"), std::string::npos);
  const auto parsed = support::parse_wrl(text);
  EXPECT_EQ(parsed.points.size(), 3u);
  EXPECT_EQ(parsed.faces.size(), 1u);
  EXPECT_EQ(parsed.colors.size(), 3u);
  EXPECT_TRUE(parsed.color_per_vertex);
  EXPECT_THROW(encode_wrl(one_triangle()), GeometryError);
}

TEST(Wrl, IndependentReaderAgrees) {
  const TriangleMesh m = ts::primitive(ts::CylinderSpec{{0, 0, 0}, {0, 0, 1.5}, 0.3})
                             .with_color({0, 0, 0});
  const auto parsed = support::parse_wrl(encode_wrl(m));
  ASSERT_EQ(parsed.points.size(), m.vertex_count());
  ASSERT_EQ(parsed.faces.size(), m.triangle_count());
  for (std::size_t i = 0; i < m.vertex_count(); ++i) {
    EXPECT_NEAR(distance(parsed.points[i], m.vertices()[i]), 0, 1e-8);
  }
}
