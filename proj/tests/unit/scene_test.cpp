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
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "json.hpp"
#include "mathsculpt/error.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/scene.hpp"
#include "test_support.hpp"

using namespace mathsculpt;
using namespace mathsculpt::scene;
using mathsculpt::support::fixture;
using mathsculpt::support::scene_file;
using mathsculpt::support::TempDir;
namespace fs = std::filesystem;

namespace {

std::string error_of(std::string_view json) {
  try {
    load_scene(json);
  } catch (const SceneError& e) {
    return e.what();
  }
  return "";
}

BuildOptions no_exports() {
  BuildOptions o;
  o.write_exports = false;
  return o;
}

}  // namespace

TEST(SceneLoad, Snowman) {
  const Scene s = load_scene_file(scene_file("snowman.json"));
  EXPECT_EQ(s.name, "snowman");
  EXPECT_EQ(s.objects.size(), 9u);
  std::set<std::tuple<double, double, double>> colors;
  for (const auto& o : s.objects) {
    ASSERT_TRUE(o.color.has_value());
    colors.insert({o.color->r, o.color->g, o.color->b});
  }
  EXPECT_EQ(colors.size(), 3u);
  ASSERT_EQ(s.exports.size(), 2u);
  EXPECT_EQ(s.exports[0].format, ExportFormat::kWrl);
  EXPECT_EQ(s.exports[1].format, ExportFormat::kStlBinary);
  EXPECT_EQ(*s.objects.back().quality.params.max_cell_area, 0.00005);
  EXPECT_EQ(*s.objects.front().quality.params.max_cell_area, 0.0005);
}

TEST(SceneLoad, AllShippedScenesLoad) {
  for (const auto& e : fs::directory_iterator(MATHSCULPT_SCENES)) {
    EXPECT_NO_THROW(load_scene_file(e.path())) << e.path();
  }
}

TEST(SceneLoad, NoObjects) {
  EXPECT_NE(error_of(R"json({"objects": []})json").find("at least one object"), std::string::npos);
}

TEST(SceneLoad, BadExpressionNamesObjectAndOffset) {
  try {
    load_scene_file(fixture("scenes/bad_expr.json"));
    FAIL();
  } catch (const SceneError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("objects[1]"), std::string::npos) << msg;
    EXPECT_NE(msg.find("broken curve"), std::string::npos) << msg;
    EXPECT_NE(msg.find(".f[0]"), std::string::npos) << msg;
    EXPECT_NE(msg.find("position 5"), std::string::npos) << msg;
  }
}

TEST(SceneLoad, SchemaErrors) {
  EXPECT_NE(error_of(R"json({"objects": [{"kind": "sphere", "radius": 1, "colour": "red"}]})json")
                .find("colour"),
            std::string::npos);
  EXPECT_NE(error_of(R"json({"objects": [{"kind": "sphere", "color": "mauve"}]})json").find("mauve"),
            std::string::npos);
  EXPECT_NE(error_of(R"json({"objects": [{"kind": "blob"}]})json").find("blob"), std::string::npos);
  EXPECT_NE(error_of(R"json({"objects": [{"kind": "sphere"}],
      "exports": [{"format": "stl", "path": "a.stl"}, {"format": "stl_ascii", "path": "a.stl"}]})json")
                .find("a.stl"),
            std::string::npos);
  EXPECT_FALSE(error_of(R"json({"objects": [{"kind": "sphere"}],
      "exports": [{"format": "ply", "path": "a.ply"}]})json")
                   .empty());
  EXPECT_FALSE(error_of(R"json({"objects": [{"kind": "sphere", "radius": -1}]})json").empty());
  EXPECT_FALSE(error_of(R"json({"objects": [{"kind": "region", "predicate": "x < t",
      "box": [[0,0,0],[1,1,1]]}]})json")
                   .empty());
  EXPECT_FALSE(error_of(R"json({"objects": [{"kind": "csg", "op": "difference", "children": [
      {"kind": "sphere"}, {"kind": "sphere"}, {"kind": "sphere"}]}]})json")
                   .empty());
  EXPECT_FALSE(error_of("{not json").empty());
}

TEST(SceneLoad, ColorsAndAngles) {
  EXPECT_EQ(parse_color("orange"), (Rgb{1, 0.5, 0}));
  const auto hex = parse_color("#FF8000");
  ASSERT_TRUE(hex);
  EXPECT_EQ(hex->r, 1);
  EXPECT_NEAR(hex->g, 128 / 255.0, 1e-15);
  EXPECT_FALSE(parse_color("#12345").has_value());
  EXPECT_FALSE(parse_color("White").has_value());
  EXPECT_DOUBLE_EQ(parse_angle("90deg"), std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(parse_angle("pi/4"), std::numbers::pi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("0.5"), 0.5);
  EXPECT_THROW(parse_angle("ninety"), SceneError);
}

TEST(SceneBuild, TransformOrderFixtures) {
  const auto expected =
      nlohmann::json::parse(meshio::read_file(fixture("scenes/transform_order.expected.json")));
  for (const auto& [name, box] : expected.items()) {
    const BuildResult r = build(load_scene_file(fixture("scenes/" + name)), no_exports());
    const Aabb b = bounds(r.merged);
    for (int a = 0; a < 3; ++a) {
      EXPECT_NEAR(b.min[a], box["min"][a].get<double>(), 1e-12) << name;
      EXPECT_NEAR(b.max[a], box["max"][a].get<double>(), 1e-12) << name;
    }
  }
}

TEST(SceneBuild, SnowmanBoundsAndParts) {
  TempDir dir;
  BuildOptions o;
  o.out_dir = dir.path();
  o.threads = 2;
  const BuildResult r = build(load_scene_file(scene_file("snowman.json")), o);
  ASSERT_EQ(r.per_object.size(), 9u);
  std::size_t vertex_sum = 0;
  for (std::size_t i = 0; i < r.per_object.size(); ++i) {
    EXPECT_TRUE(r.reports[i].watertight) << i;
    EXPECT_TRUE(r.reports[i].orientation_consistent) << i;
    EXPECT_EQ(r.reports[i].euler_characteristic, 2) << i;
    vertex_sum += r.per_object[i].vertex_count();
  }
  EXPECT_EQ(r.merged.vertex_count(), vertex_sum);
  EXPECT_EQ(r.dropped_degenerate, 0u);
  // Analytic extents: snowball1 spans z >= -1 and |x|, |y| <= 1, the hat top is
  // z = 3.5.
  const Aabb b = bounds(r.merged);
  const double cell = std::sqrt(0.0005);
  EXPECT_NEAR(b.min.x, -1, cell);
  EXPECT_NEAR(b.max.x, 1, cell);
  EXPECT_NEAR(b.min.y, -1, cell);
  EXPECT_NEAR(b.max.y, 1, cell);
  EXPECT_NEAR(b.min.z, -1, cell);
  EXPECT_NEAR(b.max.z, 3.5, cell);
  ASSERT_EQ(r.written_files.size(), 2u);
  EXPECT_TRUE(fs::exists(dir / "snowmanHD.wrl"));
  EXPECT_TRUE(fs::exists(dir / "snowman.stl"));
  const auto wrl = support::parse_wrl(meshio::read_file(dir / "snowmanHD.wrl"));
  EXPECT_EQ(wrl.faces.size(), r.merged.triangle_count());
  std::set<std::tuple<double, double, double>> colors;
  for (const Vec3& c : wrl.colors) colors.insert({c.x, c.y, c.z});
  EXPECT_EQ(colors.size(), 3u);
  EXPECT_EQ(meshio::read_stl(dir / "snowman.stl").triangle_count(), r.merged.triangle_count());
}

TEST(SceneBuild, MixedKindsAllExports) {
  TempDir dir;
  BuildOptions o;
  o.out_dir = dir.path();
  const BuildResult r = build(load_scene_file(fixture("scenes/mixed.json")), o);
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    EXPECT_TRUE(r.reports[i].watertight) << i;
    EXPECT_TRUE(r.reports[i].orientation_consistent) << i;
  }
  EXPECT_EQ(support::split_components(r.per_object[1]).size(), 50u);
  EXPECT_EQ(r.written_files.size(), 4u);
  const auto ply = support::parse_ply(meshio::read_file(dir / "mixed.ply"));
  EXPECT_EQ(ply.faces.size(), r.merged.triangle_count());
  EXPECT_EQ(meshio::read_stl(dir / "mixed_ascii.stl").triangle_count(),
            meshio::read_stl(dir / "mixed.stl").triangle_count());
  // center_at_origin, then a shift of -3 in x.
  const Vec3 c = centroid(r.per_object[4]).point;
  EXPECT_NEAR(c.x, -3, 1e-9);
  EXPECT_NEAR(c.y, 0, 1e-9);
  EXPECT_NEAR(c.z, 0, 1e-9);
  EXPECT_NEAR(bounds(r.per_object[5]).extent().x, 1, 1e-12);
}

TEST(SceneBuild, OpenObjectAbortsBeforeWriting) {
  TempDir dir;
  BuildOptions o;
  o.out_dir = dir.path();
  const Scene s = load_scene_file(fixture("scenes/open_tube.json"));
  EXPECT_THROW(build(s, o), ValidationError);
  EXPECT_TRUE(fs::is_empty(dir.path()));
  o.allow_open = true;
  const BuildResult r = build(s, o);
  EXPECT_FALSE(r.reports[0].watertight);
  EXPECT_EQ(r.reports[0].boundary_edge_count, 24u);
  EXPECT_TRUE(fs::exists(dir / "pipe.stl"));
}

TEST(SceneBuild, GenerationErrorNamesObject) {
  const Scene s = load_scene(R"json({"objects": [
      {"kind": "sphere"},
      {"name": "bad log", "kind": "parametric_curve", "f": ["log(t)", "0", "0"], "t": [-1, 1]}]})json");
  try {
    build(s, no_exports());
    FAIL();
  } catch (const SceneError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("objects[1]"), std::string::npos) << msg;
    EXPECT_NE(msg.find("bad log"), std::string::npos) << msg;
  }
}

TEST(SceneBuild, UnwritableExportIsIoError) {
  const Scene s = load_scene(R"json({"objects": [{"kind": "sphere"}],
      "exports": [{"format": "stl", "path": "ok.stl"},
                  {"format": "stl", "path": "blocked.stl"}]})json");
  TempDir dir;
  // A directory where the second file should go makes that write fail.
  fs::create_directory(dir / "blocked.stl");
  BuildOptions o;
  o.out_dir = dir.path();
  EXPECT_THROW(build(s, o), IoError);
  EXPECT_FALSE(fs::exists(dir / "ok.stl"));
}

TEST(SceneBuild, QualityOverrideIsIsolated) {
  const char* base = R"json({"quality": {"max_cell_area": 0.01}, "objects": [
      {"kind": "sphere", "radius": 1},
      {"kind": "cylinder", "p1": [0,0,0], "p2": [0,0,1], "radius": 0.5}]})json";
  const char* more = R"json({"quality": {"max_cell_area": 0.01}, "objects": [
      {"kind": "sphere", "radius": 1},
      {"kind": "cylinder", "p1": [0,0,0], "p2": [0,0,1], "radius": 0.5},
      {"kind": "sphere", "center": [3,0,0], "quality": {"max_cell_area": 0.0001}}]})json";
  const BuildResult a = build(load_scene(base), no_exports());
  const BuildResult b = build(load_scene(more), no_exports());
  EXPECT_EQ(a.per_object[0], b.per_object[0]);
  EXPECT_EQ(a.per_object[1], b.per_object[1]);
  EXPECT_GT(b.per_object[2].triangle_count(), b.per_object[0].triangle_count());
}

TEST(SceneBuild, QualityScale) {
  const Scene s = load_scene(R"json({"objects": [{"kind": "parametric_curve",
      "f": ["cos(t)", "sin(t)", "t/4"], "t": [0, 6],
      "quality": {"points_along": 30, "points_around": 10}}]})json");
  BuildOptions o = no_exports();
  const auto one = build(s, o);
  o.quality_scale = 2;
  const auto two = build(s, o);
  EXPECT_EQ(one.per_object[0].vertex_count(), 30u * 10 + 2);
  EXPECT_EQ(two.per_object[0].vertex_count(), 60u * 20 + 2);
}

TEST(SceneBuild, Determinism) {
  const Scene s = load_scene_file(fixture("scenes/mixed.json"));
  BuildOptions o = no_exports();
  o.threads = 1;
  const auto a = build(s, o);
  const auto a2 = build(s, o);
  o.threads = 4;
  const auto b = build(s, o);
  EXPECT_EQ(meshio::encode_stl(a.merged, meshio::StlFormat::kBinary),
            meshio::encode_stl(a2.merged, meshio::StlFormat::kBinary));
  EXPECT_EQ(support::sorted_vertices(a.merged), support::sorted_vertices(b.merged));
  EXPECT_EQ(support::triangle_multiset(a.merged), support::triangle_multiset(b.merged));
}

TEST(SceneBuild, ScenesInRepoAreWatertight) {
  for (const char* name : {"helix.json", "torus.json", "shell.json"}) {
    const BuildResult r = build(load_scene_file(scene_file(name)), no_exports());
    const auto rep = validate(r.merged);
    EXPECT_TRUE(rep.watertight) << name;
    EXPECT_TRUE(rep.orientation_consistent) << name;
  }
  const BuildResult torus = build(load_scene_file(scene_file("torus.json")), no_exports());
  EXPECT_EQ(torus.reports[0].euler_characteristic, 0);
  const double pappus = 2 * std::numbers::pi * std::numbers::pi * 3;
  EXPECT_NEAR(signed_volume(torus.merged), pappus, 0.01 * pappus);
}
