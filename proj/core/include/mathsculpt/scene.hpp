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
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mathsculpt/expr.hpp"
#include "mathsculpt/implicit.hpp"
#include "mathsculpt/mesh.hpp"
#include "mathsculpt/tessellate.hpp"

/// Declarative scene documents (JSON) and the build pipeline.
namespace mathsculpt::scene {

enum class ExportFormat { kStlBinary, kStlAscii, kPly, kWrl };

struct ExportTarget {
  ExportFormat format = ExportFormat::kStlBinary;
  std::filesystem::path path;  // relative paths resolve against the output directory
};

struct GridDefaults {
  std::array<int, 3> resolution{64, 64, 64};
  int bisection_iterations = 16;
};

struct Quality {
  tessellate::QualityParams params;
  GridDefaults grid;
};

struct Rotate {
  double angle = 0;  // radians
  Vec3 axis{0, 0, 1};
  Vec3 point;
};

struct Translate {
  Vec3 offset;
};

struct Scale {
  Vec3 factors{1, 1, 1};
  Vec3 anchor;
};

struct Resize {
  std::variant<double, Vec3> target;
};

struct CenterAtOrigin {};

using TransformStep = std::variant<Rotate, Translate, Scale, Resize, CenterAtOrigin>;

struct SceneObject;

struct PrimitiveBody {
  tessellate::PrimitiveSpec spec;
};

struct CurveBody {
  std::array<expr::ExprAst, 3> f;
  tessellate::Interval t;
  tessellate::TubeOptions tube;
};

struct BSplineCurveBody {
  std::vector<Vec3> control;
  int degree = 3;
  tessellate::TubeOptions tube;
};

struct GraphSurfaceBody {
  expr::ExprAst f;
  tessellate::GraphDomain domain;
  double thickness = 0.2;
};

struct ParametricSurfaceBody {
  std::array<expr::ExprAst, 3> f;
  tessellate::Interval u;
  tessellate::Interval v;
  tessellate::SurfaceMode mode;
  tessellate::SurfaceSamples samples;
};

struct BSplineSurfaceBody {
  tessellate::ControlGrid control;
  tessellate::SurfaceMode mode;
  tessellate::SurfaceSamples samples;
};

struct IsoShellBody {
  expr::ExprAst f;
  double level = 0;
  double delta = 0.1;
  Aabb box;
};

struct RegionBody {
  expr::ExprAst predicate;
  Aabb box;
};

struct WireframeBody {
  std::shared_ptr<const SceneObject> source;
  double thickness = 0.06;
};

struct CsgBody {
  implicit::BooleanOp op = implicit::BooleanOp::kUnion;
  std::vector<SceneObject> children;
  std::optional<Aabb> box;
};

using Body = std::variant<PrimitiveBody, CurveBody, BSplineCurveBody, GraphSurfaceBody,
                          ParametricSurfaceBody, BSplineSurfaceBody, IsoShellBody, RegionBody,
                          WireframeBody, CsgBody>;

struct SceneObject {
  std::string label;  // "name" from the document, or "<kind> #<index>"
  std::string kind;
  Body body;
  std::optional<Rgb> color;
  std::vector<TransformStep> transforms;
  Quality quality;  // scene defaults with the object's override applied
  bool allow_open = false;
};

struct Scene {
  std::string name;
  std::string units = "mm";
  Quality quality;
  std::vector<SceneObject> objects;
  std::vector<ExportTarget> exports;
};

/// Parses and validates a scene document. Every expression is parsed here, so
/// errors name the object, the field, and the offset in the expression.
/// Throws SceneError.
Scene load_scene(std::string_view json_text);
Scene load_scene_file(const std::filesystem::path& path);

/// Named colors: white, black, orange, red, green, blue, gray; or "#RRGGBB".
std::optional<Rgb> parse_color(std::string_view text);

/// Angles: a number of radians, "<number>deg", or a constant expression
/// such as "pi/4". Throws SceneError.
double parse_angle(std::string_view text);

struct BuildOptions {
  std::filesystem::path out_dir = ".";
  /// Multiplies sample counts and grid resolutions; divides cell budgets.
  double quality_scale = 1;
  int threads = 1;
  /// Accept open objects everywhere, as if each had "allow_open".
  bool allow_open = false;
  /// Greedy orientation repair after generation.
  bool repair_orientation = false;
  bool write_exports = true;
};

struct BuildResult {
  TriangleMesh merged;
  std::vector<TriangleMesh> per_object;
  std::vector<ValidationReport> reports;
  std::vector<std::filesystem::path> written_files;
  std::size_t dropped_degenerate = 0;
};

/// Generates every object (concurrently), applies its transforms in order,
/// validates, merges with colors, then writes the exports. Nothing is written
/// when an object without allow_open is not watertight (ValidationError) or
/// when generation fails (SceneError naming the object). Export failures
/// throw IoError after removing files this build already wrote.
BuildResult build(const Scene& s, const BuildOptions& options = {});

/// One object's mesh after its transforms, as build() produces it.
TriangleMesh build_object(const SceneObject& obj, const BuildOptions& options = {});

std::string_view format_name(ExportFormat f);

}  // namespace mathsculpt::scene
