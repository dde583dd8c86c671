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
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "mathsculpt/expr.hpp"
#include "mathsculpt/mesh.hpp"

/// Analytic shapes to triangle meshes under quality budgets.
namespace mathsculpt::tessellate {

/// Discretization budget.
struct QualityParams {
  /// Upper bound on the area of any emitted triangle (primitives only).
  std::optional<double> max_cell_area;
  /// Samples along a curve, or per surface parameter.
  int points_along = 100;
  /// Samples around a tube cross-section or a circular rim.
  int points_around = 24;

  /// Throws GeometryError when points_along < 2, points_around < 3, or the
  /// cell budget is not positive.
  void check() const;
};

struct Interval {
  double lo = 0;
  double hi = 1;
};

struct SphereSpec {
  Vec3 center;
  double radius = 1;
};

/// Axis-aligned ellipsoid; the sphere is the equal-radii case.
struct EllipsoidSpec {
  Vec3 center;
  Vec3 radii{1, 1, 1};
};

struct CylinderSpec {
  Vec3 p1;
  Vec3 p2{0, 0, 1};
  double radius = 1;
};

struct ConeSpec {
  Vec3 base_center;
  Vec3 apex{0, 0, 1};
  double radius = 1;
};

struct CuboidSpec {
  Vec3 min_corner;
  Vec3 max_corner{1, 1, 1};
};

enum class PolyhedronName { kTetrahedron, kCube, kOctahedron, kIcosahedron, kDodecahedron };

/// Regular polyhedron centered at the origin.
struct PolyhedronSpec {
  PolyhedronName name = PolyhedronName::kCube;
  double edge_length = 1;
};

using PrimitiveSpec =
    std::variant<SphereSpec, EllipsoidSpec, CylinderSpec, ConeSpec, CuboidSpec, PolyhedronSpec>;

/// Throws GeometryError when the spec violates its invariants.
void check(const PrimitiveSpec& spec);

/// Closed, outward-oriented mesh of a primitive.
///
/// Spheres and ellipsoids subdivide an icosahedron to the smallest depth whose
/// largest triangle meets max_cell_area (depth 3 without a budget; more than
/// kMaxSubdivisionDepth levels throws BudgetError). Cylinders and cones use
/// points_around sides, refined until the budget holds. Cuboids are 12
/// triangles; polyhedra are exact and fan-triangulated.
TriangleMesh primitive(const PrimitiveSpec& spec, const QualityParams& q = {});

inline constexpr int kMaxSubdivisionDepth = 8;

/// Unit icosphere at a fixed subdivision depth.
TriangleMesh icosphere(int depth);

std::optional<PolyhedronName> polyhedron_from_name(std::string_view name);
std::string_view polyhedron_name(PolyhedronName name);

/// Polygon-faced mesh (faces counterclockwise from outside).
struct PolygonMesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<std::uint32_t>> faces;

  /// Unique undirected polygon edges as index pairs.
  std::vector<std::array<std::uint32_t, 2>> edges() const;
  /// Fan triangulation of every face.
  TriangleMesh triangulate() const;
};

/// Exact vertex coordinates (golden-ratio construction for the icosahedron
/// and dodecahedron) centered at the origin.
PolygonMesh polyhedron_polygons(PolyhedronName name, double edge_length);

using CurveFn = std::function<Vec3(double)>;

enum class CapStyle { kFlat, kNone };

struct TubeOptions {
  double radius = 0.1;
  /// Stitch the last ring to the first; the curve endpoints must coincide.
  bool closed = false;
  CapStyle caps = CapStyle::kFlat;
};

/// Sweeps a points_around-gon along points_along samples of the curve using
/// rotation-minimizing frames (double reflection). Closed tubes distribute
/// the frame holonomy evenly so the seam does not twist.
///
/// Layout: ring i occupies vertices [i * around, (i + 1) * around); cap
/// centers, when present, follow the rings.
TriangleMesh tube_sweep(const CurveFn& curve, Interval t, const TubeOptions& options,
                        const QualityParams& q = {});

/// Curve given as three expressions in `t`.
TriangleMesh tube_sweep(const std::array<expr::ExprAst, 3>& curve, Interval t,
                        const TubeOptions& options, const QualityParams& q = {});

/// Samples the curve the same way tube_sweep does (the tube spine).
std::vector<Vec3> sample_curve(const CurveFn& curve, Interval t, int count, bool closed);

CurveFn curve_from_exprs(const std::array<expr::ExprAst, 3>& curve);

/// De Boor evaluation of a B-spline curve at t in [0, 1]. Open curves use
/// clamped uniform knots; closed curves use periodic uniform knots over the
/// wrapped control polygon. Throws GeometryError for fewer than degree + 1
/// control points or t outside [0, 1].
Vec3 bspline_curve_point(std::span<const Vec3> control, bool closed, int degree, double t);

/// Weight of each control point at t, computed through the same de Boor
/// recursion (on indicator coefficients).
std::vector<double> bspline_curve_weights(std::size_t control_count, bool closed, int degree,
                                          double t);

/// Row-major grid of control points: rows[i][j].
using ControlGrid = std::vector<std::vector<Vec3>>;

/// Tensor-product clamped B-spline point at (u, v) in [0, 1]^2.
Vec3 bspline_surface_point(const ControlGrid& control, int degree, double u, double v);

std::vector<std::vector<double>> bspline_surface_weights(std::size_t rows, std::size_t cols,
                                                         int degree, double u, double v);

struct RectDomain {
  Interval x;
  Interval y;
};

struct DiskDomain {
  double cx = 0;
  double cy = 0;
  double radius = 1;
};

using GraphDomain = std::variant<RectDomain, DiskDomain>;

using GraphFn = std::function<double(double, double)>;

/// Open sampled graph z = f(x, y): a points_along^2 grid over a rectangle, or
/// a polar grid (points_along radial samples including the center,
/// points_around angular) over a disk. Throws GeometryError for non-finite
/// samples.
TriangleMesh sample_graph(const GraphFn& f, const GraphDomain& domain, const QualityParams& q);

/// Thickened graph surface: top sheet (the base vertices offset by
/// +thickness/2 along the unit vertex normals), bottom sheet (offset by
/// -thickness/2), and a side wall joining the boundary rings. The first
/// base-vertex-count vertices are the top sheet, the next block the bottom
/// sheet, both in base order.
TriangleMesh graph_surface(const GraphFn& f, const GraphDomain& domain, double thickness,
                           const QualityParams& q = {});

TriangleMesh graph_surface(const expr::ExprAst& f, const GraphDomain& domain, double thickness,
                           const QualityParams& q = {});

/// Turns an open, consistently oriented sheet into a closed solid of the given
/// thickness centered on the sheet. Vertex layout as in graph_surface.
/// Throws GeometryError when a vertex normal is degenerate.
TriangleMesh offset_shell(const TriangleMesh& sheet, double thickness);

using SurfaceFn = std::function<Vec3(double, double)>;

/// The parametrization closes on itself: periodic directions are stitched and
/// coincident samples (poles) are merged. The result must be watertight.
struct ClosedMode {
  bool periodic_u = true;
  bool periodic_v = true;
};

/// The parametrization is thickened into a solid. Periodic directions are
/// stitched before offsetting.
struct ShellMode {
  double thickness = 0.2;
  bool periodic_u = false;
  bool periodic_v = false;
};

using SurfaceMode = std::variant<ClosedMode, ShellMode>;

/// Per-parameter sample counts; 0 means points_along. In a periodic
/// direction the count is the number of distinct samples.
struct SurfaceSamples {
  int u = 0;
  int v = 0;
};

/// Samples a parametric surface into an open grid sheet (periodic seams
/// stitched). Throws GeometryError when a claimed periodic seam does not
/// match within 1e-6 of the surface scale.
TriangleMesh sample_parametric(const SurfaceFn& f, Interval u, Interval v, bool periodic_u,
                               bool periodic_v, const QualityParams& q, SurfaceSamples samples);

TriangleMesh parametric_surface(const SurfaceFn& f, Interval u, Interval v,
                                const SurfaceMode& mode, const QualityParams& q = {},
                                SurfaceSamples samples = {});

TriangleMesh parametric_surface(const std::array<expr::ExprAst, 3>& f, Interval u, Interval v,
                                const SurfaceMode& mode, const QualityParams& q = {},
                                SurfaceSamples samples = {});

/// Cubic tensor-product B-spline surface on [0, 1]^2, meshed through the
/// parametric path. Throws GeometryError for grids smaller than 4x4.
TriangleMesh bspline_surface(const ControlGrid& control, const SurfaceMode& mode,
                             const QualityParams& q = {}, SurfaceSamples samples = {});

/// One sphere per vertex and one capped cylinder per edge, merged without a
/// union pass; every part is closed on its own. Throws GeometryError for a
/// zero-length edge or non-positive thickness.
TriangleMesh wireframe(std::span<const Vec3> vertices, std::span<const Segment> edges,
                       double thickness, const QualityParams& q = {});

}  // namespace mathsculpt::tessellate
