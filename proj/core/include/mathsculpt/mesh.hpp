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
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mathsculpt/geom.hpp"

namespace mathsculpt {

/// Linear RGB, each channel in [0, 1].
struct Rgb {
  double r = 0;
  double g = 0;
  double b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Vertex indices, counterclockwise seen from outside.
using Triangle = std::array<std::uint32_t, 3>;

/// Indexed triangle mesh with optional per-vertex color.
///
/// Invariants (checked on construction, GeometryError otherwise): every index
/// is in range, no triangle repeats an index, coordinates are finite, and a
/// color list, when present, has one entry per vertex.
class TriangleMesh {
 public:
  TriangleMesh() = default;
  TriangleMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles,
               std::optional<std::vector<Rgb>> colors = std::nullopt);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::optional<std::vector<Rgb>>& colors() const { return colors_; }
  bool has_colors() const { return colors_.has_value(); }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }
  bool empty() const { return triangles_.empty(); }

  /// Same geometry with every vertex painted `color`.
  TriangleMesh with_color(const Rgb& color) const;
  TriangleMesh without_colors() const;

  friend bool operator==(const TriangleMesh&, const TriangleMesh&) = default;

 private:
  std::vector<Vec3> vertices_;
  std::vector<Triangle> triangles_;
  std::optional<std::vector<Rgb>> colors_;
};

/// Printability diagnostics. Edges are counted after welding vertices within
/// the requested tolerance.
struct ValidationReport {
  bool watertight = false;
  bool orientation_consistent = false;
  long long euler_characteristic = 0;
  std::size_t connected_components = 0;
  std::size_t boundary_edge_count = 0;
  std::size_t nonmanifold_edge_count = 0;
  std::size_t degenerate_triangle_count = 0;
  std::size_t duplicate_vertex_pairs = 0;
  double min_triangle_area = 0;
  std::size_t vertex_count = 0;  // after welding
  std::size_t edge_count = 0;
  std::size_t triangle_count = 0;
  /// First few boundary edges as coordinate pairs, for diagnostics.
  std::vector<std::array<Vec3, 2>> sample_boundary_edges;
};

ValidationReport validate(const TriangleMesh& m, double weld_tolerance = 0.0);

/// Throws GeometryError for an empty mesh.
Aabb bounds(const TriangleMesh& m);

struct CentroidResult {
  Vec3 point;
  /// True when the mesh is not closed and the area-weighted surface centroid
  /// was returned instead of the solid centroid.
  bool surface_fallback = false;
};

/// Solid centroid for closed meshes, surface centroid (flagged) otherwise.
/// Throws GeometryError for an empty mesh or zero enclosed volume.
CentroidResult centroid(const TriangleMesh& m);

/// Enclosed volume; positive for outward orientation. Throws ValidationError
/// unless the mesh is watertight and consistently oriented.
double signed_volume(const TriangleMesh& m);

/// Sum of det(v0, v1, v2) / 6 with no closedness check.
double signed_volume_unchecked(const TriangleMesh& m);

double surface_area(const TriangleMesh& m);
double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);
/// Unit normal from winding; zero for degenerate triangles.
Vec3 triangle_normal(const Vec3& a, const Vec3& b, const Vec3& c);

struct Segment {
  Vec3 a;
  Vec3 b;
};

struct TrianglePoints {
  Vec3 a;
  Vec3 b;
  Vec3 c;
};

using MeshPrimitive = std::variant<Vec3, Segment, TrianglePoints>;

/// Unique vertex positions, in first-use order.
std::vector<Vec3> extract_points(const TriangleMesh& m);
/// Unique undirected edges, in first-use order.
std::vector<Segment> extract_edges(const TriangleMesh& m);
std::vector<TrianglePoints> extract_faces(const TriangleMesh& m);
/// dim 0, 1 or 2 (GeometryError otherwise).
std::vector<MeshPrimitive> extract(const TriangleMesh& m, int dim);

/// Maps vertices; flips winding when the transform reverses orientation.
/// Throws GeometryError for a singular transform.
TriangleMesh apply_transform(const TriangleMesh& m, const AffineTransform& t);

/// Uniform scale making the x-extent equal `target_x`, anchored at the
/// bounding-box min corner.
TriangleMesh resize(const TriangleMesh& m, double target_x);
/// Per-axis scale making the extents equal `target`, anchored at the
/// bounding-box min corner.
TriangleMesh resize(const TriangleMesh& m, const Vec3& target);
/// The transforms resize() applies, for callers that need to reuse them.
AffineTransform resize_transform(const Aabb& box, double target_x);
AffineTransform resize_transform(const Aabb& box, const Vec3& target);

/// Translates by minus the centroid.
TriangleMesh center_at_origin(const TriangleMesh& m);

struct MergeResult {
  TriangleMesh mesh;
  std::size_t dropped_degenerate = 0;
};

/// Index-offset concatenation. When `colors` is given it holds one color per
/// input mesh and is expanded per vertex; otherwise colors are kept only if
/// every input carries them. Triangles with area < 1e-14 * diagonal^2 are
/// dropped and counted.
MergeResult merge(std::span<const TriangleMesh> meshes,
                  std::optional<std::span<const Rgb>> colors = std::nullopt);

struct WeldMap {
  /// For each input vertex, the index of its welded representative in the
  /// compacted vertex list.
  std::vector<std::uint32_t> remap;
  /// Representative positions (the first vertex of each cluster).
  std::vector<Vec3> positions;
};

/// Greedy first-come welding: vertex i joins the cluster of the earliest
/// vertex within `tolerance` (Chebyshev-bucketed, Euclidean test). With
/// tolerance 0 only bitwise-equal positions merge. Deterministic.
WeldMap weld_vertices(std::span<const Vec3> positions, double tolerance);

/// Welds and drops triangles that collapse. Colors follow representatives.
TriangleMesh weld(const TriangleMesh& m, double tolerance);

/// Greedy orientation propagation across shared edges, then each connected
/// component is flipped if its enclosed volume is negative.
TriangleMesh orient_consistently(const TriangleMesh& m);

/// Angle-weighted average of incident face normals, normalized. Vertices with
/// no non-degenerate incident face get the zero vector.
std::vector<Vec3> vertex_normals(const TriangleMesh& m);

}  // namespace mathsculpt
