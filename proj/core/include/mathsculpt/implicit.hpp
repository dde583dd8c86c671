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
#include <optional>
#include <vector>

#include "mathsculpt/expr.hpp"
#include "mathsculpt/field.hpp"
#include "mathsculpt/mesh.hpp"
#include "mathsculpt/tessellate.hpp"

/// Signed fields, CSG, and marching-cubes meshing.
namespace mathsculpt::implicit {

enum class CsgOp { kLeaf, kUnion, kIntersection, kDifference, kComplement };

struct CsgNode {
  CsgOp op = CsgOp::kLeaf;
  std::vector<CsgNode> children;
  SignedField field;  // kLeaf only

  static CsgNode leaf(SignedField f);
  static CsgNode union_of(std::vector<CsgNode> children);
  static CsgNode intersection_of(std::vector<CsgNode> children);
  static CsgNode difference(CsgNode a, CsgNode b);
  static CsgNode complement(CsgNode a);
};

/// Throws GeometryError when a node breaks its arity rule (difference: 2,
/// complement: 1, leaf: 0 with a field, union/intersection: at least 1).
void check(const CsgNode& node);

/// min for union, max for intersection, max(a, -b) for difference, -a for
/// complement.
double csg_eval(const CsgNode& node, const Vec3& p);

/// The tree as a single field. A bare leaf keeps its own flags; combinations
/// are sign-only when every leaf is, continuous otherwise.
SignedField to_field(const CsgNode& node);

struct GridSpec {
  Aabb box;
  /// Cells per axis.
  std::array<int, 3> resolution{64, 64, 64};
  int bisection_iterations = 16;

  /// Throws GeometryError for resolutions below 2, a degenerate box, or a
  /// negative iteration count.
  void check() const;
};

enum class Crossing {
  kAuto,       // linear for exact-distance fields, bisection otherwise
  kBisection,  // sign bisection; only signs are trusted
  kLinear,     // linear interpolation of node values
};

struct MarchingOptions {
  Crossing crossing = Crossing::kAuto;
  int threads = 1;
};

/// Marching cubes over cell-centered samples: node (i, j, k) sits at
/// box.min + (i + 1/2, j + 1/2, k + 1/2) * extent / resolution. A ghost layer
/// one node outside the box counts as outside, and crossings against it are
/// placed on the box face, so clipped regions get flat caps. The case table
/// resolves ambiguous faces by separating inside corners, which keeps
/// neighbouring cells consistent; the output is closed and outward-oriented.
/// The result does not depend on the thread count.
///
/// Throws GeometryError for an invalid grid or a non-finite sample.
TriangleMesh marching_cubes(const CsgNode& node, const GridSpec& grid,
                            const MarchingOptions& options = {});

/// Thickened level set: meshes |f - k| - delta <= 0 with linear crossings.
/// The band is thinner where |grad f| is large and swells near critical
/// points of f.
TriangleMesh iso_shell(const expr::ExprAst& f, double k, double delta, const GridSpec& grid,
                       int threads = 1);

/// Parity field of a closed mesh: -1 inside, +1 outside. Rays are cast along
/// a fixed direction through a bounding-volume hierarchy; when a hit lands
/// within 1e-9 of a triangle edge or vertex the query is repeated along two
/// fallback directions. Throws ValidationError for a mesh that is not
/// watertight.
SignedField mesh_to_field(const TriangleMesh& m);

enum class BooleanOp { kUnion, kIntersection, kDifference };

/// Resampled boolean of two closed meshes. Without a box the grid covers the
/// union of both bounds grown by two cells on every side.
TriangleMesh mesh_boolean(const TriangleMesh& a, const TriangleMesh& b, BooleanOp op,
                          std::array<int, 3> resolution, std::optional<Aabb> box = std::nullopt,
                          const MarchingOptions& options = {});

SignedField sphere_field(const Vec3& center, double radius);
SignedField ellipsoid_field(const Vec3& center, const Vec3& radii);
SignedField cuboid_field(const Vec3& min_corner, const Vec3& max_corner);
SignedField cylinder_field(const Vec3& p1, const Vec3& p2, double radius);
SignedField cone_field(const Vec3& base_center, const Vec3& apex, double radius);
/// Maximum of the signed distances to the face planes.
SignedField polyhedron_field(const tessellate::PolygonMesh& solid);
SignedField primitive_field(const tessellate::PrimitiveSpec& spec);

/// p -> f(inverse(t)(p)). Exact distances stay exact only under rigid t.
SignedField transformed_field(const SignedField& f, const AffineTransform& t);

/// The bounding box a primitive field should be sampled over.
Aabb primitive_bounds(const tessellate::PrimitiveSpec& spec);

}  // namespace mathsculpt::implicit
