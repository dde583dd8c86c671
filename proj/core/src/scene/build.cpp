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
#include <exception>
#include <system_error>

#include "mathsculpt/error.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/parallel.hpp"
#include "mathsculpt/scene.hpp"

namespace mathsculpt::scene {

namespace {

int scale_count(int n, double k, int floor) {
  return std::max(floor, static_cast<int>(std::lround(n * k)));
}

Quality scaled(Quality q, double k) {
  if (k == 1) return q;
  q.params.points_along = scale_count(q.params.points_along, k, 2);
  q.params.points_around = scale_count(q.params.points_around, k, 3);
  if (q.params.max_cell_area) *q.params.max_cell_area /= k;
  for (int& n : q.grid.resolution) n = scale_count(n, k, 2);
  return q;
}

tessellate::SurfaceSamples scaled(tessellate::SurfaceSamples s, double k) {
  if (s.u > 0) s.u = scale_count(s.u, k, 2);
  if (s.v > 0) s.v = scale_count(s.v, k, 2);
  return s;
}

implicit::GridSpec grid_for(const Quality& q, const Aabb& box) {
  implicit::GridSpec g;
  g.box = box;
  g.resolution = q.grid.resolution;
  g.bisection_iterations = q.grid.bisection_iterations;
  return g;
}

bool needs_mesh_for_transforms(const SceneObject& obj) {
  return std::any_of(obj.transforms.begin(), obj.transforms.end(), [](const TransformStep& s) {
    return std::holds_alternative<Resize>(s) || std::holds_alternative<CenterAtOrigin>(s);
  });
}

AffineTransform step_transform(const TransformStep& step, const TriangleMesh& current) {
  return std::visit(
      [&current](const auto& s) -> AffineTransform {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Rotate>) {
          return rotation_about_axis(s.angle, s.axis, s.point);
        } else if constexpr (std::is_same_v<T, Translate>) {
          return translation(s.offset);
        } else if constexpr (std::is_same_v<T, Scale>) {
          return scaling(s.factors, s.anchor);
        } else if constexpr (std::is_same_v<T, Resize>) {
          const Aabb box = bounds(current);
          return std::visit([&box](const auto& t) { return resize_transform(box, t); }, s.target);
        } else {
          return translation(-centroid(current).point);
        }
      },
      step);
}

/// Applies the object's transforms to `mesh` in order and returns their
/// composition.
AffineTransform apply_steps(const SceneObject& obj, TriangleMesh& mesh) {
  AffineTransform total;
  for (const TransformStep& step : obj.transforms) {
    const AffineTransform t = step_transform(step, mesh);
    mesh = apply_transform(mesh, t);
    total = compose(t, total);
  }
  return total;
}

/// Composition of transforms that do not depend on the geometry.
AffineTransform rigid_steps(const SceneObject& obj) {
  AffineTransform total;
  const TriangleMesh none;
  for (const TransformStep& step : obj.transforms) total = compose(step_transform(step, none), total);
  return total;
}

Aabb transform_box(const Aabb& b, const AffineTransform& t) {
  Aabb out;
  for (int c = 0; c < 8; ++c) {
    out.include(t({c & 1 ? b.max.x : b.min.x, c & 2 ? b.max.y : b.min.y,
                   c & 4 ? b.max.z : b.min.z}));
  }
  return out;
}

struct Context {
  BuildOptions options;
  int threads = 1;
};

TriangleMesh generate(const SceneObject& obj, const Context& ctx);

struct ChildField {
  implicit::CsgNode node;
  Aabb box;
};

ChildField child_field(const SceneObject& obj, const Context& ctx);

implicit::CsgNode combine(implicit::BooleanOp op, std::vector<implicit::CsgNode> nodes) {
  using implicit::CsgNode;
  switch (op) {
    case implicit::BooleanOp::kUnion:
      return CsgNode::union_of(std::move(nodes));
    case implicit::BooleanOp::kIntersection:
      return CsgNode::intersection_of(std::move(nodes));
    case implicit::BooleanOp::kDifference:
      return CsgNode::difference(std::move(nodes[0]), std::move(nodes[1]));
  }
  throw GeometryError("unknown boolean operation");
}

/// The CSG tree of a csg body (children transformed) and its sampling box.
ChildField csg_tree(const CsgBody& body, const Context& ctx) {
  std::vector<implicit::CsgNode> nodes;
  Aabb box;
  for (std::size_t i = 0; i < body.children.size(); ++i) {
    ChildField c = child_field(body.children[i], ctx);
    if (i == 0) {
      box = c.box;
    } else if (body.op == implicit::BooleanOp::kUnion) {
      box.include(c.box);
    } else if (body.op == implicit::BooleanOp::kIntersection) {
      box.min = cwise_max(box.min, c.box.min);
      box.max = cwise_min(box.max, c.box.max);
    }
    nodes.push_back(std::move(c.node));
  }
  if (box.empty()) throw GeometryError("csg intersection is empty");
  return {combine(body.op, std::move(nodes)), body.box ? *body.box : box};
}

/// Analytic field where the body has one (primitives, regions, nested csg);
/// otherwise the parity field of the built mesh.
ChildField child_field(const SceneObject& obj, const Context& ctx) {
  SignedField base;
  Aabb box;
  if (const auto* p = std::get_if<PrimitiveBody>(&obj.body)) {
    base = implicit::primitive_field(p->spec);
    box = implicit::primitive_bounds(p->spec);
  } else if (const auto* r = std::get_if<RegionBody>(&obj.body)) {
    const SignedField pred = expr::to_signed_field(r->predicate);
    const SignedField clip = implicit::cuboid_field(r->box.min, r->box.max);
    base = SignedField(
        [pred, clip](const Vec3& q) { return std::max(pred(q), clip(q)); },
        Continuity::kContinuous, FieldSource::kExpression);
    box = r->box;
  } else if (const auto* c = std::get_if<CsgBody>(&obj.body)) {
    ChildField tree = csg_tree(*c, ctx);
    base = implicit::to_field(tree.node);
    box = tree.box;
  } else {
    TriangleMesh mesh = generate(obj, ctx);
    apply_steps(obj, mesh);
    return {implicit::CsgNode::leaf(implicit::mesh_to_field(mesh)), bounds(mesh)};
  }
  AffineTransform t;
  if (needs_mesh_for_transforms(obj)) {
    TriangleMesh mesh = generate(obj, ctx);
    t = apply_steps(obj, mesh);
  } else {
    t = rigid_steps(obj);
  }
  if (obj.transforms.empty()) return {implicit::CsgNode::leaf(base), box};
  return {implicit::CsgNode::leaf(implicit::transformed_field(base, t)), transform_box(box, t)};
}

Aabb inflate_cells(Aabb box, const std::array<int, 3>& resolution) {
  const Vec3 ext = box.extent();
  for (int k = 0; k < 3; ++k) {
    const int n = std::max(resolution[k], 5);
    const double h = ext[k] / (n - 4);
    box.min[k] -= 2 * h;
    box.max[k] += 2 * h;
  }
  return box;
}

TriangleMesh wireframe_mesh(const WireframeBody& w, const Quality& q, const Context& ctx) {
  const SceneObject& src = *w.source;
  TriangleMesh src_mesh = generate(src, ctx);
  const AffineTransform t = apply_steps(src, src_mesh);
  std::vector<Vec3> verts;
  std::vector<Segment> edges;
  const auto* prim = std::get_if<PrimitiveBody>(&src.body);
  const auto* poly = prim ? std::get_if<tessellate::PolyhedronSpec>(&prim->spec) : nullptr;
  if (poly) {
    // Polygon edges, not the fan-triangulation diagonals.
    const auto pm = tessellate::polyhedron_polygons(poly->name, poly->edge_length);
    for (const Vec3& v : pm.vertices) verts.push_back(t(v));
    for (const auto& e : pm.edges()) edges.push_back({verts[e[0]], verts[e[1]]});
  } else {
    verts = extract_points(src_mesh);
    edges = extract_edges(src_mesh);
  }
  return tessellate::wireframe(verts, edges, w.thickness, q.params);
}

TriangleMesh generate(const SceneObject& obj, const Context& ctx) {
  const double k = ctx.options.quality_scale;
  const Quality q = scaled(obj.quality, k);
  return std::visit(
      [&](const auto& b) -> TriangleMesh {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, PrimitiveBody>) {
          return tessellate::primitive(b.spec, q.params);
        } else if constexpr (std::is_same_v<T, CurveBody>) {
          return tessellate::tube_sweep(b.f, b.t, b.tube, q.params);
        } else if constexpr (std::is_same_v<T, BSplineCurveBody>) {
          const std::vector<Vec3> control = b.control;
          const bool closed = b.tube.closed;
          const int degree = b.degree;
          return tessellate::tube_sweep(
              [control, closed, degree](double s) {
                return tessellate::bspline_curve_point(control, closed, degree, s);
              },
              {0, 1}, b.tube, q.params);
        } else if constexpr (std::is_same_v<T, GraphSurfaceBody>) {
          return tessellate::graph_surface(b.f, b.domain, b.thickness, q.params);
        } else if constexpr (std::is_same_v<T, ParametricSurfaceBody>) {
          return tessellate::parametric_surface(b.f, b.u, b.v, b.mode, q.params,
                                                scaled(b.samples, k));
        } else if constexpr (std::is_same_v<T, BSplineSurfaceBody>) {
          return tessellate::bspline_surface(b.control, b.mode, q.params, scaled(b.samples, k));
        } else if constexpr (std::is_same_v<T, IsoShellBody>) {
          return implicit::iso_shell(b.f, b.level, b.delta, grid_for(q, b.box), ctx.threads);
        } else if constexpr (std::is_same_v<T, RegionBody>) {
          implicit::MarchingOptions mo;
          mo.threads = ctx.threads;
          return implicit::marching_cubes(
              implicit::CsgNode::leaf(expr::to_signed_field(b.predicate)), grid_for(q, b.box), mo);
        } else if constexpr (std::is_same_v<T, WireframeBody>) {
          return wireframe_mesh(b, q, ctx);
        } else {
          ChildField tree = csg_tree(b, ctx);
          const Aabb box = b.box ? *b.box : inflate_cells(tree.box, q.grid.resolution);
          implicit::MarchingOptions mo;
          mo.threads = ctx.threads;
          return implicit::marching_cubes(tree.node, grid_for(q, box), mo);
        }
      },
      obj.body);
}

std::string describe(std::size_t i, const SceneObject& obj) {
  return "objects[" + std::to_string(i) + "] (" + obj.label + ")";
}

std::string encode(const TriangleMesh& m, ExportFormat f, const std::string& name) {
  switch (f) {
    case ExportFormat::kStlBinary:
      return meshio::encode_stl(m, meshio::StlFormat::kBinary);
    case ExportFormat::kStlAscii:
      return meshio::encode_stl(m, meshio::StlFormat::kAscii, name);
    case ExportFormat::kPly:
      return meshio::encode_ply(m);
    case ExportFormat::kWrl:
      return meshio::encode_wrl(m);
  }
  throw GeometryError("unknown export format");
}

}  // namespace

TriangleMesh build_object(const SceneObject& obj, const BuildOptions& options) {
  Context ctx{options, std::max(1, options.threads)};
  TriangleMesh mesh = generate(obj, ctx);
  apply_steps(obj, mesh);
  if (options.repair_orientation) mesh = orient_consistently(mesh);
  return mesh;
}

BuildResult build(const Scene& s, const BuildOptions& options) {
  if (!(options.quality_scale > 0) || !std::isfinite(options.quality_scale)) {
    throw SceneError("quality scale must be positive");
  }
  const std::size_t n = s.objects.size();
  const int threads = std::max(1, options.threads);
  BuildOptions inner = options;
  inner.threads = std::max(1, threads / static_cast<int>(std::max<std::size_t>(n, 1)));

  std::vector<TriangleMesh> meshes(n);
  std::vector<std::exception_ptr> errors(n);
  parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        meshes[i] = build_object(s.objects[i], inner);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw SceneError(describe(i, s.objects[i]) + ": " + e.what());
    }
  }

  BuildResult result;
  std::string failures;
  for (std::size_t i = 0; i < n; ++i) {
    ValidationReport r = validate(meshes[i]);
    const bool open_ok = options.allow_open || s.objects[i].allow_open;
    if (!r.watertight && !open_ok) {
      failures += "\n  " + describe(i, s.objects[i]) + " is not watertight: " +
                  std::to_string(r.boundary_edge_count) + " boundary edges, " +
                  std::to_string(r.nonmanifold_edge_count) + " non-manifold edges";
    }
    result.reports.push_back(std::move(r));
  }
  if (!failures.empty()) {
    throw ValidationError("build stopped before writing any file:" + failures);
  }

  const bool colored = std::all_of(s.objects.begin(), s.objects.end(),
                                   [](const SceneObject& o) { return o.color.has_value(); });
  MergeResult merged;
  if (colored) {
    std::vector<Rgb> colors;
    for (const SceneObject& o : s.objects) colors.push_back(*o.color);
    merged = merge(meshes, std::span<const Rgb>(colors));
  } else {
    merged = merge(meshes);
  }
  result.merged = std::move(merged.mesh);
  result.dropped_degenerate = merged.dropped_degenerate;
  result.per_object = std::move(meshes);

  if (options.write_exports && !s.exports.empty()) {
    std::vector<std::pair<std::filesystem::path, std::string>> files;
    for (const ExportTarget& t : s.exports) {
      const std::filesystem::path path =
          t.path.is_absolute() ? t.path : options.out_dir / t.path;
      files.emplace_back(path, encode(result.merged, t.format, s.name));
    }
    try {
      for (const auto& [path, bytes] : files) {
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        meshio::write_file(path, bytes);
        result.written_files.push_back(path);
      }
    } catch (const std::exception& e) {
      for (const auto& p : result.written_files) {
        std::error_code ec;
        std::filesystem::remove(p, ec);
      }
      throw IoError(std::string("export failed: ") + e.what());
    }
  }
  return result;
}

}  // namespace mathsculpt::scene
