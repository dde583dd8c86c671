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
#include <memory>

#include "mathsculpt/error.hpp"
#include "mathsculpt/implicit.hpp"

namespace mathsculpt::implicit {

CsgNode CsgNode::leaf(SignedField f) {
  CsgNode n;
  n.field = std::move(f);
  return n;
}

CsgNode CsgNode::union_of(std::vector<CsgNode> children) {
  CsgNode n;
  n.op = CsgOp::kUnion;
  n.children = std::move(children);
  return n;
}

CsgNode CsgNode::intersection_of(std::vector<CsgNode> children) {
  CsgNode n;
  n.op = CsgOp::kIntersection;
  n.children = std::move(children);
  return n;
}

CsgNode CsgNode::difference(CsgNode a, CsgNode b) {
  CsgNode n;
  n.op = CsgOp::kDifference;
  n.children.push_back(std::move(a));
  n.children.push_back(std::move(b));
  return n;
}

CsgNode CsgNode::complement(CsgNode a) {
  CsgNode n;
  n.op = CsgOp::kComplement;
  n.children.push_back(std::move(a));
  return n;
}

void check(const CsgNode& node) {
  switch (node.op) {
    case CsgOp::kLeaf:
      if (!node.children.empty() || !node.field) {
        throw GeometryError("CSG leaf needs a field and no children");
      }
      return;
    case CsgOp::kUnion:
    case CsgOp::kIntersection:
      if (node.children.empty()) throw GeometryError("CSG union/intersection has no children");
      break;
    case CsgOp::kDifference:
      if (node.children.size() != 2) throw GeometryError("CSG difference needs two children");
      break;
    case CsgOp::kComplement:
      if (node.children.size() != 1) throw GeometryError("CSG complement needs one child");
      break;
  }
  for (const CsgNode& c : node.children) check(c);
}

double csg_eval(const CsgNode& node, const Vec3& p) {
  switch (node.op) {
    case CsgOp::kLeaf:
      return node.field(p);
    case CsgOp::kUnion: {
      double v = csg_eval(node.children[0], p);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        v = std::min(v, csg_eval(node.children[i], p));
      }
      return v;
    }
    case CsgOp::kIntersection: {
      double v = csg_eval(node.children[0], p);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        v = std::max(v, csg_eval(node.children[i], p));
      }
      return v;
    }
    case CsgOp::kDifference:
      return std::max(csg_eval(node.children[0], p), -csg_eval(node.children[1], p));
    case CsgOp::kComplement:
      return -csg_eval(node.children[0], p);
  }
  return 1.0;
}

namespace {

bool all_sign_only(const CsgNode& node) {
  if (node.op == CsgOp::kLeaf) return node.field.continuity == Continuity::kSignOnly;
  return std::all_of(node.children.begin(), node.children.end(), all_sign_only);
}

}  // namespace

SignedField to_field(const CsgNode& node) {
  check(node);
  if (node.op == CsgOp::kLeaf) return node.field;
  auto shared = std::make_shared<const CsgNode>(node);
  return SignedField([shared](const Vec3& p) { return csg_eval(*shared, p); },
                     all_sign_only(node) ? Continuity::kSignOnly : Continuity::kContinuous,
                     FieldSource::kCsgNode);
}

void GridSpec::check() const {
  for (int n : resolution) {
    if (n < 2) throw GeometryError("grid resolution must be at least 2 on every axis");
  }
  if (box.empty() || !(box.min.x < box.max.x && box.min.y < box.max.y && box.min.z < box.max.z) ||
      !is_finite(box.min) || !is_finite(box.max)) {
    throw GeometryError("grid box is degenerate");
  }
  if (bisection_iterations < 0 || bisection_iterations > 60) {
    throw GeometryError("bisection_iterations must be in [0, 60]");
  }
}

SignedField sphere_field(const Vec3& center, double radius) {
  return SignedField([center, radius](const Vec3& p) { return distance(p, center) - radius; },
                     Continuity::kExactDistance, FieldSource::kPrimitive);
}

SignedField ellipsoid_field(const Vec3& center, const Vec3& radii) {
  const double scale = std::min({radii.x, radii.y, radii.z});
  return SignedField(
      [center, radii, scale](const Vec3& p) {
        const Vec3 d = p - center;
        const Vec3 q{d.x / radii.x, d.y / radii.y, d.z / radii.z};
        return (norm(q) - 1) * scale;
      },
      Continuity::kContinuous, FieldSource::kPrimitive);
}

SignedField cuboid_field(const Vec3& min_corner, const Vec3& max_corner) {
  const Vec3 c = (min_corner + max_corner) * 0.5;
  const Vec3 h = (max_corner - min_corner) * 0.5;
  return SignedField(
      [c, h](const Vec3& p) {
        const Vec3 d = p - c;
        const Vec3 q{std::abs(d.x) - h.x, std::abs(d.y) - h.y, std::abs(d.z) - h.z};
        const Vec3 outside{std::max(q.x, 0.0), std::max(q.y, 0.0), std::max(q.z, 0.0)};
        return norm(outside) + std::min(std::max({q.x, q.y, q.z}), 0.0);
      },
      Continuity::kExactDistance, FieldSource::kPrimitive);
}

SignedField cylinder_field(const Vec3& p1, const Vec3& p2, double radius) {
  const Vec3 axis = p2 - p1;
  const double len = norm(axis);
  if (!(len > 0)) throw GeometryError("cylinder endpoints coincide");
  const Vec3 t = axis / len;
  return SignedField(
      [p1, t, len, radius](const Vec3& p) {
        const Vec3 d = p - p1;
        const double h = dot(d, t);
        const double r = norm(d - t * h);
        return std::max({r - radius, -h, h - len});
      },
      Continuity::kContinuous, FieldSource::kPrimitive);
}

SignedField cone_field(const Vec3& base_center, const Vec3& apex, double radius) {
  const Vec3 axis = apex - base_center;
  const double len = norm(axis);
  if (!(len > 0)) throw GeometryError("cone base and apex coincide");
  const Vec3 t = axis / len;
  // Distance to the slanted side along its normal in the (r, h) half-plane.
  const double slant = std::hypot(radius, len);
  return SignedField(
      [base_center, t, len, radius, slant](const Vec3& p) {
        const Vec3 d = p - base_center;
        const double h = dot(d, t);
        const double r = norm(d - t * h);
        const double side = (r * len + h * radius - radius * len) / slant;
        return std::max({side, -h, h - len});
      },
      Continuity::kContinuous, FieldSource::kPrimitive);
}

SignedField polyhedron_field(const tessellate::PolygonMesh& solid) {
  struct Plane {
    Vec3 n;
    double d;
  };
  std::vector<Plane> planes;
  for (const auto& f : solid.faces) {
    if (f.size() < 3) throw GeometryError("polyhedron face has fewer than 3 vertices");
    const Vec3& a = solid.vertices[f[0]];
    Vec3 n;
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      n += cross(solid.vertices[f[i]] - a, solid.vertices[f[i + 1]] - a);
    }
    n = normalized(n);
    planes.push_back({n, dot(n, a)});
  }
  return SignedField(
      [planes = std::move(planes)](const Vec3& p) {
        double v = -std::numeric_limits<double>::infinity();
        for (const Plane& pl : planes) v = std::max(v, dot(pl.n, p) - pl.d);
        return v;
      },
      Continuity::kContinuous, FieldSource::kPrimitive);
}

SignedField primitive_field(const tessellate::PrimitiveSpec& spec) {
  tessellate::check(spec);
  return std::visit(
      [](const auto& s) -> SignedField {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, tessellate::SphereSpec>) {
          return sphere_field(s.center, s.radius);
        } else if constexpr (std::is_same_v<T, tessellate::EllipsoidSpec>) {
          return ellipsoid_field(s.center, s.radii);
        } else if constexpr (std::is_same_v<T, tessellate::CylinderSpec>) {
          return cylinder_field(s.p1, s.p2, s.radius);
        } else if constexpr (std::is_same_v<T, tessellate::ConeSpec>) {
          return cone_field(s.base_center, s.apex, s.radius);
        } else if constexpr (std::is_same_v<T, tessellate::CuboidSpec>) {
          return cuboid_field(s.min_corner, s.max_corner);
        } else {
          return polyhedron_field(tessellate::polyhedron_polygons(s.name, s.edge_length));
        }
      },
      spec);
}

Aabb primitive_bounds(const tessellate::PrimitiveSpec& spec) {
  tessellate::check(spec);
  return std::visit(
      [](const auto& s) -> Aabb {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, tessellate::SphereSpec>) {
          const Vec3 r{s.radius, s.radius, s.radius};
          return {s.center - r, s.center + r};
        } else if constexpr (std::is_same_v<T, tessellate::EllipsoidSpec>) {
          return {s.center - s.radii, s.center + s.radii};
        } else if constexpr (std::is_same_v<T, tessellate::CylinderSpec>) {
          const Vec3 r{s.radius, s.radius, s.radius};
          Aabb b;
          b.include(s.p1 - r);
          b.include(s.p1 + r);
          b.include(s.p2 - r);
          b.include(s.p2 + r);
          return b;
        } else if constexpr (std::is_same_v<T, tessellate::ConeSpec>) {
          const Vec3 r{s.radius, s.radius, s.radius};
          Aabb b;
          b.include(s.base_center - r);
          b.include(s.base_center + r);
          b.include(s.apex);
          return b;
        } else if constexpr (std::is_same_v<T, tessellate::CuboidSpec>) {
          return {s.min_corner, s.max_corner};
        } else {
          Aabb b;
          for (const Vec3& v : tessellate::polyhedron_polygons(s.name, s.edge_length).vertices) {
            b.include(v);
          }
          return b;
        }
      },
      spec);
}

SignedField transformed_field(const SignedField& f, const AffineTransform& t) {
  const AffineTransform inv = t.inverse();
  const Continuity c = f.continuity == Continuity::kExactDistance && !t.is_rigid(1e-9)
                           ? Continuity::kContinuous
                           : f.continuity;
  return SignedField([fn = f.fn, inv](const Vec3& p) { return fn(inv(p)); }, c, f.source);
}

}  // namespace mathsculpt::implicit
