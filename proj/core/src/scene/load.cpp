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

#include <charconv>
#include <cmath>
#include <numbers>
#include <set>

#include "json.hpp"
#include "mathsculpt/error.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/scene.hpp"

namespace mathsculpt::scene {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SceneError(where + ": " + what);
}

std::string type_name(const json& j) { return j.type_name(); }

double constant_expression(const std::string& where, const std::string& text) {
  try {
    const expr::ExprAst ast = expr::parse_expression(text);
    expr::require_variables(ast, {});
    return expr::eval_scalar(ast, {});
  } catch (const ParseError& e) {
    fail(where, std::string(e.what()) + " (offset " + std::to_string(e.position()) + ")");
  } catch (const EvalError& e) {
    fail(where, e.what());
  }
}

double number_of(const std::string& where, const json& j) {
  double v;
  if (j.is_number()) {
    v = j.get<double>();
  } else if (j.is_string()) {
    v = constant_expression(where, j.get<std::string>());
  } else {
    fail(where, "expected a number, got " + type_name(j));
  }
  if (!std::isfinite(v)) fail(where, "number is not finite");
  return v;
}

int count_of(const std::string& where, const json& j) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    fail(where, "expected an integer, got " + type_name(j));
  }
  const auto v = j.get<long long>();
  if (v < 0 || v > 1'000'000) fail(where, "integer out of range");
  return static_cast<int>(v);
}

Vec3 vec3_of(const std::string& where, const json& j) {
  if (!j.is_array() || j.size() != 3) fail(where, "expected an array of 3 numbers");
  return {number_of(where + "[0]", j[0]), number_of(where + "[1]", j[1]),
          number_of(where + "[2]", j[2])};
}

tessellate::Interval interval_of(const std::string& where, const json& j) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [lo, hi]");
  const tessellate::Interval i{number_of(where + "[0]", j[0]), number_of(where + "[1]", j[1])};
  if (!(i.lo < i.hi)) fail(where, "interval must have lo < hi");
  return i;
}

expr::ExprAst expression_of(const std::string& where, const json& j,
                            const std::vector<std::string>& vars) {
  if (!j.is_string()) fail(where, "expected an expression string, got " + type_name(j));
  const std::string text = j.get<std::string>();
  try {
    expr::ExprAst ast = expr::parse_expression(text);
    expr::require_variables(ast, vars);
    return ast;
  } catch (const ParseError& e) {
    fail(where, std::string(e.what()) + " (offset " + std::to_string(e.position()) + " in \"" +
                    text + "\")");
  }
}

/// Object reader that records the keys it consumed, so leftovers can be
/// reported as unknown.
class Fields {
 public:
  Fields(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j.is_object()) fail(where_, "expected an object, got " + type_name(j));
  }

  const std::string& where() const { return where_; }
  std::string at(const std::string& key) const { return where_ + "." + key; }

  bool has(const std::string& key) {
    if (!j_.contains(key)) return false;
    used_.insert(key);
    return true;
  }

  const json& get(const std::string& key) {
    if (!has(key)) fail(where_, "missing required field \"" + key + "\"");
    return j_.at(key);
  }

  double number(const std::string& key) { return number_of(at(key), get(key)); }
  double number(const std::string& key, double fallback) {
    return has(key) ? number_of(at(key), j_.at(key)) : fallback;
  }
  double positive(const std::string& key) {
    const double v = number(key);
    if (!(v > 0)) fail(at(key), "must be positive");
    return v;
  }
  double positive(const std::string& key, double fallback) {
    const double v = number(key, fallback);
    if (!(v > 0)) fail(at(key), "must be positive");
    return v;
  }
  Vec3 vec3(const std::string& key) { return vec3_of(at(key), get(key)); }
  Vec3 vec3(const std::string& key, Vec3 fallback) {
    return has(key) ? vec3_of(at(key), j_.at(key)) : fallback;
  }
  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    if (!j_.at(key).is_boolean()) fail(at(key), "expected true or false");
    return j_.at(key).get<bool>();
  }
  std::string text(const std::string& key) {
    const json& v = get(key);
    if (!v.is_string()) fail(at(key), "expected a string, got " + type_name(v));
    return v.get<std::string>();
  }
  std::string text(const std::string& key, const std::string& fallback) {
    return has(key) ? text(key) : fallback;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) fail(where_, "unknown field \"" + key + "\"");
    }
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> used_;
};

std::array<int, 3> resolution_of(const std::string& where, const json& j) {
  std::array<int, 3> r;
  if (j.is_array()) {
    if (j.size() != 3) fail(where, "expected an integer or [nx, ny, nz]");
    for (int k = 0; k < 3; ++k) r[k] = count_of(where, j[k]);
  } else {
    r.fill(count_of(where, j));
  }
  for (int n : r) {
    if (n < 2) fail(where, "grid resolution must be at least 2");
  }
  return r;
}

Quality quality_of(const std::string& where, const json& j, Quality q) {
  Fields f(j, where);
  if (f.has("max_cell_area")) {
    if (j.at("max_cell_area").is_null()) {
      q.params.max_cell_area.reset();
    } else {
      q.params.max_cell_area = f.positive("max_cell_area");
    }
  }
  if (f.has("points_along")) q.params.points_along = count_of(f.at("points_along"), j.at("points_along"));
  if (f.has("points_around")) {
    q.params.points_around = count_of(f.at("points_around"), j.at("points_around"));
  }
  if (q.params.points_along < 2) fail(f.at("points_along"), "must be at least 2");
  if (q.params.points_around < 3) fail(f.at("points_around"), "must be at least 3");
  if (f.has("grid")) {
    Fields g(j.at("grid"), f.at("grid"));
    if (g.has("resolution")) {
      q.grid.resolution = resolution_of(g.at("resolution"), j.at("grid").at("resolution"));
    }
    if (g.has("bisection_iterations")) {
      q.grid.bisection_iterations =
          count_of(g.at("bisection_iterations"), j.at("grid").at("bisection_iterations"));
      if (q.grid.bisection_iterations > 60) fail(g.at("bisection_iterations"), "at most 60");
    }
    g.finish();
  }
  f.finish();
  return q;
}

Aabb box_of(const std::string& where, const json& j) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [[xmin, ymin, zmin], [xmax, ymax, zmax]]");
  const Vec3 lo = vec3_of(where + "[0]", j[0]);
  const Vec3 hi = vec3_of(where + "[1]", j[1]);
  if (!(lo.x < hi.x && lo.y < hi.y && lo.z < hi.z)) fail(where, "box min must be below max");
  return {lo, hi};
}

/// Region and iso-shell boxes may also be given per axis as x/y/z intervals.
Aabb domain_box(Fields& f) {
  if (f.has("box")) return box_of(f.at("box"), f.get("box"));
  const auto x = interval_of(f.at("x"), f.get("x"));
  const auto y = interval_of(f.at("y"), f.get("y"));
  const auto z = interval_of(f.at("z"), f.get("z"));
  return {{x.lo, y.lo, z.lo}, {x.hi, y.hi, z.hi}};
}

std::array<expr::ExprAst, 3> expr3(Fields& f, const std::string& key,
                                   const std::vector<std::string>& vars) {
  const json& j = f.get(key);
  if (!j.is_array() || j.size() != 3) fail(f.at(key), "expected 3 expression strings");
  std::array<expr::ExprAst, 3> out;
  for (int k = 0; k < 3; ++k) {
    out[k] = expression_of(f.at(key) + "[" + std::to_string(k) + "]", j[k], vars);
  }
  return out;
}

tessellate::CapStyle caps_of(Fields& f) {
  const std::string caps = f.text("caps", "flat");
  if (caps == "flat") return tessellate::CapStyle::kFlat;
  if (caps == "none") return tessellate::CapStyle::kNone;
  fail(f.at("caps"), "expected \"flat\" or \"none\"");
}

tessellate::SurfaceMode mode_of(Fields& f) {
  const json& m = f.get("mode");
  Fields mf(m, f.at("mode"));
  const std::string type = mf.text("type");
  tessellate::SurfaceMode out;
  if (type == "closed") {
    tessellate::ClosedMode c;
    c.periodic_u = mf.boolean("periodic_u", true);
    c.periodic_v = mf.boolean("periodic_v", true);
    out = c;
  } else if (type == "shell") {
    tessellate::ShellMode s;
    s.thickness = mf.positive("thickness");
    s.periodic_u = mf.boolean("periodic_u", false);
    s.periodic_v = mf.boolean("periodic_v", false);
    out = s;
  } else {
    fail(mf.at("type"), "expected \"closed\" or \"shell\"");
  }
  mf.finish();
  return out;
}

tessellate::SurfaceSamples samples_of(Fields& f) {
  tessellate::SurfaceSamples s;
  if (!f.has("samples")) return s;
  const json& j = f.get("samples");
  if (!j.is_array() || j.size() != 2) fail(f.at("samples"), "expected [nu, nv]");
  s.u = count_of(f.at("samples"), j[0]);
  s.v = count_of(f.at("samples"), j[1]);
  if (s.u < 2 || s.v < 2) fail(f.at("samples"), "sample counts must be at least 2");
  return s;
}

std::vector<Vec3> points_of(const std::string& where, const json& j) {
  if (!j.is_array()) fail(where, "expected an array of points");
  std::vector<Vec3> pts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    pts.push_back(vec3_of(where + "[" + std::to_string(i) + "]", j[i]));
  }
  return pts;
}

TransformStep transform_of(const std::string& where, const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "center_at_origin") return CenterAtOrigin{};
    fail(where, "unknown transform \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object() || j.size() != 1) {
    fail(where, "expected a single-key object such as {\"translate\": [x, y, z]}");
  }
  const std::string op = j.begin().key();
  const json& arg = j.begin().value();
  const std::string at = where + "." + op;
  if (op == "translate") return Translate{vec3_of(at, arg)};
  if (op == "center_at_origin") return CenterAtOrigin{};
  if (op == "rotate") {
    Fields f(arg, at);
    Rotate r;
    const json& a = f.get("angle");
    if (a.is_string()) {
      try {
        r.angle = parse_angle(a.get<std::string>());
      } catch (const SceneError& e) {
        fail(f.at("angle"), e.what());
      }
    } else {
      r.angle = number_of(f.at("angle"), a);
    }
    r.axis = f.vec3("axis", {0, 0, 1});
    if (r.axis == Vec3{}) fail(f.at("axis"), "axis must be nonzero");
    r.point = f.vec3("point", {});
    f.finish();
    return r;
  }
  if (op == "scale") {
    Scale s;
    if (arg.is_object()) {
      Fields f(arg, at);
      s.factors = f.vec3("factors");
      s.anchor = f.vec3("anchor", {});
      f.finish();
    } else if (arg.is_array()) {
      s.factors = vec3_of(at, arg);
    } else {
      const double k = number_of(at, arg);
      s.factors = {k, k, k};
    }
    if (s.factors.x == 0 || s.factors.y == 0 || s.factors.z == 0) {
      fail(at, "scale factors must be nonzero");
    }
    return s;
  }
  if (op == "resize") {
    Resize r;
    if (arg.is_array()) {
      const Vec3 t = vec3_of(at, arg);
      if (!(t.x > 0 && t.y > 0 && t.z > 0)) fail(at, "resize targets must be positive");
      r.target = t;
    } else {
      const double t = number_of(at, arg);
      if (!(t > 0)) fail(at, "resize target must be positive");
      r.target = t;
    }
    return r;
  }
  fail(where, "unknown transform \"" + op + "\"");
}

const std::set<std::string> kSolidKinds = {
    "sphere", "cylinder", "cone", "cuboid", "polyhedron", "parametric_curve", "bspline_curve",
    "graph_surface", "parametric_surface", "bspline_surface", "iso_shell", "region", "csg"};

SceneObject object_of(const std::string& where, const json& j, const Quality& defaults,
                      std::size_t index, bool nested);

Body body_of(Fields& f, const std::string& kind, const Quality& q) {
  using namespace tessellate;
  if (kind == "sphere") {
    const Vec3 c = f.vec3("center", {});
    if (f.has("radii")) {
      const Vec3 r = f.vec3("radii");
      if (!(r.x > 0 && r.y > 0 && r.z > 0)) fail(f.at("radii"), "radii must be positive");
      return PrimitiveBody{EllipsoidSpec{c, r}};
    }
    return PrimitiveBody{SphereSpec{c, f.positive("radius", 1)}};
  }
  if (kind == "cylinder") {
    CylinderSpec s{f.vec3("p1"), f.vec3("p2"), f.positive("radius", 1)};
    if (s.p1 == s.p2) fail(f.where(), "p1 and p2 coincide");
    return PrimitiveBody{s};
  }
  if (kind == "cone") {
    ConeSpec s{f.vec3("base_center"), f.vec3("apex"), f.positive("radius", 1)};
    if (s.base_center == s.apex) fail(f.where(), "base_center and apex coincide");
    return PrimitiveBody{s};
  }
  if (kind == "cuboid") {
    CuboidSpec s{f.vec3("min_corner"), f.vec3("max_corner")};
    if (!(s.min_corner.x < s.max_corner.x && s.min_corner.y < s.max_corner.y &&
          s.min_corner.z < s.max_corner.z)) {
      fail(f.where(), "min_corner must be below max_corner on every axis");
    }
    return PrimitiveBody{s};
  }
  if (kind == "polyhedron") {
    const std::string name = f.text("name");
    const auto p = polyhedron_from_name(name);
    if (!p) fail(f.at("name"), "unknown polyhedron \"" + name + "\"");
    return PrimitiveBody{PolyhedronSpec{*p, f.positive("edge_length", 1)}};
  }
  if (kind == "parametric_curve") {
    CurveBody b;
    b.f = expr3(f, "f", {"t"});
    b.t = interval_of(f.at("t"), f.get("t"));
    b.tube.radius = f.positive("radius", 0.1);
    b.tube.closed = f.boolean("closed", false);
    b.tube.caps = caps_of(f);
    return b;
  }
  if (kind == "bspline_curve") {
    BSplineCurveBody b;
    b.control = points_of(f.at("control"), f.get("control"));
    b.degree = f.has("degree") ? count_of(f.at("degree"), f.get("degree")) : 3;
    if (b.degree < 1) fail(f.at("degree"), "degree must be at least 1");
    if (b.control.size() < static_cast<std::size_t>(b.degree) + 1) {
      fail(f.at("control"), "needs at least degree + 1 control points");
    }
    b.tube.radius = f.positive("radius", 0.1);
    b.tube.closed = f.boolean("closed", false);
    b.tube.caps = caps_of(f);
    return b;
  }
  if (kind == "graph_surface") {
    GraphSurfaceBody b;
    b.f = expression_of(f.at("f"), f.get("f"), {"x", "y"});
    if (f.has("disk")) {
      Fields d(f.get("disk"), f.at("disk"));
      DiskDomain disk;
      if (d.has("center")) {
        const json& cj = f.get("disk").at("center");
        if (!cj.is_array() || cj.size() != 2) fail(d.at("center"), "expected [cx, cy]");
        disk.cx = number_of(d.at("center"), cj[0]);
        disk.cy = number_of(d.at("center"), cj[1]);
      }
      disk.radius = d.positive("radius");
      d.finish();
      b.domain = disk;
    } else {
      b.domain = RectDomain{interval_of(f.at("x"), f.get("x")), interval_of(f.at("y"), f.get("y"))};
    }
    b.thickness = f.positive("thickness", 0.2);
    return b;
  }
  if (kind == "parametric_surface") {
    ParametricSurfaceBody b;
    b.f = expr3(f, "f", {"u", "v"});
    b.u = interval_of(f.at("u"), f.get("u"));
    b.v = interval_of(f.at("v"), f.get("v"));
    b.mode = mode_of(f);
    b.samples = samples_of(f);
    return b;
  }
  if (kind == "bspline_surface") {
    BSplineSurfaceBody b;
    const json& rows = f.get("control");
    if (!rows.is_array()) fail(f.at("control"), "expected a grid of points");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      b.control.push_back(points_of(f.at("control") + "[" + std::to_string(i) + "]", rows[i]));
      if (b.control.back().size() != b.control.front().size()) {
        fail(f.at("control"), "rows differ in length");
      }
    }
    if (b.control.size() < 4 || b.control.front().size() < 4) {
      fail(f.at("control"), "needs at least a 4x4 grid");
    }
    b.mode = mode_of(f);
    b.samples = samples_of(f);
    return b;
  }
  if (kind == "iso_shell") {
    IsoShellBody b;
    b.f = expression_of(f.at("f"), f.get("f"), {"x", "y", "z"});
    b.level = f.number("level", 0);
    b.delta = f.positive("delta", 0.1);
    b.box = domain_box(f);
    return b;
  }
  if (kind == "region") {
    RegionBody b;
    b.predicate = expression_of(f.at("predicate"), f.get("predicate"), {"x", "y", "z"});
    try {
      (void)expr::to_signed_field(b.predicate);
    } catch (const ParseError& e) {
      fail(f.at("predicate"), std::string(e.what()) + " (offset " + std::to_string(e.position()) + ")");
    }
    b.box = domain_box(f);
    return b;
  }
  if (kind == "wireframe_of") {
    WireframeBody b;
    const SceneObject src = object_of(f.at("source"), f.get("source"), q, 0, true);
    if (src.kind == "wireframe_of") fail(f.at("source"), "nested wireframe");
    b.source = std::make_shared<const SceneObject>(src);
    b.thickness = f.positive("thickness", 0.06);
    return b;
  }
  if (kind == "csg") {
    CsgBody b;
    const std::string op = f.text("op");
    if (op == "union") {
      b.op = implicit::BooleanOp::kUnion;
    } else if (op == "intersection") {
      b.op = implicit::BooleanOp::kIntersection;
    } else if (op == "difference") {
      b.op = implicit::BooleanOp::kDifference;
    } else {
      fail(f.at("op"), "expected union, intersection or difference");
    }
    const json& children = f.get("children");
    if (!children.is_array() || children.size() < 2) {
      fail(f.at("children"), "expected at least two child objects");
    }
    if (b.op == implicit::BooleanOp::kDifference && children.size() != 2) {
      fail(f.at("children"), "difference takes exactly two children");
    }
    for (std::size_t i = 0; i < children.size(); ++i) {
      const std::string at = f.at("children") + "[" + std::to_string(i) + "]";
      SceneObject child = object_of(at, children[i], q, i, true);
      if (!kSolidKinds.count(child.kind)) fail(at, "\"" + child.kind + "\" is not a solid");
      b.children.push_back(std::move(child));
    }
    if (f.has("box")) b.box = box_of(f.at("box"), f.get("box"));
    return b;
  }
  fail(f.at("kind"), "unknown kind \"" + kind + "\"");
}

SceneObject object_of(const std::string& where, const json& j, const Quality& defaults,
                      std::size_t index, bool nested) {
  Fields f(j, where);
  SceneObject obj;
  obj.kind = f.text("kind");
  obj.label = f.text("name", obj.kind + " #" + std::to_string(index));
  obj.quality = f.has("quality") ? quality_of(f.at("quality"), j.at("quality"), defaults) : defaults;
  if (f.has("resolution")) {
    if (obj.kind != "region" && obj.kind != "iso_shell" && obj.kind != "csg") {
      fail(f.at("resolution"), "only region, iso_shell and csg objects take a resolution");
    }
    obj.quality.grid.resolution = resolution_of(f.at("resolution"), j.at("resolution"));
  }
  obj.body = body_of(f, obj.kind, obj.quality);
  if (f.has("color")) {
    const json& c = j.at("color");
    if (!c.is_string()) fail(f.at("color"), "expected a color name or #RRGGBB");
    obj.color = parse_color(c.get<std::string>());
    if (!obj.color) fail(f.at("color"), "unknown color \"" + c.get<std::string>() + "\"");
  }
  if (f.has("transforms")) {
    const json& t = j.at("transforms");
    if (!t.is_array()) fail(f.at("transforms"), "expected a list of transforms");
    for (std::size_t i = 0; i < t.size(); ++i) {
      obj.transforms.push_back(
          transform_of(f.at("transforms") + "[" + std::to_string(i) + "]", t[i]));
    }
  }
  obj.allow_open = f.boolean("allow_open", false);
  if (nested && obj.color) fail(f.at("color"), "nested objects take the color of their parent");
  f.finish();
  return obj;
}

ExportFormat format_of(const std::string& where, const std::string& name) {
  if (name == "stl_binary" || name == "stl") return ExportFormat::kStlBinary;
  if (name == "stl_ascii") return ExportFormat::kStlAscii;
  if (name == "ply") return ExportFormat::kPly;
  if (name == "wrl") return ExportFormat::kWrl;
  fail(where, "unknown export format \"" + name + "\"");
}

}  // namespace

std::optional<Rgb> parse_color(std::string_view text) {
  static const std::pair<std::string_view, Rgb> kNamed[] = {
      {"white", {1, 1, 1}},  {"black", {0, 0, 0}}, {"orange", {1, 0.5, 0}},
      {"red", {1, 0, 0}},    {"green", {0, 1, 0}}, {"blue", {0, 0, 1}},
      {"gray", {0.5, 0.5, 0.5}},
  };
  for (const auto& [name, rgb] : kNamed) {
    if (text == name) return rgb;
  }
  if (text.size() == 7 && text[0] == '#') {
    int channels[3];
    for (int k = 0; k < 3; ++k) {
      const char* first = text.data() + 1 + 2 * k;
      const auto res = std::from_chars(first, first + 2, channels[k], 16);
      if (res.ec != std::errc() || res.ptr != first + 2) return std::nullopt;
    }
    return Rgb{channels[0] / 255.0, channels[1] / 255.0, channels[2] / 255.0};
  }
  return std::nullopt;
}

double parse_angle(std::string_view text) {
  const std::string s(text);
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "deg") == 0) {
    return constant_expression("angle", s.substr(0, s.size() - 3)) * std::numbers::pi / 180;
  }
  return constant_expression("angle", s);
}

std::string_view format_name(ExportFormat f) {
  switch (f) {
    case ExportFormat::kStlBinary:
      return "stl_binary";
    case ExportFormat::kStlAscii:
      return "stl_ascii";
    case ExportFormat::kPly:
      return "ply";
    case ExportFormat::kWrl:
      return "wrl";
  }
  return "?";
}

Scene load_scene(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw SceneError("scene is not valid JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  Fields f(doc, "scene");
  Scene s;
  s.name = f.text("name", "scene");
  s.units = f.text("units", "mm");
  if (s.units != "mm") fail(f.at("units"), "only \"mm\" is supported");
  if (f.has("quality")) s.quality = quality_of(f.at("quality"), doc.at("quality"), s.quality);
  const json& objects = f.get("objects");
  if (!objects.is_array()) fail(f.at("objects"), "expected a list");
  if (objects.empty()) fail(f.at("objects"), "at least one object is required");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    std::string where = "objects[" + std::to_string(i) + "]";
    if (objects[i].is_object() && objects[i].contains("name") && objects[i]["name"].is_string()) {
      where += " (" + objects[i]["name"].get<std::string>() + ")";
    }
    s.objects.push_back(object_of(where, objects[i], s.quality, i, false));
  }
  if (f.has("exports")) {
    const json& ex = doc.at("exports");
    if (!ex.is_array()) fail(f.at("exports"), "expected a list");
    std::set<std::filesystem::path> seen;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      const std::string at = "exports[" + std::to_string(i) + "]";
      Fields ef(ex[i], at);
      ExportTarget t;
      t.format = format_of(ef.at("format"), ef.text("format"));
      t.path = ef.text("path");
      if (t.path.empty()) fail(ef.at("path"), "path is empty");
      ef.finish();
      if (!seen.insert(t.path.lexically_normal()).second) {
        fail(ef.at("path"), "duplicate export path \"" + t.path.string() + "\"");
      }
      if (t.format == ExportFormat::kPly || t.format == ExportFormat::kWrl) {
        for (std::size_t k = 0; k < s.objects.size(); ++k) {
          if (!s.objects[k].color) {
            fail(at, std::string(format_name(t.format)) + " export needs a color on every object (objects[" +
                         std::to_string(k) + "] has none)");
          }
        }
      }
      s.exports.push_back(std::move(t));
    }
  }
  f.finish();
  return s;
}

Scene load_scene_file(const std::filesystem::path& path) {
  return load_scene(meshio::read_file(path));
}

}  // namespace mathsculpt::scene
