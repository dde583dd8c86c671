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

// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mathsculpt/error.hpp"
#include "mathsculpt/expr.hpp"
#include "mathsculpt/geom.hpp"
#include "mathsculpt/implicit.hpp"
#include "mathsculpt/mesh.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/scene.hpp"
#include "mathsculpt/tessellate.hpp"
#include "test_support.hpp"

using namespace mathsculpt;
namespace ts = mathsculpt::tessellate;
namespace im = mathsculpt::implicit;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(10);
    s << what << ": got " << got << ", want " << want << " +- " << tol;
    expect(std::abs(got - want) <= tol, s.str());
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

int worker_threads() { return static_cast<int>(std::max(2u, std::thread::hardware_concurrency())); }

im::CsgNode region(const char* predicate) {
  return im::CsgNode::leaf(expr::to_signed_field(expr::parse_expression(predicate)));
}

im::GridSpec grid(const Aabb& box, int n) {
  im::GridSpec g;
  g.box = box;
  g.resolution = {n, n, n};
  return g;
}

bool closed(const TriangleMesh& m) {
  const auto r = validate(m);
  return r.watertight && r.orientation_consistent;
}

std::size_t distinct_colors(const std::vector<Vec3>& colors) {
  std::set<std::tuple<double, double, double>> s;
  for (const Vec3& c : colors) s.insert({c.x, c.y, c.z});
  return s.size();
}

// 1. Snowman scene end to end.
void snowman_pipeline(Check& c) {
  scene::Scene s = scene::load_scene_file(support::scene_file("snowman.json"));
  s.exports.push_back({scene::ExportFormat::kPly, "snowman.ply"});
  support::TempDir dir;
  scene::BuildOptions o;
  o.out_dir = dir.path();
  o.threads = worker_threads();
  const scene::BuildResult r = scene::build(s, o);
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    c.expect(r.reports[i].watertight && r.reports[i].orientation_consistent,
             s.objects[i].label + " not a closed oriented solid");
  }
  // One cell: the side of a square with the scene's cell budget.
  const double cell = std::sqrt(*s.quality.params.max_cell_area);
  const Aabb b = bounds(r.merged);
  c.near(b.min.x, -1, cell, "min x");
  c.near(b.max.x, 1, cell, "max x");
  c.near(b.min.y, -1, cell, "min y");
  c.near(b.max.y, 1, cell, "max y");
  c.near(b.min.z, -1, cell, "min z");
  c.near(b.max.z, 3.5, cell, "max z");

  const auto ply = support::parse_ply(meshio::read_file(dir / "snowman.ply"));
  std::vector<Vec3> ply_colors;
  for (const auto& v : ply.vertices) ply_colors.push_back({double(v.r), double(v.g), double(v.b)});
  c.expect(distinct_colors(ply_colors) == 3,
           "PLY has " + std::to_string(distinct_colors(ply_colors)) + " colors");
  const auto wrl = support::parse_wrl(meshio::read_file(dir / "snowmanHD.wrl"));
  c.expect(wrl.color_per_vertex && distinct_colors(wrl.colors) == 3,
           "WRL has " + std::to_string(distinct_colors(wrl.colors)) + " per-vertex colors");
  const auto stl = meshio::read_stl(dir / "snowman.stl");
  c.expect(stl.triangle_count() == r.merged.triangle_count(), "STL re-import triangle count");
  c.note(std::to_string(r.merged.triangle_count()) + " triangles, bounds [" + fmt(b.min.x, 4) +
         "," + fmt(b.max.x, 4) + "]x[" + fmt(b.min.y, 4) + "," + fmt(b.max.y, 4) + "]x[" +
         fmt(b.min.z, 4) + "," + fmt(b.max.z, 4) + "]");
}

// 2. Ellipsoid {2, 1, 1}.
void ellipsoid_bounds(Check& c) {
  ts::QualityParams q;
  q.max_cell_area = 0.2;
  const double coarse_x = bounds(ts::primitive(ts::EllipsoidSpec{{}, {2, 1, 1}}, q)).extent().x;
  c.expect(coarse_x >= 3.76 && coarse_x <= 4.0, "coarse x extent " + fmt(coarse_x, 8));
  q.max_cell_area = 0.001;
  const TriangleMesh fine = ts::primitive(ts::EllipsoidSpec{{}, {2, 1, 1}}, q);
  const Vec3 e = bounds(fine).extent();
  c.expect(e.y >= 1.96 && e.y <= 2.0, "fine y extent " + fmt(e.y, 8));
  c.expect(e.z >= 1.96 && e.z <= 2.0, "fine z extent " + fmt(e.z, 8));
  const Vec3 g = centroid(fine).point;
  for (int a = 0; a < 3; ++a) c.expect(std::abs(g[a]) <= 1e-9, "centroid component " + fmt(g[a]));
  c.note("x extent at 0.2: " + fmt(coarse_x, 6) + "; fine y/z: " + fmt(e.y, 6) + "/" +
         fmt(e.z, 6));
}

// 3. Volumes against closed forms.
void volume_oracles(Check& c) {
  ts::QualityParams q;
  q.max_cell_area = 5e-4;
  const double ball = signed_volume(ts::primitive(ts::SphereSpec{}, q));
  c.near(ball, 4 * kPi / 3, 0.005 * 4 * kPi / 3, "icosphere volume");
  const TriangleMesh torus = ts::parametric_surface(
      [](double u, double v) {
        return Vec3{(3 + std::cos(v)) * std::cos(u), (3 + std::cos(v)) * std::sin(u), std::sin(v)};
      },
      {0, 2 * kPi}, {0, 2 * kPi}, ts::ClosedMode{true, true}, {}, {100, 30});
  const double pappus = 2 * kPi * kPi * 3;
  const double tv = signed_volume(torus);
  c.near(tv, pappus, 0.01 * pappus, "torus volume");
  const double dv =
      signed_volume(ts::primitive(ts::PolyhedronSpec{ts::PolyhedronName::kDodecahedron, 1}));
  c.near(dv, (15 + 7 * std::sqrt(5.0)) / 4, 1e-9, "dodecahedron volume");
  c.note("ball " + fmt(ball, 8) + ", torus " + fmt(tv, 8) + ", dodecahedron " + fmt(dv, 12));
}

// 4. Lens and union of two unit balls from predicates at 128^3.
void csg_lens_union(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const im::GridSpec g = grid({{-1, -1.5, -1.5}, {2, 1.5, 1.5}}, 128);
  im::MarchingOptions o;
  o.threads = worker_threads();
  const auto lens = im::marching_cubes(
      region("x^2 + y^2 + z^2 <= 1 && (x-1)^2 + y^2 + z^2 <= 1"), g, o);
  const auto both = im::marching_cubes(
      region("x^2 + y^2 + z^2 <= 1 || (x-1)^2 + y^2 + z^2 <= 1"), g, o);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double lv = signed_volume(lens);
  const double uv = signed_volume(both);
  c.near(lv, 5 * kPi / 12, 0.03 * 5 * kPi / 12, "lens volume");
  c.near(uv, 9 * kPi / 4, 0.02 * 9 * kPi / 4, "union volume");
  c.expect(closed(lens), "lens not watertight");
  c.expect(closed(both), "union not watertight");
  c.expect(seconds <= 30, "runtime " + fmt(seconds, 3) + " s");
  c.note("lens " + fmt(lv, 6) + " (" + fmt(5 * kPi / 12, 6) + "), union " + fmt(uv, 6) + " (" +
         fmt(9 * kPi / 4, 6) + "), " + fmt(seconds, 3) + " s");
}

// 5. Error decreases under refinement.
void convergence(Check& c) {
  const double ball = 4 * kPi / 3;
  std::string mc, sub;
  double previous = INFINITY;
  for (int n : {16, 32, 64}) {
    const double err = std::abs(
        signed_volume(im::marching_cubes(region("x^2 + y^2 + z^2 <= 1"),
                                         grid({{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}}, n))) -
        ball);
    c.expect(err < previous, "marching cubes error did not drop at " + std::to_string(n));
    mc += " " + fmt(err, 3);
    previous = err;
  }
  previous = INFINITY;
  for (int depth = 1; depth <= 4; ++depth) {
    const double err = std::abs(signed_volume(ts::icosphere(depth)) - ball);
    c.expect(err < previous, "subdivision error did not drop at depth " + std::to_string(depth));
    sub += " " + fmt(err, 3);
    previous = err;
  }
  c.note("MC errors" + mc + "; subdivision errors" + sub);
}

// 6. Euler characteristics and the dodecahedron wireframe.
void topology(Check& c) {
  ts::QualityParams q;
  q.points_along = 60;
  q.points_around = 24;
  const auto exprs = [](const char* a, const char* b, const char* d) {
    return std::array<expr::ExprAst, 3>{expr::parse_expression(a), expr::parse_expression(b),
                                        expr::parse_expression(d)};
  };
  std::vector<std::pair<std::string, TriangleMesh>> genus0{
      {"sphere", ts::primitive(ts::SphereSpec{}, q)},
      {"ellipsoid", ts::primitive(ts::EllipsoidSpec{{}, {2, 1, 0.5}}, q)},
      {"cylinder", ts::primitive(ts::CylinderSpec{}, q)},
      {"cone", ts::primitive(ts::ConeSpec{}, q)},
      {"cuboid", ts::primitive(ts::CuboidSpec{}, q)},
      {"capped tube", ts::tube_sweep(exprs("cos(t)", "sin(t)", "t/3"), {0, 6},
                                     {0.2, false, ts::CapStyle::kFlat}, q)},
      {"graph on rectangle",
       ts::graph_surface(expr::parse_expression("sin(x + y^2)"), ts::RectDomain{{-2, 2}, {-2, 2}},
                         0.2, q)},
      {"graph on disk",
       ts::graph_surface(expr::parse_expression("x*y"), ts::DiskDomain{0, 0, 1}, 0.2, q)},
      {"parametric sphere",
       ts::parametric_surface(
           [](double u, double v) {
             return Vec3{std::cos(u) * std::sin(v), std::sin(u) * std::sin(v), std::cos(v)};
           },
           {0, 2 * kPi}, {0, kPi}, ts::ClosedMode{true, false}, q)},
      {"parametric shell",
       ts::parametric_surface(exprs("u", "v", "u*v"), {0, 1}, {0, 1}, ts::ShellMode{0.1}, q)},
      {"marching cubes ball", im::marching_cubes(region("x^2 + y^2 + z^2 <= 1"),
                                                 grid({{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}}, 32))},
  };
  for (auto name : {ts::PolyhedronName::kTetrahedron, ts::PolyhedronName::kCube,
                    ts::PolyhedronName::kOctahedron, ts::PolyhedronName::kIcosahedron,
                    ts::PolyhedronName::kDodecahedron}) {
    genus0.emplace_back(std::string(ts::polyhedron_name(name)),
                        ts::primitive(ts::PolyhedronSpec{name, 1}));
  }
  const auto expect_chi = [&](const std::string& name, const TriangleMesh& m, long long chi) {
    const auto r = validate(m);
    c.expect(r.watertight && r.orientation_consistent && r.connected_components == 1,
             name + " not a single closed solid");
    c.expect(r.euler_characteristic == chi,
             name + " chi " + std::to_string(r.euler_characteristic));
  };
  for (const auto& [name, m] : genus0) expect_chi(name, m, 2);
  expect_chi("parametric torus",
             ts::parametric_surface(
                 [](double u, double v) {
                   return Vec3{(3 + std::cos(v)) * std::cos(u), (3 + std::cos(v)) * std::sin(u),
                               std::sin(v)};
                 },
                 {0, 2 * kPi}, {0, 2 * kPi}, ts::ClosedMode{true, true}, {}, {100, 30}),
             0);
  expect_chi("tube-swept circle",
             ts::tube_sweep(exprs("3*cos(t)", "3*sin(t)", "0"), {0, 2 * kPi},
                            {1, true, ts::CapStyle::kFlat}, q),
             0);

  // Wireframe: each part's solid centroid must sit on a distinct vertex
  // (sphere) or edge midpoint (cylinder).
  const auto poly = ts::polyhedron_polygons(ts::PolyhedronName::kDodecahedron, 1);
  std::vector<Segment> edges;
  for (const auto& e : poly.edges()) edges.push_back({poly.vertices[e[0]], poly.vertices[e[1]]});
  const auto frame = ts::wireframe(poly.vertices, edges, 0.06);
  std::set<std::size_t> spheres, cylinders;
  std::size_t unmatched = 0;
  for (const TriangleMesh& part : support::split_components(frame)) {
    c.expect(closed(part), "wireframe part not closed");
    const Vec3 g = centroid(part).point;
    bool matched = false;
    for (std::size_t i = 0; i < poly.vertices.size() && !matched; ++i) {
      if (distance(g, poly.vertices[i]) < 1e-9) matched = spheres.insert(i).second;
    }
    for (std::size_t i = 0; i < edges.size() && !matched; ++i) {
      if (distance(g, (edges[i].a + edges[i].b) * 0.5) < 1e-9) matched = cylinders.insert(i).second;
    }
    if (!matched) ++unmatched;
  }
  c.expect(spheres.size() == 20, std::to_string(spheres.size()) + " sphere parts");
  c.expect(cylinders.size() == 30, std::to_string(cylinders.size()) + " cylinder parts");
  c.expect(unmatched == 0, std::to_string(unmatched) + " unclassified parts");
  c.note(std::to_string(genus0.size()) + " genus-0 generators, 2 tori, wireframe " +
         std::to_string(spheres.size()) + " spheres + " + std::to_string(cylinders.size()) +
         " cylinders");
}

// 7. B-spline identities.
void spline_identities(Check& c) {
  double worst = 0;
  for (bool closed_curve : {false, true}) {
    for (int i = 0; i < 1000; ++i) {
      const auto w = ts::bspline_curve_weights(8, closed_curve, 3, i / 999.0);
      worst = std::max(worst, std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1));
    }
  }
  c.expect(worst <= 1e-12, "partition of unity error " + fmt(worst));
  const std::vector<Vec3> open{{0, 0, 0}, {1, 2, 0}, {3, -1, 1}, {4, 0, 2}, {5, 5, 5}};
  c.expect(ts::bspline_curve_point(open, false, 3, 0) == open.front(), "start not interpolated");
  c.expect(ts::bspline_curve_point(open, false, 3, 1) == open.back(), "end not interpolated");

  // Barycentric coordinates in the tetrahedron of the four control points.
  const std::vector<Vec3> p{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  double lowest = 1;
  for (int i = 0; i <= 1000; ++i) {
    const Vec3 x = ts::bspline_curve_point(p, true, 3, i / 1000.0);
    const double v = dot(p[1] - p[0], cross(p[2] - p[0], p[3] - p[0]));
    const double wb = dot(x - p[0], cross(p[2] - p[0], p[3] - p[0])) / v;
    const double wc = dot(p[1] - p[0], cross(x - p[0], p[3] - p[0])) / v;
    const double wd = dot(p[1] - p[0], cross(p[2] - p[0], x - p[0])) / v;
    lowest = std::min({lowest, 1 - wb - wc - wd, wb, wc, wd});
  }
  c.expect(lowest >= -1e-9, "closed curve leaves the hull: " + fmt(lowest));
  c.note("max partition error " + fmt(worst, 3) + ", min hull coordinate " + fmt(lowest, 4));
}

// 8. STL encoding.
void io_exactness(Check& c) {
  std::vector<std::pair<std::string, TriangleMesh>> meshes;
  for (const char* f : {"stl/tetra_binary.stl", "stl/solid_header_binary.stl",
                        "stl/seven_triangles.stl"}) {
    meshes.emplace_back(f, meshio::read_stl(support::fixture(f)));
  }
  meshes.emplace_back("icosphere", ts::icosphere(4));
  meshes.emplace_back("cube", support::unit_cube_mesh());
  for (const auto& [name, m] : meshes) {
    for (auto format : {meshio::StlFormat::kBinary, meshio::StlFormat::kAscii}) {
      const std::string first = meshio::encode_stl(m, format);
      if (format == meshio::StlFormat::kBinary) {
        c.expect(first.size() == 84 + 50 * m.triangle_count(), name + " binary size");
      }
      const std::string second = meshio::encode_stl(meshio::decode_stl(first), format);
      c.expect(first == second, name + " write-read-write not a fixpoint");
    }
  }
  std::size_t rejected = 0, total = 0;
  for (const auto& e : fs::directory_iterator(support::fixture("stl/malformed"))) {
    ++total;
    try {
      meshio::read_stl(e.path());
      c.expect(false, e.path().filename().string() + " accepted");
    } catch (const FormatError& err) {
      const bool diagnosed = std::string(err.what()).find("byte offset") != std::string::npos;
      c.expect(diagnosed, e.path().filename().string() + " lacks a byte offset");
      rejected += diagnosed;
    }
  }
  c.expect(total >= 6, "malformed corpus has " + std::to_string(total) + " files");
  c.note(std::to_string(meshes.size()) + " meshes round-tripped, " + std::to_string(rejected) +
         "/" + std::to_string(total) + " malformed files rejected");
}

// 9. Transforms.
void transforms(Check& c) {
  const TriangleMesh m = ts::primitive(ts::EllipsoidSpec{{1, 2, 3}, {2, 1, 0.5}});
  const Vec3 e0 = bounds(m).extent();
  const Vec3 e1 = bounds(resize(m, 100)).extent();
  c.near(e1.x, 100, 1e-9, "resize 100 x");
  c.near(e1.y, 100 * e0.y / e0.x, 1e-9, "resize 100 y");
  c.near(e1.z, 100 * e0.z / e0.x, 1e-9, "resize 100 z");
  const Vec3 e2 = bounds(resize(m, Vec3{80, 50, 30})).extent();
  c.near(e2.x, 80, 1e-9, "resize x");
  c.near(e2.y, 50, 1e-9, "resize y");
  c.near(e2.z, 30, 1e-9, "resize z");

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  const auto vec = [&] { return Vec3{u(rng), u(rng), u(rng)}; };
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const AffineTransform t =
        compose(translation(vec()), rotation_about_axis(4 * u(rng), vec(), vec()));
    const Vec3 a = vec(), b = vec();
    worst = std::max(worst, std::abs(distance(t(a), t(b)) - distance(a, b)));
  }
  c.expect(worst <= 1e-12, "rigid distance error " + fmt(worst));
  const Vec3 v = rotation_about_axis(kPi / 4, {0, 0, 1}, {0.5, 0.5, 0})({1, 1, 0});
  c.expect(distance(v, {0.5, 0.5 + std::sqrt(2.0) / 2, 0}) <= 1e-12,
           "rotated cube vertex " + fmt(v.x) + " " + fmt(v.y) + " " + fmt(v.z));
  c.note("worst rigid distance error " + fmt(worst, 3));
}

// 10. Thread count does not change the output.
void determinism(Check& c) {
  std::vector<fs::path> scenes;
  for (const auto& e : fs::directory_iterator(MATHSCULPT_SCENES)) scenes.push_back(e.path());
  for (const char* f : {"scenes/mixed.json", "scenes/lens.json", "scenes/capped_tube.json",
                        "scenes/rotate_then_translate.json"}) {
    scenes.push_back(support::fixture(f));
  }
  std::sort(scenes.begin(), scenes.end());
  const int n = std::max(4, worker_threads());
  for (const auto& path : scenes) {
    const scene::Scene s = scene::load_scene_file(path);
    scene::BuildOptions o;
    o.write_exports = false;
    o.threads = 1;
    const auto one = scene::build(s, o);
    o.threads = n;
    const auto many = scene::build(s, o);
    const auto again = scene::build(s, o);
    const std::string name = path.filename().string();
    c.expect(support::sorted_vertices(one.merged) == support::sorted_vertices(many.merged),
             name + " vertex sets differ");
    c.expect(support::triangle_multiset(one.merged) == support::triangle_multiset(many.merged),
             name + " triangle multisets differ");
    c.expect(meshio::encode_stl(many.merged, meshio::StlFormat::kBinary) ==
                 meshio::encode_stl(again.merged, meshio::StlFormat::kBinary),
             name + " bytes differ between runs");
    if (many.merged.has_colors()) {
      c.expect(meshio::encode_ply(many.merged) == meshio::encode_ply(again.merged),
               name + " PLY bytes differ between runs");
    }
  }
  c.note(std::to_string(scenes.size()) + " scenes, 1 vs " + std::to_string(n) + " threads");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Check&)>> criteria{
      {"snowman pipeline", snowman_pipeline},
      {"ellipsoid bounds", ellipsoid_bounds},
      {"volume oracles", volume_oracles},
      {"csg lens and union", csg_lens_union},
      {"convergence", convergence},
      {"euler and topology", topology},
      {"spline identities", spline_identities},
      {"stl bit exactness", io_exactness},
      {"transforms", transforms},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !c.passed();
    std::printf("%s %2zu %-20s %7.2f s", c.passed() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), seconds);
    for (const auto& n : c.notes()) std::printf("  %s", n.c_str());
    std::printf("\n");
    for (const auto& f : c.failures()) std::printf("       - %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
