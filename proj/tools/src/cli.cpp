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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "mathsculpt/error.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/scene.hpp"
#include "mathsculpt/version.hpp"

namespace mathsculpt::cli {

namespace {

int default_threads() {
  if (const char* env = std::getenv("MATHSCULPT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Display-only rounding of tiny magnitudes to zero.
double chop(double v) { return std::abs(v) < 1e-10 ? 0.0 : v; }

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << chop(v);
  return s.str();
}

std::string fmt(const Vec3& v) { return "(" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + ")"; }

struct MeshSummary {
  ValidationReport report;
  Aabb box;
  CentroidResult centroid;
  bool has_centroid = false;
  double volume = 0;
};

MeshSummary summarize(const TriangleMesh& m) {
  MeshSummary s;
  s.report = validate(m);
  s.volume = signed_volume_unchecked(m);
  if (!m.empty()) {
    s.box = bounds(m);
    try {
      s.centroid = centroid(m);
      s.has_centroid = true;
    } catch (const GeometryError&) {
    }
  }
  return s;
}

nlohmann::json to_json(const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); }

int cmd_build(const std::string& scene_path, const std::string& out_dir, double quality_scale,
              int threads, bool allow_open, std::ostream& out) {
  const scene::Scene s = scene::load_scene_file(scene_path);
  scene::BuildOptions options;
  options.out_dir = out_dir.empty() ? std::filesystem::path(scene_path).parent_path()
                                    : std::filesystem::path(out_dir);
  if (options.out_dir.empty()) options.out_dir = ".";
  options.quality_scale = quality_scale;
  options.threads = threads;
  options.allow_open = allow_open;
  const scene::BuildResult r = scene::build(s, options);

  out << std::left << std::setw(28) << "object" << std::right << std::setw(12) << "triangles"
      << std::setw(12) << "watertight" << std::setw(16) << "volume" << '\n';
  for (std::size_t i = 0; i < r.per_object.size(); ++i) {
    const auto& rep = r.reports[i];
    out << std::left << std::setw(28) << s.objects[i].label << std::right << std::setw(12)
        << r.per_object[i].triangle_count() << std::setw(12) << (rep.watertight ? "yes" : "no")
        << std::setw(16)
        << (rep.watertight ? fmt(signed_volume_unchecked(r.per_object[i])) : std::string("-"))
        << '\n';
  }
  out << "merged: " << r.merged.vertex_count() << " vertices, " << r.merged.triangle_count()
      << " triangles";
  if (r.dropped_degenerate > 0) out << " (" << r.dropped_degenerate << " degenerate dropped)";
  out << '\n';
  for (const auto& p : r.written_files) out << "wrote " << p.string() << '\n';
  return kOk;
}

int cmd_info(const std::string& path, bool as_json, std::ostream& out) {
  const TriangleMesh m = meshio::read_stl(path);
  const MeshSummary s = summarize(m);
  const ValidationReport& r = s.report;
  if (as_json) {
    nlohmann::json j;
    j["boundary_edge_count"] = r.boundary_edge_count;
    j["bounds"] = m.empty() ? nlohmann::json(nullptr)
                            : nlohmann::json{{"max", to_json(s.box.max)}, {"min", to_json(s.box.min)}};
    j["centroid"] = s.has_centroid ? to_json(s.centroid.point) : nlohmann::json(nullptr);
    j["centroid_is_surface"] = s.has_centroid && s.centroid.surface_fallback;
    j["connected_components"] = r.connected_components;
    j["degenerate_triangle_count"] = r.degenerate_triangle_count;
    j["duplicate_vertex_pairs"] = r.duplicate_vertex_pairs;
    j["edge_count"] = r.edge_count;
    j["euler_characteristic"] = r.euler_characteristic;
    j["min_triangle_area"] = r.min_triangle_area;
    j["nonmanifold_edge_count"] = r.nonmanifold_edge_count;
    j["orientation_consistent"] = r.orientation_consistent;
    j["signed_volume"] = s.volume;
    j["triangle_count"] = r.triangle_count;
    j["vertex_count"] = r.vertex_count;
    j["watertight"] = r.watertight;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "file:                   " << path << '\n'
      << "triangles:              " << r.triangle_count << '\n'
      << "vertices:               " << r.vertex_count << '\n'
      << "edges:                  " << r.edge_count << '\n';
  if (!m.empty()) {
    out << "bounds min:             " << fmt(s.box.min) << '\n'
        << "bounds max:             " << fmt(s.box.max) << '\n';
  }
  if (s.has_centroid) {
    out << "centroid:               " << fmt(s.centroid.point)
        << (s.centroid.surface_fallback ? "  (surface; mesh is open)" : "") << '\n';
  }
  out << "signed volume:          " << fmt(s.volume, 9) << '\n'
      << "watertight:             " << (r.watertight ? "yes" : "no") << '\n'
      << "orientation consistent: " << (r.orientation_consistent ? "yes" : "no") << '\n'
      << "euler characteristic:   " << r.euler_characteristic << '\n'
      << "components:             " << r.connected_components << '\n'
      << "boundary edges:         " << r.boundary_edge_count << '\n'
      << "non-manifold edges:     " << r.nonmanifold_edge_count << '\n'
      << "degenerate triangles:   " << r.degenerate_triangle_count << '\n'
      << "duplicate vertex pairs: " << r.duplicate_vertex_pairs << '\n'
      << "min triangle area:      " << fmt(r.min_triangle_area, 9) << '\n';
  return kOk;
}

int cmd_validate(const std::string& path, bool strict, std::ostream& out) {
  const TriangleMesh m = meshio::read_stl(path);
  const ValidationReport r = validate(m);
  bool ok = r.watertight && r.orientation_consistent;
  if (strict && r.degenerate_triangle_count > 0) ok = false;
  out << path << ": " << (ok ? "ok" : "FAILED") << '\n';
  if (!r.watertight) {
    out << "  not watertight: " << r.boundary_edge_count << " boundary edges, "
        << r.nonmanifold_edge_count << " non-manifold edges\n";
    for (const auto& e : r.sample_boundary_edges) {
      out << "  boundary edge " << fmt(e[0]) << " - " << fmt(e[1]) << '\n';
    }
  }
  if (!r.orientation_consistent) out << "  inconsistent triangle orientation\n";
  if (r.degenerate_triangle_count > 0) {
    out << "  " << r.degenerate_triangle_count << " degenerate triangles"
        << (strict ? "" : " (allowed without --strict)") << '\n';
  }
  return ok ? kOk : kValidationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile mathematical scene descriptions into printable meshes", "mathsculpt"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  std::string scene_path, out_dir;
  double quality_scale = 1;
  int threads = default_threads();
  bool allow_open = false;
  auto* build = app.add_subcommand("build", "Build a scene and write its exports");
  build->add_option("scene", scene_path, "Scene JSON file")->required();
  build->add_option("--out", out_dir, "Output directory (default: the scene's directory)");
  build->add_option("--quality-scale", quality_scale,
                    "Multiply sample counts and divide cell budgets")
      ->check(CLI::PositiveNumber);
  build->add_option("--threads", threads, "Worker threads (default: MATHSCULPT_THREADS)")
      ->check(CLI::Range(1, 4096));
  build->add_flag("--allow-open", allow_open, "Do not fail on open objects");

  std::string mesh_path;
  bool as_json = false;
  auto* info = app.add_subcommand("info", "Report bounds, centroid, volume and topology");
  info->add_option("mesh", mesh_path, "STL file")->required();
  info->add_flag("--json", as_json, "Print a JSON object");

  bool strict = false;
  auto* check = app.add_subcommand("validate", "Check that a mesh is printable");
  check->add_option("mesh", mesh_path, "STL file")->required();
  check->add_flag("--strict", strict, "Degenerate triangles also fail");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*build) return cmd_build(scene_path, out_dir, quality_scale, threads, allow_open, out);
    if (*info) return cmd_info(mesh_path, as_json, out);
    return cmd_validate(mesh_path, strict, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailed;
  } catch (const FormatError& e) {
    err << "error: malformed mesh: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace mathsculpt::cli
