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

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>

#include "mathsculpt/error.hpp"
#include "mathsculpt/meshio.hpp"
#include "mathsculpt/version.hpp"
#include "meshio/encoding.hpp"

namespace mathsculpt::meshio {

namespace {

constexpr std::size_t kHeaderSize = 80;
constexpr std::size_t kRecordSize = 50;

using Soup = std::vector<std::array<Vec3, 3>>;

std::array<float, 3> to_f32(const Vec3& v) {
  return {static_cast<float>(v.x), static_cast<float>(v.y), static_cast<float>(v.z)};
}

Vec3 from_f32(const std::array<float, 3>& v) { return {v[0], v[1], v[2]}; }

/// Normal of the triangle as stored (f32 corners), in f32.
std::array<float, 3> facet_normal(const std::array<std::array<float, 3>, 3>& c) {
  const Vec3 n = triangle_normal(from_f32(c[0]), from_f32(c[1]), from_f32(c[2]));
  return to_f32(n);
}

std::array<std::array<float, 3>, 3> corners(const TriangleMesh& m, const Triangle& t) {
  return {to_f32(m.vertices()[t[0]]), to_f32(m.vertices()[t[1]]), to_f32(m.vertices()[t[2]])};
}

std::string encode_binary(const TriangleMesh& m) {
  std::string out;
  out.reserve(kHeaderSize + 4 + kRecordSize * m.triangle_count());
  std::string header = "mathsculpt " + std::string(version());
  header.resize(kHeaderSize, '\0');
  out += header;
  detail::put_u32(out, static_cast<std::uint32_t>(m.triangle_count()));
  for (const Triangle& t : m.triangles()) {
    const auto c = corners(m, t);
    for (float x : facet_normal(c)) detail::put_f32(out, x);
    for (const auto& p : c)
      for (float x : p) detail::put_f32(out, x);
    detail::put_u16(out, 0);
  }
  return out;
}

void put_triple(std::string& out, const std::array<float, 3>& v) {
  for (int k = 0; k < 3; ++k) {
    out += ' ';
    detail::put_number(out, v[k]);
  }
}

std::string encode_ascii(const TriangleMesh& m, std::string_view name) {
  std::string out = "solid ";
  out += name;
  out += '\n';
  for (const Triangle& t : m.triangles()) {
    const auto c = corners(m, t);
    out += "facet normal";
    put_triple(out, facet_normal(c));
    out += "\n  outer loop\n";
    for (const auto& p : c) {
      out += "    vertex";
      put_triple(out, p);
      out += '\n';
    }
    out += "  endloop\nendfacet\n";
  }
  out += "endsolid ";
  out += name;
  out += '\n';
  return out;
}

float get_f32(std::string_view bytes, std::size_t offset) {
  float v;
  std::memcpy(&v, bytes.data() + offset, 4);
  if (!std::isfinite(v)) throw FormatError("non-finite coordinate", offset);
  return v;
}

Soup decode_binary(std::string_view bytes, std::uint32_t count) {
  Soup soup;
  soup.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::size_t rec = kHeaderSize + 4 + kRecordSize * i;
    for (int k = 0; k < 3; ++k) get_f32(bytes, rec + 4 * k);  // normal must be finite too
    std::array<Vec3, 3> tri;
    for (int v = 0; v < 3; ++v) {
      const std::size_t at = rec + 12 + 12 * v;
      tri[v] = {get_f32(bytes, at), get_f32(bytes, at + 4), get_f32(bytes, at + 8)};
    }
    soup.push_back(tri);
  }
  return soup;
}

/// Whitespace-separated tokens with their byte offsets.
class AsciiReader {
 public:
  explicit AsciiReader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::size_t offset() {
    skip_space();
    return pos_;
  }

  std::string_view token() {
    skip_space();
    if (pos_ >= text_.size()) throw FormatError("unexpected end of file", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(std::string_view keyword) {
    const std::size_t at = offset();
    const std::string_view t = token();
    if (!equal_ignore_case(t, keyword)) {
      throw FormatError("expected '" + std::string(keyword) + "' but found '" + std::string(t) +
                            "'",
                        at);
    }
  }

  float number() {
    const std::size_t at = offset();
    const std::string_view t = token();
    float v = 0;
    const char* first = t.data();
    if (!t.empty() && t.front() == '+') ++first;
    const auto res = std::from_chars(first, t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
      throw FormatError("malformed number '" + std::string(t) + "'", at);
    }
    if (!std::isfinite(v)) throw FormatError("non-finite coordinate", at);
    return v;
  }

  void skip_line() {
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
  }

  static bool equal_ignore_case(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(a[i])) != b[i]) return false;
    }
    return true;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Soup decode_ascii(std::string_view text) {
  AsciiReader in(text);
  Soup soup;
  in.expect("solid");
  in.skip_line();
  for (;;) {
    const std::size_t at = in.offset();
    const std::string_view t = in.token();
    if (AsciiReader::equal_ignore_case(t, "endsolid")) {
      in.skip_line();
      if (in.at_end()) break;
      in.expect("solid");
      in.skip_line();
      continue;
    }
    if (!AsciiReader::equal_ignore_case(t, "facet")) {
      throw FormatError("expected 'facet' or 'endsolid' but found '" + std::string(t) + "'", at);
    }
    in.expect("normal");
    for (int k = 0; k < 3; ++k) in.number();
    in.expect("outer");
    in.expect("loop");
    std::array<Vec3, 3> tri;
    for (auto& v : tri) {
      in.expect("vertex");
      const float x = in.number();
      const float y = in.number();
      const float z = in.number();
      v = {x, y, z};
    }
    in.expect("endloop");
    in.expect("endfacet");
    soup.push_back(tri);
  }
  return soup;
}

TriangleMesh soup_to_mesh(const Soup& soup) {
  std::vector<Vec3> verts;
  std::vector<Triangle> tris;
  verts.reserve(soup.size() * 3);
  tris.reserve(soup.size());
  Aabb box;
  for (const auto& t : soup) {
    const auto base = static_cast<std::uint32_t>(verts.size());
    for (const Vec3& v : t) {
      verts.push_back(v);
      box.include(v);
    }
    tris.push_back({base, base + 1, base + 2});
  }
  // Collapsed input triangles would break the mesh invariants; drop them up
  // front, then weld the rest.
  std::vector<Triangle> kept;
  for (const Triangle& t : tris) {
    const Vec3& a = verts[t[0]];
    const Vec3& b = verts[t[1]];
    const Vec3& c = verts[t[2]];
    if (a == b || b == c || a == c) continue;
    kept.push_back(t);
  }
  const TriangleMesh raw(std::move(verts), std::move(kept));
  return weld(raw, 1e-9 * box.diagonal());
}

bool starts_with_solid(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[i]))) ++i;
  return bytes.substr(i, 5) == "solid";
}

}  // namespace

std::string encode_stl(const TriangleMesh& m, StlFormat format, std::string_view name) {
  if (m.empty()) throw GeometryError("cannot write an empty mesh");
  return format == StlFormat::kBinary ? encode_binary(m) : encode_ascii(m, name);
}

TriangleMesh decode_stl(std::string_view bytes) {
  if (bytes.size() >= kHeaderSize + 4) {
    std::uint32_t count;
    std::memcpy(&count, bytes.data() + kHeaderSize, 4);
    const std::size_t expected = kHeaderSize + 4 + kRecordSize * std::size_t(count);
    if (bytes.size() == expected) return soup_to_mesh(decode_binary(bytes, count));
    if (!starts_with_solid(bytes)) {
      if (bytes.size() < expected) {
        throw FormatError("binary STL declares " + std::to_string(count) + " triangles (" +
                              std::to_string(expected) + " bytes) but is truncated",
                          bytes.size());
      }
      throw FormatError("binary STL declares " + std::to_string(count) + " triangles but has " +
                            std::to_string(bytes.size() - expected) + " trailing bytes",
                        expected);
    }
  } else if (!starts_with_solid(bytes)) {
    throw FormatError("file too short for a binary STL header", bytes.size());
  }
  return soup_to_mesh(decode_ascii(bytes));
}

void write_stl(const TriangleMesh& m, const std::filesystem::path& path, StlFormat format) {
  write_file(path, encode_stl(m, format, path.stem().string()));
}

TriangleMesh read_stl(const std::filesystem::path& path) { return decode_stl(read_file(path)); }

}  // namespace mathsculpt::meshio
