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

#include "implicit/mc_table.hpp"

#include <stdexcept>

#include "mathsculpt/geom.hpp"

// The 256-case table is generated rather than transcribed. Each cube face
// contributes directed segments between its crossing edges; on faces with
// four crossings the inside corners are kept apart. The segments chain into
// closed loops that are triangulated without ever putting a diagonal inside
// a cube face, so the triangles of neighbouring cells meet only along the
// shared face segments.

namespace mathsculpt::implicit::detail {

namespace {

Vec3 corner_pos(int c) { return {double(c & 1), double((c >> 1) & 1), double((c >> 2) & 1)}; }

std::array<CubeEdge, 12> make_edges() {
  std::array<CubeEdge, 12> edges{};
  int e = 0;
  for (int axis = 0; axis < 3; ++axis) {
    for (int c = 0; c < 8; ++c) {
      if (!((c >> axis) & 1)) edges[e++] = {axis, c};
    }
  }
  return edges;
}

int edge_between(const std::array<CubeEdge, 12>& edges, int a, int b) {
  for (int e = 0; e < 12; ++e) {
    const int c0 = edges[e].corner;
    const int c1 = c0 | (1 << edges[e].axis);
    if ((c0 == a && c1 == b) || (c0 == b && c1 == a)) return e;
  }
  throw std::logic_error("corners are not adjacent");
}

Vec3 edge_mid(const CubeEdge& e) {
  Vec3 p = corner_pos(e.corner);
  p[e.axis] = 0.5;
  return p;
}

struct Face {
  std::array<int, 4> corners;  // cyclic
  Vec3 normal;
};

std::array<Face, 6> make_faces() {
  std::array<Face, 6> faces{};
  int f = 0;
  for (int axis = 0; axis < 3; ++axis) {
    const int u = (axis + 1) % 3;
    const int v = (axis + 2) % 3;
    for (int side = 0; side < 2; ++side) {
      const int base = side << axis;
      faces[f].corners = {base, base | (1 << u), base | (1 << u) | (1 << v), base | (1 << v)};
      Vec3 n;
      n[axis] = side ? 1.0 : -1.0;
      faces[f].normal = n;
      ++f;
    }
  }
  return faces;
}

/// Bit f set when cube edge e lies on face f.
std::array<int, 12> edge_faces(const std::array<CubeEdge, 12>& edges,
                               const std::array<Face, 6>& faces) {
  std::array<int, 12> mask{};
  for (int e = 0; e < 12; ++e) {
    const int c0 = edges[e].corner;
    const int c1 = c0 | (1 << edges[e].axis);
    for (int f = 0; f < 6; ++f) {
      int hits = 0;
      for (int c : faces[f].corners) hits += (c == c0) + (c == c1);
      if (hits == 2) mask[e] |= 1 << f;
    }
  }
  return mask;
}

bool triangulate(std::vector<int> loop, const std::array<int, 12>& faces_of,
                 std::vector<std::array<std::uint8_t, 3>>& out) {
  if (loop.size() == 3) {
    out.push_back({std::uint8_t(loop[0]), std::uint8_t(loop[1]), std::uint8_t(loop[2])});
    return true;
  }
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int prev = loop[(i + n - 1) % n];
    const int next = loop[(i + 1) % n];
    if (faces_of[prev] & faces_of[next]) continue;  // diagonal would lie in a face
    std::vector<int> rest;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) rest.push_back(loop[k]);
    }
    const std::size_t mark = out.size();
    out.push_back({std::uint8_t(prev), std::uint8_t(loop[i]), std::uint8_t(next)});
    if (triangulate(rest, faces_of, out)) return true;
    out.resize(mark);
  }
  return false;
}

std::vector<std::array<std::uint8_t, 3>> build_case(int mask, const std::array<CubeEdge, 12>& edges,
                                                    const std::array<Face, 6>& faces,
                                                    const std::array<int, 12>& faces_of) {
  auto inside = [mask](int c) { return (mask >> c) & 1; };
  std::array<int, 12> next;
  next.fill(-1);
  for (const Face& f : faces) {
    // Crossing edges of the face in cyclic order, each with the corner it
    // starts from.
    std::vector<int> cross_edges;
    std::vector<int> from;
    for (int k = 0; k < 4; ++k) {
      const int a = f.corners[k];
      const int b = f.corners[(k + 1) % 4];
      if (inside(a) != inside(b)) {
        cross_edges.push_back(edge_between(edges, a, b));
        from.push_back(k);
      }
    }
    std::vector<std::array<int, 3>> segments;  // edge, edge, inside corner
    if (cross_edges.size() == 2) {
      int c = -1;
      for (int k : f.corners) {
        if (inside(k)) c = k;
      }
      segments.push_back({cross_edges[0], cross_edges[1], c});
    } else if (cross_edges.size() == 4) {
      // Pair the two crossings adjacent to each inside corner.
      for (int k = 0; k < 4; ++k) {
        const int c = f.corners[k];
        if (!inside(c)) continue;
        const int before = edge_between(edges, f.corners[(k + 3) % 4], c);
        const int after = edge_between(edges, c, f.corners[(k + 1) % 4]);
        segments.push_back({before, after, c});
      }
    }
    for (auto [e0, e1, c] : segments) {
      const Vec3 p = edge_mid(edges[e0]);
      const Vec3 q = edge_mid(edges[e1]);
      if (dot(cross(q - p, corner_pos(c) - p), f.normal) > 0) std::swap(e0, e1);
      if (next[e0] != -1) throw std::logic_error("edge has two outgoing segments");
      next[e0] = e1;
    }
  }
  std::vector<std::array<std::uint8_t, 3>> tris;
  std::array<bool, 12> used{};
  for (int start = 0; start < 12; ++start) {
    if (next[start] == -1 || used[start]) continue;
    std::vector<int> loop;
    int e = start;
    while (e != -1 && !used[e]) {
      used[e] = true;
      loop.push_back(e);
      e = next[e];
    }
    if (e != start) throw std::logic_error("segment chain does not close");
    if (!triangulate(loop, faces_of, tris)) {
      throw std::logic_error("loop cannot be triangulated");
    }
  }
  return tris;
}

struct Table {
  std::array<CubeEdge, 12> edges = make_edges();
  std::array<std::vector<std::array<std::uint8_t, 3>>, 256> cases;

  Table() {
    const auto faces = make_faces();
    const auto faces_of = edge_faces(edges, faces);
    for (int mask = 0; mask < 256; ++mask) cases[mask] = build_case(mask, edges, faces, faces_of);
  }
};

const Table& table() {
  static const Table t;
  return t;
}

}  // namespace

const std::array<CubeEdge, 12>& cube_edges() { return table().edges; }

const std::vector<std::array<std::uint8_t, 3>>& case_triangles(int mask) {
  return table().cases.at(static_cast<std::size_t>(mask));
}

}  // namespace mathsculpt::implicit::detail
