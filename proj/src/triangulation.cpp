// Copyright 2026 The Hyperflow Authors.
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

#include "hyperflow/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyperflow {

namespace {

std::array<int, 3> face_vertices(int face) {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != face) out[k++] = v;
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::string describe(const FaceGluing& g) {
  return "(tet " + std::to_string(g.tet) + ", face " + std::to_string(g.face) +
         ") -> (tet " + std::to_string(g.to_tet) + ", face " +
         std::to_string(g.to_face) + ")";
}

void validate_gluing(const FaceGluing& g, int tet_count) {
  if (g.tet < 0 || g.tet >= tet_count || g.to_tet < 0 || g.to_tet >= tet_count)
    throw std::invalid_argument("gluing " + describe(g) +
                                ": tetrahedron index out of range");
  if (g.face < 0 || g.face > 3 || g.to_face < 0 || g.to_face > 3)
    throw std::invalid_argument("gluing " + describe(g) +
                                ": face index out of range");
  if (g.tet == g.to_tet && g.face == g.to_face)
    throw std::invalid_argument("gluing " + describe(g) +
                                ": face glued to itself");
  std::array<bool, 4> used{};
  for (int v : g.vertex_map) {
    if (v < 0 || v > 3 || v == g.to_face || used[v])
      throw std::invalid_argument("gluing " + describe(g) +
                                  ": vertex map is not a bijection onto the "
                                  "target face");
    used[v] = true;
  }
}

}  // namespace

FaceGluing FaceGluing::reversed() const {
  const auto source = face_vertices(face);
  const auto target = face_vertices(to_face);
  FaceGluing out{to_tet, to_face, tet, face, {}};
  for (int k = 0; k < 3; ++k) {
    const auto it = std::find(vertex_map.begin(), vertex_map.end(), target[k]);
    out.vertex_map[k] = source[it - vertex_map.begin()];
  }
  return out;
}

int Triangulation::valence(int cls) const {
  if (cls < 0 || cls >= edge_class_count())
    throw std::out_of_range("edge class " + std::to_string(cls) +
                            " out of range [0, " +
                            std::to_string(edge_class_count()) + ")");
  return valences_[cls];
}

Triangulation build_from_edge_labels(std::vector<EdgeLabels> labels) {
  if (labels.empty())
    throw std::invalid_argument("edge labels: no tetrahedra");
  int max_class = -1;
  for (const auto& tet : labels)
    for (int c : tet) {
      if (c < 0)
        throw std::invalid_argument("edge labels: negative class index " +
                                    std::to_string(c));
      max_class = std::max(max_class, c);
    }
  std::vector<int> valences(max_class + 1, 0);
  for (const auto& tet : labels)
    for (int c : tet) ++valences[c];
  for (int c = 0; c <= max_class; ++c)
    if (valences[c] == 0)
      throw std::invalid_argument(
          "edge labels: class indices are not contiguous (class " +
          std::to_string(c) + " is never used)");

  Triangulation out;
  out.labels_ = std::move(labels);
  out.valences_ = std::move(valences);
  return out;
}

Triangulation build_from_gluings(int tet_count,
                                 std::span<const FaceGluing> gluings) {
  if (tet_count <= 0)
    throw std::invalid_argument("face gluings: tetrahedron count must be positive");

  const int face_count = 4 * tet_count;
  std::vector<std::optional<FaceGluing>> at_face(face_count);
  std::vector<bool> listed_as_source(face_count, false);
  std::vector<FaceGluing> pairs;
  for (const auto& g : gluings) {
    validate_gluing(g, tet_count);
    const int src = 4 * g.tet + g.face;
    const int dst = 4 * g.to_tet + g.to_face;
    if (!at_face[src] && !at_face[dst]) {
      at_face[src] = g;
      at_face[dst] = g.reversed();
      listed_as_source[src] = true;
      pairs.push_back(g);
      continue;
    }
    // A repeat is only legal as the exact reverse of an earlier gluing.
    const bool same_pair = at_face[src] && at_face[src]->to_tet == g.to_tet &&
                           at_face[src]->to_face == g.to_face;
    if (same_pair && !listed_as_source[src]) {
      if (*at_face[src] != g)
        throw std::invalid_argument("gluing " + describe(g) +
                                    ": inconsistent vertex map with its "
                                    "reverse gluing");
      listed_as_source[src] = true;
      continue;
    }
    throw std::invalid_argument("gluing " + describe(g) + ": face glued twice");
  }
  for (int f = 0; f < face_count; ++f)
    if (!at_face[f])
      throw std::invalid_argument("face gluings: face " + std::to_string(f % 4) +
                                  " of tetrahedron " + std::to_string(f / 4) +
                                  " is unglued");

  DisjointSets sets(6 * tet_count);
  for (int f = 0; f < face_count; ++f) {
    const FaceGluing& g = *at_face[f];
    const auto source = face_vertices(g.face);
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q) {
        const int a = 6 * g.tet + local_edge_index(source[p], source[q]);
        const int b = 6 * g.to_tet +
                      local_edge_index(g.vertex_map[p], g.vertex_map[q]);
        sets.unite(a, b);
      }
  }

  std::vector<int> class_of_root(6 * tet_count, -1);
  std::vector<EdgeLabels> labels(tet_count);
  int next = 0;
  for (int t = 0; t < tet_count; ++t)
    for (int e = 0; e < 6; ++e) {
      const int root = sets.find(6 * t + e);
      if (class_of_root[root] < 0) class_of_root[root] = next++;
      labels[t][e] = class_of_root[root];
    }

  Triangulation out = build_from_edge_labels(std::move(labels));
  out.gluings_ = std::move(pairs);
  return out;
}

EdgeOrientation orientation_at(int local_edge) {
  if (local_edge < 0 || local_edge > 5)
    throw std::out_of_range("local edge index must be in 0..5");
  const int i = kLocalEdges[local_edge][0];
  const int j = kLocalEdges[local_edge][1];
  int k = -1;
  int h = -1;
  for (int v = 0; v < 4; ++v) {
    if (v == i || v == j) continue;
    (k < 0 ? k : h) = v;
  }
  return {local_edge_index(i, j), local_edge_index(i, k), local_edge_index(j, k),
          local_edge_index(k, h), local_edge_index(j, h), local_edge_index(i, h)};
}

}  // namespace hyperflow
