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

#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace hyperflow {

/// Local edge order of a tetrahedron with vertices 0..3:
/// (01, 02, 03, 12, 13, 23), i.e. (12, 13, 14, 23, 24, 34) in 1-based naming.
inline constexpr std::array<std::array<int, 2>, 6> kLocalEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Local index of the edge joining vertices u != v (both in 0..3).
constexpr int local_edge_index(int u, int v) {
  if (u > v) std::swap(u, v);
  for (int e = 0; e < 6; ++e)
    if (kLocalEdges[e][0] == u && kLocalEdges[e][1] == v) return e;
  return -1;
}

/// Local index of the edge opposite to `edge`.
constexpr int opposite_edge(int edge) { return 5 - edge; }

/// Edge-class label of each local edge of one tetrahedron.
using EdgeLabels = std::array<int, 6>;

/// Gluing of face `face` of tetrahedron `tet` onto face `to_face` of `to_tet`.
/// Faces are named by their opposite vertex. `vertex_map[k]` is the image of
/// the k-th smallest vertex of the source face.
struct FaceGluing {
  int tet = 0;
  int face = 0;
  int to_tet = 0;
  int to_face = 0;
  std::array<int, 3> vertex_map{};

  FaceGluing reversed() const;
  bool operator==(const FaceGluing&) const = default;
};

/// Closed pseudo 3-manifold, reduced to what the curvature pipeline needs:
/// per-tetrahedron edge-class labels and the valence of each class.
/// Immutable once built.
class Triangulation {
 public:
  int tet_count() const { return static_cast<int>(labels_.size()); }
  int edge_class_count() const { return static_cast<int>(valences_.size()); }

  std::span<const EdgeLabels> labels() const { return labels_; }
  const EdgeLabels& labels(int tet) const { return labels_.at(tet); }

  /// Number of (tetrahedron, local edge) instances in class `cls`.
  /// Throws std::out_of_range for an invalid class.
  int valence(int cls) const;
  std::span<const int> valences() const { return valences_; }

  /// Face gluings the triangulation was built from; empty for label input.
  std::span<const FaceGluing> gluings() const { return gluings_; }

 private:
  friend Triangulation build_from_edge_labels(std::vector<EdgeLabels> labels);
  friend Triangulation build_from_gluings(int tet_count,
                                          std::span<const FaceGluing> gluings);

  std::vector<EdgeLabels> labels_;
  std::vector<int> valences_;
  std::vector<FaceGluing> gluings_;
};

/// Takes the edge identification as given. Class indices must be
/// non-negative and contiguous from 0. No check is made that the labels come
/// from an actual face pairing.
Triangulation build_from_edge_labels(std::vector<EdgeLabels> labels);

/// Edge classes are the orbits of edge instances under the face gluings.
/// The gluings must pair up all 4 * tet_count faces. A gluing listed together
/// with its exact reverse is accepted; any other repeat of a face is an error.
/// Classes are numbered in order of first appearance over (tet, local edge).
Triangulation build_from_gluings(int tet_count,
                                 std::span<const FaceGluing> gluings);

/// Ordering (e1..e6) of the local edges with (e_i, e_{i+3}) opposite and
/// e1, e2, e3 bounding a common face.
using EdgeOrientation = std::array<int, 6>;

/// Canonical orientation with e1 = `local_edge` = {i, j}: the face is
/// {i, j, k} with k the smallest remaining vertex, h the last one, and
/// (e1..e6) = (ij, ik, jk, kh, jh, ih).
EdgeOrientation orientation_at(int local_edge);

}  // namespace hyperflow
