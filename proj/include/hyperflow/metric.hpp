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

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

#include "hyperflow/tetra_geometry.hpp"
#include "hyperflow/triangulation.hpp"

namespace hyperflow {

/// Generalized hyper-ideal metric: one positive length per edge class.
class Metric {
 public:
  explicit Metric(Eigen::VectorXd lengths) : lengths_(std::move(lengths)) {
    for (Eigen::Index i = 0; i < lengths_.size(); ++i)
      if (!std::isfinite(lengths_(i)) || lengths_(i) <= 0)
        throw std::invalid_argument("metric: lengths must be positive and finite");
  }

  const Eigen::VectorXd& lengths() const { return lengths_; }
  Eigen::Index size() const { return lengths_.size(); }
  double operator[](Eigen::Index i) const { return lengths_(i); }

 private:
  Eigen::VectorXd lengths_;
};

/// Lengths of the six local edges of tetrahedron `tet` under per-class
/// lengths `class_lengths`.
template <typename Derived>
EdgeLengths6 pull_back(const Triangulation& tri,
                       const Eigen::MatrixBase<Derived>& class_lengths, int tet) {
  const EdgeLabels& labels = tri.labels(tet);
  EdgeLengths6 out;
  for (int e = 0; e < 6; ++e) out(e) = class_lengths(labels[e]);
  return out;
}

inline void require_matching_size(const Triangulation& tri, Eigen::Index size) {
  if (size != tri.edge_class_count())
    throw std::invalid_argument("metric has " + std::to_string(size) +
                                " entries but the triangulation has " +
                                std::to_string(tri.edge_class_count()) +
                                " edge classes");
}

}  // namespace hyperflow
