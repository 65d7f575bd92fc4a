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

#include "hyperflow/tetra_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperflow {

namespace {

void require_positive(const EdgeLengths6& lengths) {
  for (int i = 0; i < 6; ++i)
    if (!std::isfinite(lengths(i)) || lengths(i) <= 0)
      throw std::invalid_argument("hyper-ideality needs positive finite lengths");
}

}  // namespace

bool phi_strictly_inside(const EdgeLengths6& lengths) {
  require_positive(lengths);
  const CoshLengths6 x = cosh_lengths(lengths);
  for (int e = 0; e < 6; ++e) {
    const double p = phi(x, orientation_at(e));
    if (!(p > -1.0 && p < 1.0)) return false;
  }
  return true;
}

bool is_hyperideal(const EdgeLengths6& lengths) {
  require_positive(lengths);
  const double bound = std::acosh(kHyperidealCoshBound);
  bool short_edges = true;
  for (int i = 0; i < 6; ++i) short_edges = short_edges && lengths(i) <= bound;
  if (short_edges) return true;
  return phi_strictly_inside(lengths);
}

}  // namespace hyperflow
