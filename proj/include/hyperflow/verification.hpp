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

#include <span>
#include <string>
#include <vector>

#include "hyperflow/bounds.hpp"

namespace hyperflow::bounds {

/// Checks pass when worst_margin >= -slack.
inline constexpr double kGridSlack = 1e-9;

struct Check {
  std::string name;
  std::string box;
  int resolution = 0;
  double worst_margin = 0;
  bool passed = false;
  bool informational = false;  ///< recorded, but never affects the verdict
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const;
  int failures() const;
  const Check* find(std::string_view name) const;
};

std::string to_json(const VerificationReport& report, int indent = 2);

/// Re-derives every inequality the table rows are meant to satisfy:
/// (a) gamma >= b_n, (b) delta <= mu_n over the row's range,
/// (c) h1(d, gamma, 1.98) >= 2 pi, (d) h3(q, gamma) >= 2 pi,
/// (e) h4(p, gamma, d) >= 2 pi or p = 2, (f) the final phi comparison.
/// Open-ended ranges are checked up to n = 1000.
VerificationReport verify_table1(std::span<const Table1Row> rows = table1());

/// Grid checks of the monotonicity statements. `resolution` points per axis
/// (>= 8); work is split over `jobs` threads with a fixed-order reduction.
VerificationReport grid_monotonicity_suite(int resolution, int jobs = 1);

/// Point checks of the upper-bound bootstrap constants, the valence-9
/// neighbour estimates, the b_n identity, the xi bracket and a random
/// sample of the lower estimate for phi.
VerificationReport verify_constants();

}  // namespace hyperflow::bounds
