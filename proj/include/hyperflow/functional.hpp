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

#include <functional>
#include <stdexcept>

#include <Eigen/Core>

#include "hyperflow/metric.hpp"
#include "hyperflow/tetra_geometry.hpp"
#include "hyperflow/triangulation.hpp"

namespace hyperflow {

/// Adaptive quadrature ran out of its subdivision budget.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultCovolumeTolerance = 1e-9;

/// Lobachevsky function -int_0^theta log|2 sin t| dt, absolute error
/// below 1e-12. Odd and pi-periodic.
double lobachevsky(double theta);

/// cov(0, ..., 0) = 16 Lambda(pi/4).
double covolume_at_origin();

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  int panels = 0;
};

/// Adaptive composite 15-point Gauss-Legendre on [a, b]. Panels are bisected
/// until the coarse/refined difference is below tolerance * width / (b - a).
/// Throws QuadratureError past `max_panels` accepted-or-split panels.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tolerance,
                                    int max_panels = 1 << 16);

/// Line integral of sum_i alpha_i(l) dl_i along the straight segment from
/// `from` to `to`.
QuadratureResult mu_line_integral(const EdgeLengths6& from, const EdgeLengths6& to,
                                  double tolerance = kDefaultCovolumeTolerance);

struct CovolumeResult {
  double value = 0;
  double quadrature_error_estimate = 0;
};

/// Extended co-volume of one tetrahedron: cov(0) plus the integral of the
/// angle 1-form from the origin to `lengths`.
CovolumeResult covolume_tet(const EdgeLengths6& lengths,
                            double tolerance = kDefaultCovolumeTolerance);

/// H(l) = sum over tetrahedra of cov(pulled-back l) - 2 pi sum_e l_e.
/// Defined on all of R^E; the Metric overload is the usual entry point.
double total_H(const Triangulation& tri, const Eigen::VectorXd& class_lengths,
               double tolerance = kDefaultCovolumeTolerance);
double total_H(const Triangulation& tri, const Metric& metric,
               double tolerance = kDefaultCovolumeTolerance);

/// Hyperbolic volume (cov - sum alpha_i l_i) / 2 of a hyper-ideal tetrahedron.
/// Throws std::domain_error if `lengths` is not hyper-ideal.
double volume_tet(const EdgeLengths6& lengths,
                  double tolerance = kDefaultCovolumeTolerance);

}  // namespace hyperflow
