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

#include <vector>

#include <Eigen/Core>

#include "hyperflow/metric.hpp"
#include "hyperflow/triangulation.hpp"

namespace hyperflow {

using CurvatureVector = Eigen::VectorXd;

/// K_e = 2 pi minus the sum of the extended dihedral angles of every edge
/// instance in class e. Throws std::invalid_argument on a size mismatch.
CurvatureVector curvature(const Triangulation& tri, const Metric& metric);
CurvatureVector curvature(const Triangulation& tri, const Eigen::VectorXd& class_lengths);

struct InitialMetric {
  Metric metric;
  /// Classes of valence < 9: the window is still produced, but the length
  /// bounds along the flow are not guaranteed for them.
  std::vector<int> flagged_classes;
};

/// Per class, the midpoint of [max(arccosh 1.13, arccosh(1 + mu_v)),
/// min(arccosh 1.9, arccosh b_v)]. Below valence 9 mu is dropped and b_v is
/// the b(cos(2 pi / v)) expression. Throws std::domain_error for an empty
/// window (valence 1).
InitialMetric default_initial_metric(const Triangulation& tri);

struct FlowConfig {
  double residual_tolerance = 1e-10;
  double max_time = 200;
  double initial_step = 0.01;
  double min_step = 1e-12;
  double max_step = 0.1;
  /// Step-doubling error bound per accepted step, in log-length units.
  double local_error_tolerance = 1e-12;
  /// Record every trace_stride-th accepted step (first and last always).
  int trace_stride = 1;
  /// Quadrature tolerance for the H samples.
  double h_tolerance = 1e-11;

  /// Throws std::invalid_argument for inconsistent settings.
  void validate() const;
};

enum class FlowStatus { Converged, TimeLimit, StepUnderflow };

const char* to_string(FlowStatus status);

struct FlowTrace {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> metrics;
  std::vector<double> residuals;  ///< max |K_e| at each sample
  std::vector<double> h_values;
  bool converged = false;
  FlowStatus status = FlowStatus::TimeLimit;
  Eigen::VectorXd final_metric;
  double final_residual = 0;
  int steps = 0;
  int rejected_steps = 0;
  double estimated_rate = 0;  ///< NaN when the trace is too short to fit
};

/// Integrates du/dt = K(exp u), u = log l, with RK4 and step doubling.
/// Stops on residual <= tolerance, max_time, or a rejected step at min_step.
FlowTrace run_flow(const Triangulation& tri, const Metric& initial,
                   const FlowConfig& config = {});

/// Fixed-step RK4 over `duration` (may be negative) in `substeps` steps.
Eigen::VectorXd advance_flow(const Triangulation& tri, const Eigen::VectorXd& lengths,
                             double duration, int substeps);

struct RateFit {
  double slope = 0;
  double r_squared = 0;
  int samples = 0;
};

/// Least-squares fit of log residual against time over the second half of
/// the samples. Throws std::invalid_argument with fewer than 10 samples with
/// positive residual.
RateFit convergence_rate(const FlowTrace& trace);

}  // namespace hyperflow
