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

#include "hyperflow/curvature_flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hyperflow/bounds.hpp"
#include "hyperflow/functional.hpp"
#include "hyperflow/tetra_geometry.hpp"

namespace hyperflow {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Eigen::VectorXd rk4(const Triangulation& tri, const Eigen::VectorXd& u, double h) {
  auto f = [&](const Eigen::VectorXd& v) {
    return curvature(tri, Eigen::VectorXd(v.array().exp()));
  };
  const Eigen::VectorXd k1 = f(u);
  const Eigen::VectorXd k2 = f(u + 0.5 * h * k1);
  const Eigen::VectorXd k3 = f(u + 0.5 * h * k2);
  const Eigen::VectorXd k4 = f(u + h * k3);
  return u + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
}

}  // namespace

CurvatureVector curvature(const Triangulation& tri, const Eigen::VectorXd& class_lengths) {
  require_matching_size(tri, class_lengths.size());
  CurvatureVector k = CurvatureVector::Constant(class_lengths.size(), kTwoPi);
  for (int t = 0; t < tri.tet_count(); ++t) {
    const auto angles = dihedral_angles(pull_back(tri, class_lengths, t));
    const EdgeLabels& labels = tri.labels(t);
    for (int e = 0; e < 6; ++e) k(labels[e]) -= angles.alpha(e);
  }
  return k;
}

CurvatureVector curvature(const Triangulation& tri, const Metric& metric) {
  return curvature(tri, metric.lengths());
}

InitialMetric default_initial_metric(const Triangulation& tri) {
  const double floor = std::acosh(1.13);
  const double ceiling = std::acosh(1.9);
  Eigen::VectorXd l(tri.edge_class_count());
  std::vector<int> flagged;
  for (int e = 0; e < tri.edge_class_count(); ++e) {
    const int v = tri.valence(e);
    double lower = floor, upper = ceiling;
    if (v >= 9) {
      lower = std::max(lower, std::acosh(1 + bounds::mu_n(v)));
      upper = std::min(upper, std::acosh(bounds::b_n(v)));
    } else {
      flagged.push_back(e);
      // Valence 2 puts y = -1, where b(y) is unbounded.
      if (v != 2) {
        const double b = bounds::b_of_y(bounds::cos_2pi_over(v));
        upper = b >= 1 ? std::min(upper, std::acosh(b)) : 0;
      }
    }
    if (!(lower < upper))
      throw std::domain_error("empty initial window for edge class " + std::to_string(e) +
                              " of valence " + std::to_string(v));
    l(e) = 0.5 * (lower + upper);
  }
  return {Metric(std::move(l)), std::move(flagged)};
}

void FlowConfig::validate() const {
  if (!(residual_tolerance > 0)) throw std::invalid_argument("residual tolerance must be > 0");
  if (!(max_time >= 0)) throw std::invalid_argument("max time must be >= 0");
  if (!(min_step > 0) || !(min_step <= max_step))
    throw std::invalid_argument("need 0 < min_step <= max_step");
  if (!(initial_step > 0)) throw std::invalid_argument("initial step must be > 0");
  if (!(local_error_tolerance > 0))
    throw std::invalid_argument("local error tolerance must be > 0");
  if (trace_stride < 1) throw std::invalid_argument("trace stride must be >= 1");
  if (!(h_tolerance > 0)) throw std::invalid_argument("H tolerance must be > 0");
}

const char* to_string(FlowStatus status) {
  switch (status) {
    case FlowStatus::Converged: return "converged";
    case FlowStatus::TimeLimit: return "time_limit";
    default: return "step_underflow";
  }
}

FlowTrace run_flow(const Triangulation& tri, const Metric& initial, const FlowConfig& config) {
  config.validate();
  require_matching_size(tri, initial.size());
  FlowTrace trace;
  Eigen::VectorXd u = initial.lengths().array().log();
  double t = 0;
  double h = std::clamp(config.initial_step, config.min_step, config.max_step);

  auto record = [&](const Eigen::VectorXd& l, double residual) {
    trace.times.push_back(t);
    trace.metrics.push_back(l);
    trace.residuals.push_back(residual);
    trace.h_values.push_back(total_H(tri, l, config.h_tolerance));
  };

  Eigen::VectorXd l = initial.lengths();
  double residual = curvature(tri, l).lpNorm<Eigen::Infinity>();
  record(l, residual);
  bool recorded = true;

  while (true) {
    if (residual <= config.residual_tolerance) {
      trace.status = FlowStatus::Converged;
      break;
    }
    if (t >= config.max_time) {
      trace.status = FlowStatus::TimeLimit;
      break;
    }
    const double step = std::min(h, config.max_time - t);
    const Eigen::VectorXd full = rk4(tri, u, step);
    const Eigen::VectorXd half = rk4(tri, rk4(tri, u, 0.5 * step), 0.5 * step);
    const double err = (half - full).lpNorm<Eigen::Infinity>() / 15;
    const double factor =
        err == 0 ? 5.0
                 : std::clamp(0.9 * std::pow(config.local_error_tolerance / err, 0.2), 0.2, 5.0);
    if (err <= config.local_error_tolerance) {
      u = half + (half - full) / 15;
      t += step;
      ++trace.steps;
      l = u.array().exp();
      residual = curvature(tri, l).lpNorm<Eigen::Infinity>();
      recorded = trace.steps % config.trace_stride == 0;
      if (recorded) record(l, residual);
      h = std::clamp(step * factor, config.min_step, config.max_step);
    } else {
      ++trace.rejected_steps;
      if (step <= config.min_step) {
        trace.status = FlowStatus::StepUnderflow;
        break;
      }
      h = std::max(config.min_step, step * factor);
    }
  }
  if (!recorded) record(l, residual);

  trace.converged = trace.status == FlowStatus::Converged;
  trace.final_metric = l;
  trace.final_residual = residual;
  trace.estimated_rate = std::numeric_limits<double>::quiet_NaN();
  try {
    trace.estimated_rate = convergence_rate(trace).slope;
  } catch (const std::invalid_argument&) {
  }
  return trace;
}

Eigen::VectorXd advance_flow(const Triangulation& tri, const Eigen::VectorXd& lengths,
                             double duration, int substeps) {
  if (substeps < 1) throw std::invalid_argument("advance_flow: substeps must be >= 1");
  require_matching_size(tri, lengths.size());
  Eigen::VectorXd u = lengths.array().log();
  const double h = duration / substeps;
  for (int i = 0; i < substeps; ++i) u = rk4(tri, u, h);
  return u.array().exp();
}

RateFit convergence_rate(const FlowTrace& trace) {
  std::vector<double> ts, ys;
  for (std::size_t i = 0; i < trace.times.size(); ++i)
    if (trace.residuals[i] > 0) {
      ts.push_back(trace.times[i]);
      ys.push_back(std::log(trace.residuals[i]));
    }
  if (ts.size() < 10)
    throw std::invalid_argument("convergence_rate: need at least 10 samples, have " +
                                std::to_string(ts.size()));
  const std::size_t begin = ts.size() / 2;
  const auto n = static_cast<double>(ts.size() - begin);
  double mt = 0, my = 0;
  for (std::size_t i = begin; i < ts.size(); ++i) {
    mt += ts[i];
    my += ys[i];
  }
  mt /= n;
  my /= n;
  double stt = 0, sty = 0, syy = 0;
  for (std::size_t i = begin; i < ts.size(); ++i) {
    stt += (ts[i] - mt) * (ts[i] - mt);
    sty += (ts[i] - mt) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  RateFit fit;
  fit.samples = static_cast<int>(n);
  fit.slope = stt > 0 ? sty / stt : 0;
  const double ss_res = syy - fit.slope * sty;
  fit.r_squared = syy > 0 ? 1 - ss_res / syy : 1;
  return fit;
}

}  // namespace hyperflow
