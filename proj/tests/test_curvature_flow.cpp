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

#include <cmath>

#include <gtest/gtest.h>

#include "hyperflow/bounds.hpp"
#include "hyperflow/functional.hpp"
#include "oracles.hpp"

namespace hyperflow {
namespace {

constexpr double kPi = oracle::kPi;

Triangulation two_tet() {
  return build_from_edge_labels({{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}});
}

// Valences 9 and 15.
Triangulation mixed() {
  return build_from_edge_labels({{0, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 1, 1},
                                 {1, 1, 1, 1, 1, 1},
                                 {1, 1, 1, 1, 1, 1}});
}

Metric constant_metric(double l, int n = 1) {
  return Metric(Eigen::VectorXd::Constant(n, l));
}

double fixed_point_cosh() { return oracle::equilateral_cosh(kPi / 6); }

TEST(Curvature, TwoTetExamples) {
  const auto k = curvature(two_tet(), constant_metric(std::acosh(2.0)));
  ASSERT_EQ(k.size(), 1);
  EXPECT_NEAR(k(0), -3.80963873963557659, 1e-12);
  const auto k0 = curvature(two_tet(), constant_metric(std::acosh(fixed_point_cosh())));
  EXPECT_NEAR(k0(0), 0, 1e-12);
}

TEST(Curvature, FlatWhenAnglesCloseUp) {
  // Three classes of valence 8 at a common length whose equilateral angle is pi/4.
  const Triangulation tri = build_from_edge_labels(
      {{0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1}, {1, 1, 1, 1, 2, 2}, {2, 2, 2, 2, 2, 2}});
  for (int e = 0; e < 3; ++e) ASSERT_EQ(tri.valence(e), 8);
  const double l = std::acosh(oracle::equilateral_cosh(kPi / 4));
  const auto k = curvature(tri, constant_metric(l, 3));
  for (int e = 0; e < 3; ++e) EXPECT_NEAR(k(e), 0, 1e-12);
}

TEST(Curvature, Bounds) {
  const Triangulation tri = mixed();
  for (double a : {0.01, 0.3, 1.0, 3.0, 8.0})
    for (double b : {0.02, 0.5, 2.0, 6.0}) {
      Eigen::VectorXd l(2);
      l << a, b;
      const auto k = curvature(tri, Metric(l));
      for (int e = 0; e < 2; ++e) {
        EXPECT_LT(k(e), 2 * kPi);
        EXPECT_GE(k(e), 2 * kPi - tri.valence(e) * kPi);
      }
    }
}

TEST(Curvature, SizeMismatch) {
  EXPECT_THROW(curvature(two_tet(), constant_metric(1, 2)), std::invalid_argument);
}

TEST(MetricType, RejectsNonPositive) {
  EXPECT_THROW(Metric(Eigen::VectorXd::Zero(1)), std::invalid_argument);
  EXPECT_THROW(Metric(Eigen::VectorXd::Constant(1, NAN)), std::invalid_argument);
}

TEST(InitialMetric, Valence12) {
  const auto init = default_initial_metric(two_tet());
  EXPECT_NEAR(init.metric[0], 0.7653544992260336, 1e-15);
  EXPECT_NEAR(init.metric[0],
              0.5 * (std::acosh(1.13) + std::acosh(16 / (1 + std::cos(kPi / 6)) - 7)), 1e-15);
  EXPECT_TRUE(init.flagged_classes.empty());
}

TEST(InitialMetric, Valence9UsesFloor) {
  const Triangulation tri =
      build_from_edge_labels({{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1}, {1, 1, 1, 1, 1, 1}});
  const auto init = default_initial_metric(tri);
  const double expected = 0.5 * (std::acosh(1.13) + std::acosh(1.9));
  EXPECT_NEAR(init.metric[0], expected, 1e-15);
  EXPECT_NEAR(init.metric[1], expected, 1e-15);
}

TEST(InitialMetric, LowValenceFlagged) {
  const Triangulation tri = build_from_edge_labels({{0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}});
  const auto init = default_initial_metric(tri);
  EXPECT_EQ(init.flagged_classes, (std::vector<int>{0, 1}));
  EXPECT_GT(init.metric[0], std::acosh(1.13));
  EXPECT_LT(init.metric[0], std::acosh(1.9));

  const Triangulation one = build_from_gluings(
      1, std::vector<FaceGluing>{{0, 0, 0, 1, {0, 2, 3}}, {0, 2, 0, 3, {0, 1, 2}}});
  EXPECT_THROW(default_initial_metric(one), std::domain_error);
}

TEST(Flow, ConvergesOnTwoTet) {
  const Triangulation tri = two_tet();
  const FlowTrace trace = run_flow(tri, default_initial_metric(tri).metric);
  ASSERT_TRUE(trace.converged);
  EXPECT_EQ(trace.status, FlowStatus::Converged);
  EXPECT_LE(trace.final_residual, 1e-10);
  EXPECT_NEAR(std::cosh(trace.final_metric(0)), fixed_point_cosh(), 1e-6);
  EXPECT_NEAR(std::cosh(trace.final_metric(0)), 1.18301270189221932, 1e-6);
  EXPECT_LT(trace.times.back(), 200);
}

TEST(Flow, TraceInvariants) {
  const Triangulation tri = two_tet();
  for (double x0 : {1.14, 1.5, 1.89}) {
    const FlowTrace trace = run_flow(tri, constant_metric(std::acosh(x0)));
    ASSERT_TRUE(trace.converged) << x0;
    ASSERT_EQ(trace.times.size(), trace.metrics.size());
    ASSERT_EQ(trace.times.size(), trace.h_values.size());
    for (std::size_t i = 1; i < trace.times.size(); ++i) {
      EXPECT_GT(trace.times[i], trace.times[i - 1]);
      EXPECT_LE(trace.h_values[i] - trace.h_values[i - 1], 1e-8);
    }
    for (const auto& m : trace.metrics) EXPECT_GT(m.minCoeff(), 0);
  }
}

TEST(Flow, StaysInWindow) {
  const Triangulation tri = mixed();
  const auto init = default_initial_metric(tri);
  const FlowTrace trace = run_flow(tri, init.metric);
  ASSERT_TRUE(trace.converged);
  for (const auto& m : trace.metrics)
    for (int e = 0; e < tri.edge_class_count(); ++e)
      EXPECT_TRUE(bounds::theorem_window(tri.valence(e)).contains(m(e), 1e-9));
  for (int t = 0; t < tri.tet_count(); ++t)
    EXPECT_TRUE(is_hyperideal(pull_back(tri, trace.final_metric, t)));
}

TEST(Flow, FixedPointTakesNoSteps) {
  const Triangulation tri = two_tet();
  const FlowTrace trace = run_flow(tri, constant_metric(std::acosh(fixed_point_cosh())));
  EXPECT_TRUE(trace.converged);
  EXPECT_EQ(trace.steps, 0);
  EXPECT_EQ(trace.times.size(), 1u);
}

TEST(Flow, TimeLimit) {
  const Triangulation tri = two_tet();
  FlowConfig config;
  config.max_time = 1e-6;
  const FlowTrace trace = run_flow(tri, default_initial_metric(tri).metric, config);
  EXPECT_FALSE(trace.converged);
  EXPECT_EQ(trace.status, FlowStatus::TimeLimit);
  EXPECT_NEAR(trace.times.back(), 1e-6, 1e-18);
}

TEST(Flow, StepUnderflow) {
  const Triangulation tri = two_tet();
  FlowConfig config;
  config.local_error_tolerance = 1e-30;
  config.min_step = 1e-3;
  const FlowTrace trace = run_flow(tri, default_initial_metric(tri).metric, config);
  EXPECT_EQ(trace.status, FlowStatus::StepUnderflow);
  EXPECT_FALSE(trace.converged);
  EXPECT_FALSE(trace.times.empty());
}

TEST(Flow, Deterministic) {
  const Triangulation tri = mixed();
  const auto init = default_initial_metric(tri).metric;
  const FlowTrace a = run_flow(tri, init);
  const FlowTrace b = run_flow(tri, init);
  ASSERT_EQ(a.times.size(), b.times.size());
  for (std::size_t i = 0; i < a.times.size(); ++i) {
    EXPECT_EQ(a.times[i], b.times[i]);
    EXPECT_EQ(a.h_values[i], b.h_values[i]);
    EXPECT_TRUE((a.metrics[i].array() == b.metrics[i].array()).all());
  }
}

TEST(Flow, StrideThinsTrace) {
  const Triangulation tri = two_tet();
  FlowConfig config;
  config.trace_stride = 10;
  const FlowTrace thin = run_flow(tri, default_initial_metric(tri).metric, config);
  const FlowTrace full = run_flow(tri, default_initial_metric(tri).metric);
  EXPECT_LT(thin.times.size(), full.times.size());
  EXPECT_EQ(thin.times.back(), full.times.back());
}

TEST(Flow, ConfigValidation) {
  const Triangulation tri = two_tet();
  FlowConfig config;
  config.min_step = 1;
  config.max_step = 0.1;
  EXPECT_THROW(run_flow(tri, constant_metric(1), config), std::invalid_argument);
  config = {};
  config.residual_tolerance = 0;
  EXPECT_THROW(run_flow(tri, constant_metric(1), config), std::invalid_argument);
}

TEST(Flow, AdvanceMatchesTrace) {
  const Triangulation tri = two_tet();
  const FlowTrace trace = run_flow(tri, default_initial_metric(tri).metric);
  const std::size_t i = trace.times.size() / 3;
  const double dt = trace.times[i + 5] - trace.times[i];
  const Eigen::VectorXd there = advance_flow(tri, trace.metrics[i], dt, 200);
  EXPECT_NEAR(there(0), trace.metrics[i + 5](0), 1e-10);
  const Eigen::VectorXd back = advance_flow(tri, there, -dt, 200);
  EXPECT_NEAR(back(0), trace.metrics[i](0), 1e-10);
}

TEST(Rate, ConvergedRunFitsExponential) {
  const Triangulation tri = two_tet();
  const FlowTrace trace = run_flow(tri, default_initial_metric(tri).metric);
  const RateFit fit = convergence_rate(trace);
  EXPECT_LT(fit.slope, 0);
  EXPECT_GT(fit.r_squared, 0.99);
  EXPECT_EQ(fit.slope, trace.estimated_rate);
}

TEST(Rate, FlatAndShortTraces) {
  FlowTrace flat;
  for (int i = 0; i < 20; ++i) {
    flat.times.push_back(i);
    flat.residuals.push_back(0.5);
  }
  EXPECT_NEAR(convergence_rate(flat).slope, 0, 1e-15);
  FlowTrace shorter;
  for (int i = 0; i < 9; ++i) {
    shorter.times.push_back(i);
    shorter.residuals.push_back(std::exp(-i));
  }
  EXPECT_THROW(convergence_rate(shorter), std::invalid_argument);
}

}  // namespace
}  // namespace hyperflow
