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

#include "hyperflow/functional.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace hyperflow {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(2k) for k = 1..kZetaTerms. zeta(2) is exact; the rest are summed
// directly with an Euler-Maclaurin tail.
constexpr int kZetaTerms = 40;

const std::array<double, kZetaTerms + 1>& zeta_even() {
  static const std::array<double, kZetaTerms + 1> table = [] {
    std::array<double, kZetaTerms + 1> z{};
    z[1] = kPi * kPi / 6;
    constexpr int kCut = 1000;
    for (int k = 2; k <= kZetaTerms; ++k) {
      const double s = 2.0 * k;
      double tail = std::pow(kCut, 1 - s) / (s - 1) - 0.5 * std::pow(kCut, -s) +
                    s / 12 * std::pow(kCut, -s - 1);
      double sum = 0;
      for (int m = kCut - 1; m >= 2; --m) sum += std::pow(m, -s);
      z[k] = 1 + sum + tail;
    }
    return z;
  }();
  return table;
}

// Cl2(x) for |x| <= pi.
double clausen2(double x) {
  if (x == 0) return 0;
  const auto& z = zeta_even();
  const double r = x / (2 * kPi);
  const double r2 = r * r;
  double power = r2;
  double series = 0;
  for (int k = 1; k <= kZetaTerms; ++k) {
    const double term = z[k] / (k * (2.0 * k + 1)) * power;
    series += term;
    if (term < 1e-20) break;
    power *= r2;
  }
  return x - x * std::log(std::abs(x)) + x * series;
}

struct GaussLegendre15 {
  std::array<double, 15> nodes{};
  std::array<double, 15> weights{};

  GaussLegendre15() {
    constexpr int n = 15;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2 / ((1 - x * x) * dp * dp);
    }
  }

  double apply(const std::function<double(double)>& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0;
    for (int i = 0; i < 15; ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return sum * half;
  }
};

const GaussLegendre15& gauss_legendre() {
  static const GaussLegendre15 rule;
  return rule;
}

class Integrator {
 public:
  Integrator(const std::function<double(double)>& f, double a, double b,
             double tolerance, int max_panels)
      : f_(f), density_(tolerance / (b - a)), max_panels_(max_panels) {}

  void run(double a, double b, double coarse, int depth) {
    if (++result_.panels > max_panels_ || depth > 60)
      throw QuadratureError("quadrature: subdivision budget exhausted after " +
                            std::to_string(result_.panels) + " panels");
    const double mid = 0.5 * (a + b);
    const double left = gauss_legendre().apply(f_, a, mid);
    const double right = gauss_legendre().apply(f_, mid, b);
    const double diff = std::abs(coarse - (left + right));
    if (diff <= density_ * (b - a)) {
      result_.value += left + right;
      result_.error_estimate += diff;
      return;
    }
    run(a, mid, left, depth + 1);
    run(mid, b, right, depth + 1);
  }

  QuadratureResult result_;

 private:
  const std::function<double(double)>& f_;
  double density_;
  int max_panels_;
};

}  // namespace

double lobachevsky(double theta) {
  if (!std::isfinite(theta)) return std::nan("");
  const double reduced = std::remainder(theta, kPi);
  return 0.5 * clausen2(2 * reduced);
}

double covolume_at_origin() { return 16 * lobachevsky(kPi / 4); }

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tolerance,
                                    int max_panels) {
  if (!(tolerance > 0)) throw std::invalid_argument("quadrature: tolerance must be > 0");
  if (a == b) return {};
  Integrator integrator(f, a, b, tolerance, max_panels);
  integrator.run(a, b, gauss_legendre().apply(f, a, b), 0);
  return integrator.result_;
}

QuadratureResult mu_line_integral(const EdgeLengths6& from, const EdgeLengths6& to,
                                  double tolerance) {
  const EdgeLengths6 step = to - from;
  if (!step.allFinite() || !from.allFinite())
    throw std::invalid_argument("mu_line_integral: non-finite endpoint");
  if (step.isZero(0)) return {};
  const std::function<double(double)> integrand = [&](double t) {
    const EdgeLengths6 l = from + t * step;
    return dihedral_angles(l).alpha.dot(step);
  };
  return integrate_adaptive(integrand, 0, 1, tolerance);
}

CovolumeResult covolume_tet(const EdgeLengths6& lengths, double tolerance) {
  const QuadratureResult q =
      mu_line_integral(EdgeLengths6::Zero(), lengths, tolerance);
  return {covolume_at_origin() + q.value, q.error_estimate};
}

double total_H(const Triangulation& tri, const Eigen::VectorXd& class_lengths,
               double tolerance) {
  require_matching_size(tri, class_lengths.size());
  double cov = 0;
  for (int t = 0; t < tri.tet_count(); ++t)
    cov += covolume_tet(pull_back(tri, class_lengths, t), tolerance).value;
  return cov - 2 * kPi * class_lengths.sum();
}

double total_H(const Triangulation& tri, const Metric& metric, double tolerance) {
  return total_H(tri, metric.lengths(), tolerance);
}

double volume_tet(const EdgeLengths6& lengths, double tolerance) {
  if (!is_hyperideal(lengths))
    throw std::domain_error("volume_tet: lengths are not hyper-ideal");
  const double cov = covolume_tet(lengths, tolerance).value;
  return 0.5 * (cov - dihedral_angles(lengths).alpha.dot(lengths));
}

}  // namespace hyperflow
