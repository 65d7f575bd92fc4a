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

// Scalar bound functions for edge lengths along the flow: the a-priori upper
// bound b_n, the lower-bound machinery (f, eta, xi iteration, mu_n, beta, G,
// psi), the h-functions used to push the upper bound below 2, and the
// embedded table of per-valence constants.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperflow::bounds {

/// cos(2 pi / n).
double cos_2pi_over(int n);

/// b(y) = 16 / (y + 1) - 7.
double b_of_y(double y);

/// Cosh-length upper bound for an edge of valence n >= 9. b_9 = 2.
/// Throws std::out_of_range for n < 9.
double b_n(int n);

/// f_xi(delta); decreasing in delta on [0, 0.13].
double f_xi(double xi, double delta);

/// Quadratic (2+y) d^2 + 2(2+5y-(1+xi)^2) d - 4(1-y)(1+xi)^2 whose positive
/// root is eta_xi(y).
double eta_quadratic(double xi, double y, double delta);

/// Positive solution delta of f_xi(delta) = y. Throws std::domain_error for
/// y outside (0, 1] or xi < 0.
double eta(double xi, double y);

/// Cubic whose root in [0.125, 0.13] is the limit of the xi iteration.
double xi_cubic(double xi);

struct XiIteration {
  double value = 0;
  std::vector<double> iterates;  ///< xi_1 = 0, xi_2, ...
  double cubic_residual = 0;
};

/// Iterates xi_{k+1} = eta_{xi_k}(cos(2 pi / 9)) from 0 until successive
/// iterates differ by at most `tolerance`. Throws std::runtime_error after
/// 10^6 iterations or if the limit leaves [0.125, 0.13].
XiIteration iterate_xi(double tolerance = 1e-15);

/// Cached limit of the xi iteration.
double xi_infinity();

/// eta at (xi_infinity, cos(2 pi / n)); mu_9 is xi_infinity itself.
double mu_n(int n);

/// Piecewise bound: b(y) on [cos(2pi/10), 1], linear in b(y) on
/// [cos(2pi/9), cos(2pi/10)] so that beta(cos(2pi/9)) = 2.
double beta(double y);

double G(double delta, double eta2, double eta3, double eta5, double eta6,
         double beta2, double beta3, double beta5, double beta6);

/// G with eta_i = eta_xi(y_i), beta_i = beta(y_i). Throws std::domain_error
/// unless xi, delta in [0, 0.13] and every y_i in [cos(2pi/9), 1).
double psi(double xi, double delta, double y2, double y3, double y5, double y6);

/// Shorthand for the tetrahedron formula on raw slot values.
double phi6(double x1, double x2, double x3, double x4, double x5, double x6);

/// max of phi(x,d,d,1,2,2), phi(x,d,2,1,2,d), phi(x,c,c,1+delta,2,2),
/// phi(x,c,2,1+delta,2,c).
double phi_d_delta_c(double x, double d, double delta, double c);

/// Fixed constants consumed by h3 and h4.
struct UpperBoundConstants {
  static constexpr double b = 1.98;
  static constexpr double d18 = 1.9454;
  static constexpr double delta17 = 0.0314;
  static constexpr double delta9 = 0.125;
};

double h1(double x, double gamma, double b);
double h2(double x, double d, double delta);
double h3(double x, double gamma);
double h4(double x, double gamma, double d);

/// Dispatch on kind 1..4 with the arguments of the matching h. Throws
/// std::invalid_argument for a wrong kind or argument count.
double h_function(int kind, std::span<const double> args);

struct Table1Row {
  int n_min = 0;
  int n_max = 0;  ///< 0 for the open-ended last range
  double gamma = 0;
  double delta = 0;
  double d = 0;
  double q = 0;
  double p = 0;

  bool contains(int n) const { return n >= n_min && (n_max == 0 || n <= n_max); }
  std::string range_label() const;
};

/// The embedded table text, one row per line.
std::string_view table1_text();
/// FNV-1a 64 of table1_text().
unsigned long long table1_checksum();
inline constexpr unsigned long long kTable1Checksum = 7678933859495086331ull;

/// Parsed table rows, largest valences first.
std::span<const Table1Row> table1();

/// Row covering valence n, or nullptr.
const Table1Row* table1_row_for(int n);

struct ValenceBounds {
  int n = 0;
  double b = 0;
  double mu = 0;
};

struct BoundsTable {
  double xi_infinity = 0;
  std::vector<ValenceBounds> valences;  ///< n = 9 .. n_max
  std::vector<Table1Row> table1;
};

/// Throws std::out_of_range for n_max < 9.
BoundsTable build_bounds_table(int n_max);

/// Length window [arccosh(1 + mu_v), arccosh(b_v)] for valence v >= 9.
struct LengthWindow {
  double lower = 0;
  double upper = 0;
  bool contains(double l, double slack = 0) const {
    return l >= lower - slack && l <= upper + slack;
  }
};
LengthWindow theorem_window(int valence);

}  // namespace hyperflow::bounds
