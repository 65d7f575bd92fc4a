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

#include "hyperflow/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hyperflow/tetra_geometry.hpp"

namespace hyperflow::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoxMax = 0.13;

// n_min n_max(- if open) gamma delta d q p
constexpr std::string_view kTable1 =
    "40 - 1.05 0 1.9316 1.9194 1.9658\n"
    "30 39 1.09 0.0057 1.9344 1.9222 1.9687\n"
    "25 29 1.128 0.0105 1.9370 1.9248 1.9715\n"
    "22 24 1.166 0.0154 1.9397 1.9274 1.9742\n"
    "20 21 1.201 0.0202 1.9421 1.9298 1.9767\n"
    "19 19 1.2228 0.0249 1.9436 1.9313 1.9782\n"
    "18 18 1.2488 0.0278 1.9454 1.9330 1.9801\n"
    "17 17 1.2796 0.0314 1.9475 1.9351 1.9823\n"
    "16 16 1.3166 0.0356 1.9500 1.9376 1.9848\n"
    "15 15 1.3615 0.0408 1.9531 1.9405 1.9880\n"
    "14 14 1.4168 0.0472 1.9568 1.9442 1.9918\n"
    "13 13 1.4861 0.0553 1.9614 1.9487 1.9965\n"
    "12 12 1.5744 0.0657 1.9672 1.9544 2\n"
    "11 11 1.6898 0.0795 1.9746 1.9617 2\n"
    "9 10 2 0.0983 1.9941 1.9808 2\n";

double acos_clamped(double v) { return std::acos(std::clamp(v, -1.0, 1.0)); }

void require_in(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi))
    throw std::domain_error(std::string(what) + " = " + std::to_string(v) +
                            " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
}

void require_valence(int n) {
  if (n < 9) throw std::out_of_range("valence must be >= 9, got " + std::to_string(n));
}

std::vector<Table1Row> parse_table1() {
  std::vector<Table1Row> rows;
  std::istringstream in{std::string(kTable1)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    Table1Row row;
    std::string hi;
    fields >> row.n_min >> hi >> row.gamma >> row.delta >> row.d >> row.q >> row.p;
    if (!fields) throw std::logic_error("malformed embedded table line: " + line);
    row.n_max = hi == "-" ? 0 : std::stoi(hi);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

double cos_2pi_over(int n) { return std::cos(2 * kPi / n); }

double b_of_y(double y) { return 16 / (y + 1) - 7; }

double b_n(int n) {
  require_valence(n);
  if (n == 9) return 2.0;
  return 16 / (1 + cos_2pi_over(n)) - 7;
}

double f_xi(double xi, double delta) {
  const double s = (1 + xi) * (1 + xi);
  return (-2 * delta * delta + 2 * delta * (s - 2) + 4 * s) /
         (delta * delta + 10 * delta + 4 * s);
}

double eta_quadratic(double xi, double y, double delta) {
  const double s = (1 + xi) * (1 + xi);
  return (2 + y) * delta * delta + 2 * (2 + 5 * y - s) * delta - 4 * (1 - y) * s;
}

double eta(double xi, double y) {
  if (!(y > 0 && y <= 1)) throw std::domain_error("eta: y must lie in (0, 1]");
  if (!(xi >= 0)) throw std::domain_error("eta: xi must be >= 0");
  const double s = (1 + xi) * (1 + xi);
  const double lin = 2 + 5 * y - s;
  return (-lin + std::sqrt(lin * lin + 4 * (2 + y) * (1 - y) * s)) / (2 + y);
}

double xi_cubic(double xi) {
  const double c = cos_2pi_over(9);
  return -2 * xi * xi * xi + (5 * c - 6) * xi * xi + (18 * c - 6) * xi + 4 * c - 4;
}

XiIteration iterate_xi(double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("iterate_xi: tolerance must be > 0");
  const double c9 = cos_2pi_over(9);
  XiIteration out;
  double xi = 0;
  out.iterates.push_back(xi);
  for (int k = 0; k < 1000000; ++k) {
    const double next = eta(xi, c9);
    out.iterates.push_back(next);
    if (std::abs(next - xi) <= tolerance) {
      out.value = next;
      out.cubic_residual = xi_cubic(next);
      if (!(next >= 0.125 && next <= 0.13))
        throw std::runtime_error("xi iteration left [0.125, 0.13]");
      return out;
    }
    xi = next;
  }
  throw std::runtime_error("xi iteration did not converge");
}

double xi_infinity() {
  static const double value = iterate_xi().value;
  return value;
}

double mu_n(int n) {
  require_valence(n);
  if (n == 9) return xi_infinity();
  return eta(xi_infinity(), cos_2pi_over(n));
}

double beta(double y) {
  const double c10 = cos_2pi_over(10);
  if (y >= c10) return b_of_y(y);
  const double b9 = b_of_y(cos_2pi_over(9));
  const double b10 = b_of_y(c10);
  return ((2 - b10) * b_of_y(y) - (2 - b9) * b10) / (b9 - b10);
}

double G(double delta, double eta2, double eta3, double eta5, double eta6,
         double beta2, double beta3, double beta5, double beta6) {
  const double w26 = 2 + eta2 + eta6;
  const double w35 = 2 + eta3 + eta5;
  const double num =
      1 + (delta * ((1 + eta2) * (1 + eta5) + (1 + eta3) * (1 + eta6)) -
           2 * delta * (delta + 2)) /
              (w26 * w35);
  const double left =
      std::sqrt(1 + (delta * delta + 2 * (1 + beta2 * beta6) * delta) / (w26 * w26));
  const double right =
      std::sqrt(1 + (delta * delta + 2 * (1 + beta3 * beta5) * delta) / (w35 * w35));
  return num / (left * right);
}

double psi(double xi, double delta, double y2, double y3, double y5, double y6) {
  require_in(xi, 0, kBoxMax, "xi");
  require_in(delta, 0, kBoxMax, "delta");
  const double c9 = cos_2pi_over(9);
  for (double y : {y2, y3, y5, y6})
    if (!(y >= c9 && y < 1)) throw std::domain_error("psi: y outside [cos(2pi/9), 1)");
  return G(delta, eta(xi, y2), eta(xi, y3), eta(xi, y5), eta(xi, y6), beta(y2),
           beta(y3), beta(y5), beta(y6));
}

double phi6(double x1, double x2, double x3, double x4, double x5, double x6) {
  return phi_formula(x1, x2, x3, x4, x5, x6);
}

double phi_d_delta_c(double x, double d, double delta, double c) {
  return std::max({phi6(x, d, d, 1, 2, 2), phi6(x, d, 2, 1, 2, d),
                   phi6(x, c, c, 1 + delta, 2, 2), phi6(x, c, 2, 1 + delta, 2, c)});
}

double h1(double x, double gamma, double b) {
  require_in(x, 1, 2, "x");
  require_in(gamma, 1, 2, "gamma");
  require_in(b, 1, 2, "b");
  return acos_clamped(std::max(phi6(x, gamma, x, x, 2, 2), phi6(x, gamma, 2, x, 2, x))) +
         acos_clamped(std::max(phi6(x, gamma, x, 1, 2, 2), phi6(x, gamma, 2, 1, 2, x))) +
         7 * acos_clamped(std::max(phi6(x, b, b, 1, 2, 2), phi6(x, b, 2, 1, 2, b)));
}

double h2(double x, double d, double delta) {
  require_in(x, 1, 2, "x");
  require_in(d, 1, 2, "d");
  require_in(delta, 0, kBoxMax, "delta");
  return acos_clamped(std::max(phi6(x, x, x, x, 2, 2), phi6(x, x, 2, x, 2, x))) +
         8 * acos_clamped(phi_d_delta_c(x, d, delta, x));
}

double h3(double x, double gamma) {
  using C = UpperBoundConstants;
  require_in(x, 1, 2, "x");
  require_in(gamma, 1, 2, "gamma");
  return acos_clamped(std::max(phi6(x, gamma, x, x, 2, 2), phi6(x, gamma, 2, x, 2, x))) +
         acos_clamped(std::max(phi6(x, gamma, x, 1, 2, 2), phi6(x, gamma, 2, 1, 2, x))) +
         7 * acos_clamped(phi_d_delta_c(x, C::d18, C::delta17, C::b));
}

double h4(double x, double gamma, double d) {
  using C = UpperBoundConstants;
  require_in(x, 1, 2, "x");
  require_in(gamma, 1, 2, "gamma");
  require_in(d, 1, 2, "d");
  const double e4 = 1 + C::delta9;
  return acos_clamped(std::max(phi6(x, gamma, d, e4, 2, x), phi6(x, gamma, x, e4, 2, d))) +
         acos_clamped(std::max(phi6(x, gamma, d, 1, 2, 2), phi6(x, gamma, 2, 1, 2, d))) +
         7 * acos_clamped(phi_d_delta_c(x, C::d18, C::delta17, C::b));
}

double h_function(int kind, std::span<const double> args) {
  const std::size_t want = kind == 3 ? 2 : 3;
  if (kind < 1 || kind > 4) throw std::invalid_argument("h kind must be 1..4");
  if (args.size() != want)
    throw std::invalid_argument("h" + std::to_string(kind) + " takes " +
                                std::to_string(want) + " arguments");
  switch (kind) {
    case 1: return h1(args[0], args[1], args[2]);
    case 2: return h2(args[0], args[1], args[2]);
    case 3: return h3(args[0], args[1]);
    default: return h4(args[0], args[1], args[2]);
  }
}

std::string Table1Row::range_label() const {
  if (n_max == 0) return std::to_string(n_min) + "+";
  if (n_max == n_min) return std::to_string(n_min);
  return std::to_string(n_min) + "-" + std::to_string(n_max);
}

std::string_view table1_text() { return kTable1; }

unsigned long long table1_checksum() {
  unsigned long long hash = 14695981039346656037ull;
  for (unsigned char c : kTable1) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::span<const Table1Row> table1() {
  static const std::vector<Table1Row> rows = [] {
    if (table1_checksum() != kTable1Checksum)
      throw std::logic_error("embedded table checksum mismatch");
    return parse_table1();
  }();
  return rows;
}

const Table1Row* table1_row_for(int n) {
  for (const Table1Row& row : table1())
    if (row.contains(n)) return &row;
  return nullptr;
}

BoundsTable build_bounds_table(int n_max) {
  require_valence(n_max);
  BoundsTable out;
  out.xi_infinity = xi_infinity();
  for (int n = 9; n <= n_max; ++n) out.valences.push_back({n, b_n(n), mu_n(n)});
  const auto rows = table1();
  out.table1.assign(rows.begin(), rows.end());
  return out;
}

LengthWindow theorem_window(int valence) {
  require_valence(valence);
  return {std::acosh(1 + mu_n(valence)), std::acosh(b_n(valence))};
}

}  // namespace hyperflow::bounds
