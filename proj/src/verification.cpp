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

#include "hyperflow/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "hyperflow/tetra_geometry.hpp"
#include "json.hpp"

namespace hyperflow::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kDiffStep = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kOpenRangeCap = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double axis(long long i, int n, double lo, double hi) {
  return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
}

// Central difference of g at v, shifted to one side near the box edges.
double derivative(const std::function<double(double)>& g, double v, double lo,
                  double hi) {
  const double a = std::min(v + kDiffStep, hi);
  const double b = std::max(v - kDiffStep, lo);
  return (g(a) - g(b)) / (a - b);
}

// Minimum of f(i) over [0, count), contiguous chunks per thread.
double parallel_min(long long count, int jobs, const std::function<double(long long)>& f) {
  jobs = std::clamp(jobs, 1, 256);
  std::vector<double> partial(jobs, kInf);
  auto work = [&](int j) {
    const long long begin = count * j / jobs;
    const long long end = count * (j + 1) / jobs;
    double m = kInf;
    for (long long i = begin; i < end; ++i) m = std::min(m, f(i));
    partial[j] = m;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  return *std::min_element(partial.begin(), partial.end());
}

Check make_check(std::string name, std::string box, int resolution, double margin,
                 Clock::time_point start, double slack = kGridSlack) {
  Check c;
  c.name = std::move(name);
  c.box = std::move(box);
  c.resolution = resolution;
  c.worst_margin = margin;
  c.passed = margin >= -slack;
  c.seconds = seconds_since(start);
  return c;
}

double j_function(int k, double x, double a, double c, double d) {
  switch (k) {
    case 1: return phi6(x, a, d, c, 2, 2);
    case 2: return phi6(x, a, 2, c, 2, d);
    case 3: return phi6(x, a, x, c, 2, d);
    case 4: return phi6(x, a, d, c, 2, x);
    case 5: return phi6(x, a, x, x, 2, 2);
    case 6: return phi6(x, a, 2, x, 2, x);
    case 7: return phi6(x, x, x, c, 2, 2);
    case 8: return phi6(x, x, 2, c, 2, x);
    case 9: return phi6(x, x, x, x, 2, 2);
    default: return phi6(x, x, 2, x, 2, x);
  }
}

std::string fmt_margin_name(const Table1Row& row, const char* what) {
  return "table1 n=" + row.range_label() + " " + what;
}

}  // namespace

bool VerificationReport::passed() const { return failures() == 0; }

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) {
    return !c.informational && !c.passed;
  }));
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  j["failures"] = report.failures();
  j["seconds"] = report.seconds;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["box"] = c.box;
    e["resolution"] = c.resolution;
    e["worst_margin"] = c.worst_margin;
    e["passed"] = c.passed;
    e["informational"] = c.informational;
    e["seconds"] = c.seconds;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(indent);
}

VerificationReport verify_table1(std::span<const Table1Row> rows) {
  const auto start = Clock::now();
  VerificationReport report;
  report.suite = "table1";
  const double c9 = cos_2pi_over(9);
  for (const Table1Row& row : rows) {
    const int hi = row.n_max == 0 ? kOpenRangeCap : row.n_max;
    auto t = Clock::now();
    double margin = kInf;
    for (int n = row.n_min; n <= hi; ++n) margin = std::min(margin, row.gamma - b_n(n));
    report.checks.push_back(
        make_check(fmt_margin_name(row, "(a) gamma >= b_n"), "n in range", 0, margin, t, 0));

    t = Clock::now();
    margin = kInf;
    for (int n = row.n_min; n <= hi; ++n) margin = std::min(margin, mu_n(n) - row.delta);
    report.checks.push_back(
        make_check(fmt_margin_name(row, "(b) delta <= mu_n"), "n in range", 0, margin, t, 0));

    t = Clock::now();
    margin = h1(row.d, row.gamma, UpperBoundConstants::b) - kTwoPi;
    report.checks.push_back(make_check(fmt_margin_name(row, "(c) h1(d,gamma,1.98) >= 2pi"),
                                       "point", 0, margin, t, 0));

    t = Clock::now();
    margin = h3(row.q, row.gamma) - kTwoPi;
    report.checks.push_back(
        make_check(fmt_margin_name(row, "(d) h3(q,gamma) >= 2pi"), "point", 0, margin, t, 0));

    t = Clock::now();
    const double h4_margin = h4(row.p, row.gamma, row.d) - kTwoPi;
    if (row.p == 2) {
      report.checks.push_back(make_check(
          fmt_margin_name(row, "(e) h4(p,gamma,d) >= 2pi or p = 2"), "point", 0, 0, t, 0));
      Check info = make_check(fmt_margin_name(row, "(e) info h4 at p = 2"), "point", 0,
                              h4_margin, t, 0);
      info.informational = true;
      report.checks.push_back(info);
    } else {
      report.checks.push_back(make_check(
          fmt_margin_name(row, "(e) h4(p,gamma,d) >= 2pi or p = 2"), "point", 0, h4_margin, t, 0));
    }

    t = Clock::now();
    const double q = row.q, p = row.p, e4 = 1 + row.delta;
    margin = c9 - std::max(phi6(2, q, q, e4, p, p), phi6(2, q, p, e4, p, q));
    report.checks.push_back(make_check(fmt_margin_name(row, "(f) final phi < cos(2pi/9)"),
                                       "point", 0, margin, t, 0));
  }
  report.seconds = seconds_since(start);
  return report;
}

VerificationReport grid_monotonicity_suite(int resolution, int jobs) {
  if (resolution < 8) throw std::invalid_argument("resolution must be >= 8");
  const auto start = Clock::now();
  const int r = resolution;
  VerificationReport report;
  report.suite = "monotonicity";

  // Ten one-variable functions, decreasing in x for every (a, c, d).
  for (int k = 1; k <= 10; ++k) {
    const auto t = Clock::now();
    const long long count = 1LL * r * r * r * r;
    const double margin = parallel_min(count, jobs, [&](long long i) {
      const double x = axis(i % r, r, 1, 2);
      const double a = axis(i / r % r, r, 1, 2);
      const double c = axis(i / (r * r) % r, r, 1, 2);
      const double d = axis(i / (1LL * r * r * r), r, 1, 2);
      return -derivative([&](double v) { return j_function(k, v, a, c, d); }, x, 1, 2);
    });
    report.checks.push_back(make_check("j" + std::to_string(k) + " decreasing in x",
                                       "x,a,c,d in [1,2]", r, margin, t));
  }

  // phi non-decreasing in slots 2, 3, 5, 6.
  for (int slot : {2, 3, 5, 6}) {
    const auto t = Clock::now();
    long long count = 1;
    for (int i = 0; i < 6; ++i) count *= r;
    const double margin = parallel_min(count, jobs, [&](long long i) {
      Vector6<double> x;
      for (int s = 0; s < 6; ++s) {
        x(s) = axis(i % r, r, 1, 2);
        i /= r;
      }
      const double v = x(slot - 1);
      return derivative(
          [&](double u) {
            Vector6<double> y = x;
            y(slot - 1) = u;
            return phi_formula(y);
          },
          v, 1, 2);
    });
    report.checks.push_back(make_check("dphi/dx" + std::to_string(slot) + " >= 0",
                                       "x in [1,2]^6", r, margin, t));
  }

  {
    const auto t = Clock::now();
    const double margin = parallel_min(1LL * r * r, jobs, [&](long long i) {
      const double xi = axis(i % r, r, 0, 0.13);
      const double delta = axis(i / r, r, 0, 0.13);
      return -derivative([&](double v) { return f_xi(xi, v); }, delta, 0, 0.13);
    });
    report.checks.push_back(
        make_check("f_xi decreasing in delta", "xi,delta in [0,0.13]", r, margin, t));
  }

  {
    const auto t = Clock::now();
    const double margin = parallel_min(1LL * r * r, jobs, [&](long long i) {
      const double xi = axis(i % r, r, 0, 0.13);
      const double y = axis(i / r, r, 0.2, 0.99);
      return -derivative([&](double v) { return eta(xi, v); }, y, 0.2, 0.99);
    });
    report.checks.push_back(make_check("eta decreasing in y",
                                       "xi in [0,0.13], y in [0.2,0.99]", r, margin, t));
  }
  {
    const auto t = Clock::now();
    const double margin = parallel_min(1LL * r * r, jobs, [&](long long i) {
      const double xi = axis(i % r, r, 0, 0.13);
      const double y = axis(i / r, r, 0.2, 0.99);
      return derivative([&](double v) { return eta(v, y); }, xi, 0, 0.13);
    });
    report.checks.push_back(make_check("eta increasing in xi",
                                       "xi in [0,0.13], y in [0.2,0.99]", r, margin, t));
  }

  const double c9 = cos_2pi_over(9);
  const double c10 = cos_2pi_over(10);

  // psi bounded below by its all-nine value, over admissible valences.
  {
    const auto t = Clock::now();
    constexpr int kNMin = 9, kNMax = 40, kCount = kNMax - kNMin + 1;
    const std::vector<double> xis = {0, 0.065, xi_infinity(), 0.13};
    std::vector<double> etas, betas;
    for (double xi : xis)
      for (int n = kNMin; n <= kNMax; ++n) {
        etas.push_back(eta(xi, cos_2pi_over(n)));
        betas.push_back(beta(cos_2pi_over(n)));
      }
    const long long per = 1LL * kCount * kCount * kCount * kCount;
    const long long count = static_cast<long long>(xis.size()) * r * per;
    const double margin = parallel_min(count, jobs, [&](long long i) {
      long long rest = i % per;
      const long long outer = i / per;
      const int xi_index = static_cast<int>(outer / r);
      const double delta = axis(outer % r, r, 0, 0.13);
      int n[4];
      for (int s = 0; s < 4; ++s) {
        n[s] = static_cast<int>(rest % kCount);
        rest /= kCount;
      }
      const int base = xi_index * kCount;
      const double floor = f_xi(etas[base], delta);
      return G(delta, etas[base + n[0]], etas[base + n[1]], etas[base + n[2]],
               etas[base + n[3]], betas[base + n[0]], betas[base + n[1]],
               betas[base + n[2]], betas[base + n[3]]) -
             floor;
    });
    report.checks.push_back(make_check(
        "psi >= f_eta(9)", "xi in {0,0.065,xi_inf,0.13}, delta in [0,0.13], n_i in 9..40",
        r, margin, t));
  }

  // Sign of dpsi/dy_j on the two hypothesis boxes. Slots are (y2, y3, y5, y6)
  // with partners 2<->6 and 3<->5.
  const std::vector<double> xis = {0, 0.065, 0.13};
  const double y_top = 0.999;
  auto psi_at = [](double xi, double delta, const std::array<double, 4>& y) {
    return psi(xi, delta, y[0], y[1], y[2], y[3]);
  };
  {
    const auto t = Clock::now();
    const long long per = 1LL * r * r * r * r;
    const long long count = static_cast<long long>(xis.size()) * r * per * 4;
    const double margin = parallel_min(count, jobs, [&](long long i) {
      const int slot = static_cast<int>(i % 4);
      long long rest = i / 4;
      std::array<double, 4> y;
      for (int s = 0; s < 4; ++s) {
        y[s] = axis(rest % r, r, c9, y_top);
        rest /= r;
      }
      const double delta = axis(rest % r, r, 0, 0.13);
      const double xi = xis[rest / r];
      const int partner = 3 - slot;
      const double lo = std::max(y[partner], c10);
      if (y[slot] < lo) return kInf;
      return derivative(
          [&](double v) {
            auto z = y;
            z[slot] = v;
            return psi_at(xi, delta, z);
          },
          y[slot], lo, 1 - 1e-9);
    });
    report.checks.push_back(make_check("dpsi/dy_j >= 0 where y_j >= max(y_j', cos(2pi/10))",
                                       "xi in {0,0.065,0.13}, delta in [0,0.13], y in "
                                       "[cos(2pi/9),0.999]",
                                       r, margin, t));
  }
  {
    const auto t = Clock::now();
    const long long per = 1LL * r * r * r * r;
    const long long count = static_cast<long long>(xis.size()) * r * per * 2;
    const double margin = parallel_min(count, jobs, [&](long long i) {
      const int pair = static_cast<int>(i % 2);
      long long rest = i / 2;
      const int a = pair, b = 3 - pair;
      std::array<double, 4> y;
      for (int s = 0; s < 4; ++s) {
        const bool bounded = s == a || s == b;
        y[s] = axis(rest % r, r, c9, bounded ? c10 : y_top);
        rest /= r;
      }
      const double delta = axis(rest % r, r, 0, 0.13);
      const double xi = xis[rest / r];
      double m = kInf;
      for (int slot : {a, b})
        m = std::min(m, derivative(
                            [&](double v) {
                              auto z = y;
                              z[slot] = v;
                              return psi_at(xi, delta, z);
                            },
                            y[slot], c9, c10));
      return m;
    });
    report.checks.push_back(make_check("dpsi/dy_j, dpsi/dy_j' >= 0 where y_j, y_j' <= cos(2pi/10)",
                                       "xi in {0,0.065,0.13}, delta in [0,0.13], y_j,y_j' in "
                                       "[cos(2pi/9),cos(2pi/10)]",
                                       r, margin, t));
  }

  report.seconds = seconds_since(start);
  return report;
}

VerificationReport verify_constants() {
  const auto start = Clock::now();
  VerificationReport report;
  report.suite = "constants";
  const double c9 = cos_2pi_over(9);

  struct HPoint {
    const char* name;
    int kind;
    std::vector<double> args;
  };
  const std::vector<HPoint> bootstrap = {
      {"h1(1.9526,1.2488,2) >= 2pi", 1, {1.9526, 1.2488, 2}},
      {"h2(1.9810,1.9526,0.0314) >= 2pi", 2, {1.9810, 1.9526, 0.0314}},
      {"h1(1.9458,1.2488,1.9810) >= 2pi", 1, {1.9458, 1.2488, 1.9810}},
      {"h2(1.9800,1.9458,0.0314) >= 2pi", 2, {1.9800, 1.9458, 0.0314}},
  };
  for (const HPoint& h : bootstrap) {
    const auto t = Clock::now();
    report.checks.push_back(
        make_check(h.name, "point", 0, h_function(h.kind, h.args) - kTwoPi, t, 0));
  }

  struct Neighbour {
    const char* name;
    double x2, other, x4;
  };
  const std::vector<Neighbour> neighbours = {
      {"phi(2,1.7,2,1,2,2) < cos(2pi/9)", 1.7, 2, 1},
      {"phi(2,1.845,1.98,1.027,2,2) < cos(2pi/9)", 1.845, 1.98, 1.027},
      {"phi(2,1.845,1.932,1.01,2,2) < cos(2pi/9)", 1.845, 1.932, 1.01},
      {"phi(2,1.845,1.923,1,2,2) < cos(2pi/9)", 1.845, 1.923, 1},
  };
  for (const Neighbour& n : neighbours) {
    const auto t = Clock::now();
    const double value = std::max(phi6(2, n.x2, n.other, n.x4, 2, 2),
                                  phi6(2, n.x2, 2, n.x4, 2, n.other));
    report.checks.push_back(make_check(n.name, "point", 0, c9 - value, t, 0));
  }

  {
    const auto t = Clock::now();
    double worst = kInf;
    for (int n = 10; n <= 1000; ++n)
      worst = std::min(worst, 1e-12 - std::abs(phi6(b_n(n), 2, 2, 1, 2, 2) - cos_2pi_over(n)));
    report.checks.push_back(
        make_check("phi(b_n,2,2,1,2,2) = cos(2pi/n)", "n in 10..1000", 0, worst, t, 0));
  }

  {
    const auto t = Clock::now();
    const XiIteration it = iterate_xi();
    report.checks.push_back(make_check("xi_inf in [0.125, 0.13]", "point", 0,
                                       std::min(it.value - 0.125, 0.13 - it.value), t, 0));
    double step = kInf;
    for (std::size_t k = 1; k < it.iterates.size(); ++k)
      step = std::min(step, it.iterates[k] - it.iterates[k - 1]);
    report.checks.push_back(make_check("xi iterates non-decreasing", "all iterates", 0, step,
                                       t, 0));
    report.checks.push_back(make_check("xi_inf solves the cubic", "point", 0,
                                       1e-14 - std::abs(it.cubic_residual), t, 0));
  }

  {
    const auto t = Clock::now();
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = kInf;
    for (int s = 0; s < 1000; ++s) {
      const double delta = 0.13 * (1 - unit(rng));
      Vector6<double> x;
      x(0) = 1 + delta;
      for (int i = 1; i < 6; ++i) x(i) = 2 - unit(rng);
      worst = std::min(worst, phi_formula(x) - f_xi(0, delta));
    }
    report.checks.push_back(make_check("phi(1+delta, x2..x6) >= f_0(delta)",
                                       "delta in (0,0.13], x_i in (1,2], 1000 samples", 0,
                                       worst, t));
  }

  report.seconds = seconds_since(start);
  return report;
}

}  // namespace hyperflow::bounds
