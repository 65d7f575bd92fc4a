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

#include <cmath>
#include <fstream>
#include <ostream>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "hyperflow/bounds.hpp"
#include "hyperflow/cli.hpp"
#include "hyperflow/curvature_flow.hpp"
#include "hyperflow/functional.hpp"
#include "hyperflow/tetra_geometry.hpp"
#include "hyperflow/verification.hpp"
#include "json.hpp"

namespace hyperflow::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kMinValence = 9;
constexpr double kWindowSlack = 1e-9;

ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json numbers(const Eigen::VectorXd& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number(v(i)));
  return a;
}

void print(std::ostream& os, std::string_view text) { os << text; }

void write_trace_csv(std::ostream& os, const FlowTrace& trace) {
  std::string header = "time,residual,H";
  const Eigen::Index classes = trace.metrics.empty() ? 0 : trace.metrics.front().size();
  for (Eigen::Index c = 0; c < classes; ++c) header += fmt::format(",l{}", c);
  os << header << '\n';
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    std::string row = fmt::format("{},{},{}", trace.times[i],
                                  trace.residuals[i], trace.h_values[i]);
    for (Eigen::Index c = 0; c < classes; ++c)
      row += fmt::format(",{}", trace.metrics[i](c));
    os << row << '\n';
  }
}

void warn_low_valence(const Triangulation& tri, std::ostream& os) {
  for (int e = 0; e < tri.edge_class_count(); ++e)
    if (tri.valence(e) < kMinValence)
      print(os, fmt::format("warning: class {} has valence {}: hypothesis v(e) >= 9 violated\n",
                            e, tri.valence(e)));
}

}  // namespace

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  TriangulationFile file;
  try {
    file = load_triangulation(path);
  } catch (const InputError& e) {
    print(err, fmt::format("error: {}\n", e.what()));
    return 2;
  }
  const Triangulation& tri = file.triangulation;
  print(out, fmt::format("format: {}\ntetrahedra: {}\n", file.format, tri.tet_count()));
  if (tri.edge_class_count() == 1) {
    print(out, fmt::format("1 class, valence {}\n", tri.valence(0)));
  } else {
    print(out, fmt::format("{} classes, valences {}\n", tri.edge_class_count(),
                           fmt::join(tri.valences(), " ")));
  }
  warn_low_valence(tri, out);
  return 0;
}

int cmd_flow(const std::string& path, const FlowOptions& options, std::ostream& out,
             std::ostream& err) {
  if (options.output != "json" && options.output != "csv") {
    print(err, fmt::format("error: unknown output format \"{}\"\n", options.output));
    return 2;
  }
  TriangulationFile file;
  FlowConfig config;
  Eigen::VectorXd l0;
  try {
    file = load_triangulation(path);
    config.residual_tolerance = options.tol;
    config.max_time = options.t_max;
    config.validate();
    l0 = default_initial_metric(file.triangulation).metric.lengths();
    auto overrides = file.initial_metric;
    if (!options.init_path.empty())
      for (const auto& [cls, length] : load_metric_overrides(options.init_path))
        overrides[cls] = length;
    for (const auto& [cls, length] : overrides) {
      if (cls < 0 || cls >= l0.size())
        throw InputError(fmt::format("initial metric names unknown class {}", cls));
      l0(cls) = length;
    }
    (void)Metric(l0);
  } catch (const std::exception& e) {
    print(err, fmt::format("error: {}\n", e.what()));
    return 2;
  }
  const Triangulation& tri = file.triangulation;
  warn_low_valence(tri, err);

  FlowTrace trace;
  try {
    trace = run_flow(tri, Metric(l0), config);
  } catch (const std::exception& e) {
    print(err, fmt::format("error: flow failed: {}\n", e.what()));
    return 1;
  }

  const Eigen::VectorXd& l = trace.final_metric;
  const CurvatureVector k = curvature(tri, l);
  bool all_valences_ok = true;
  bool window_ok = true;
  ordered_json windows = ordered_json::array();
  for (int e = 0; e < tri.edge_class_count(); ++e) {
    const int v = tri.valence(e);
    ordered_json w;
    w["class"] = e;
    w["valence"] = v;
    if (v >= kMinValence) {
      const bounds::LengthWindow win = bounds::theorem_window(v);
      const bool inside = win.contains(l(e), kWindowSlack);
      window_ok = window_ok && inside;
      w["lower"] = number(win.lower);
      w["upper"] = number(win.upper);
      w["inside"] = inside;
    } else {
      all_valences_ok = false;
      w["lower"] = nullptr;
      w["upper"] = nullptr;
      w["inside"] = nullptr;
    }
    windows.push_back(std::move(w));
  }
  ordered_json hyperideal = ordered_json::array();
  bool all_hyperideal = true;
  for (int t = 0; t < tri.tet_count(); ++t) {
    const bool h = is_hyperideal(pull_back(tri, l, t));
    all_hyperideal = all_hyperideal && h;
    hyperideal.push_back(h);
  }

  int code = trace.converged ? 0 : 1;
  if (trace.converged && all_valences_ok && !(window_ok && all_hyperideal)) {
    print(err, "error: converged metric violates the length window or hyper-ideality\n");
    code = 1;
  }

  if (!options.trace_path.empty()) {
    std::ofstream trace_file(options.trace_path);
    if (!trace_file) {
      print(err, fmt::format("error: cannot write {}\n", options.trace_path));
      return 2;
    }
    write_trace_csv(trace_file, trace);
  }

  if (options.output == "csv") {
    write_trace_csv(out, trace);
    return code;
  }
  ordered_json report;
  report["input_digest"] = file.digest;
  report["format"] = file.format;
  report["tetrahedra"] = tri.tet_count();
  report["edge_classes"] = tri.edge_class_count();
  report["valences"] = std::vector<int>(tri.valences().begin(), tri.valences().end());
  report["status"] = to_string(trace.status);
  report["converged"] = trace.converged;
  report["iterations"] = trace.steps;
  report["rejected_steps"] = trace.rejected_steps;
  report["flow_time"] = number(trace.times.back());
  report["tolerance"] = number(config.residual_tolerance);
  report["final_residual"] = number(trace.final_residual);
  report["initial_lengths"] = numbers(l0);
  report["final_lengths"] = numbers(l);
  report["final_cosh_lengths"] = numbers(l.array().cosh());
  report["final_curvatures"] = numbers(k);
  report["windows"] = std::move(windows);
  report["hyperideal"] = std::move(hyperideal);
  report["H_initial"] = number(trace.h_values.front());
  report["H_final"] = number(trace.h_values.back());
  report["rate"] = number(trace.estimated_rate);
  print(out, report.dump(2));
  out << '\n';
  return code;
}

int cmd_bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err) {
  if (options.n_max < kMinValence) {
    print(err, fmt::format("error: --n-max must be >= 9, got {}\n", options.n_max));
    return 2;
  }
  if (options.output != "text" && options.output != "json") {
    print(err, fmt::format("error: unknown output format \"{}\"\n", options.output));
    return 2;
  }
  const bounds::BoundsTable table = bounds::build_bounds_table(options.n_max);
  if (options.output == "json") {
    ordered_json j;
    j["xi_infinity"] = table.xi_infinity;
    j["rows"] = ordered_json::array();
    for (const auto& v : table.valences) {
      ordered_json row;
      row["n"] = v.n;
      row["b"] = v.b;
      row["mu"] = v.mu;
      if (const bounds::Table1Row* t = bounds::table1_row_for(v.n)) {
        row["range"] = t->range_label();
        row["gamma"] = t->gamma;
        row["delta"] = t->delta;
        row["d"] = t->d;
        row["q"] = t->q;
        row["p"] = t->p;
      }
      j["rows"].push_back(std::move(row));
    }
    print(out, j.dump(2));
    out << '\n';
    return 0;
  }
  print(out, fmt::format("xi_infinity {}\n", table.xi_infinity));
  print(out, "n b_n mu_n gamma delta d q p\n");
  for (const auto& v : table.valences) {
    std::string line = fmt::format("{} {} {}", v.n, v.b, v.mu);
    if (const bounds::Table1Row* t = bounds::table1_row_for(v.n))
      line += fmt::format(" {} {} {} {} {}", t->gamma, t->delta, t->d,
                          t->q, t->p);
    print(out, line + "\n");
  }
  return 0;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  const std::string& s = options.suite;
  if (s != "table1" && s != "monotonicity" && s != "constants" && s != "all") {
    print(err, fmt::format("error: unknown suite \"{}\"\n", s));
    return 2;
  }
  if (options.resolution < 8 || options.jobs < 1) {
    print(err, "error: need --resolution >= 8 and --jobs >= 1\n");
    return 2;
  }
  std::vector<bounds::VerificationReport> reports;
  if (s == "table1" || s == "all") {
    std::vector<bounds::Table1Row> rows(bounds::table1().begin(), bounds::table1().end());
    if (options.corrupt_table)
      for (auto& row : rows)
        if (row.contains(12)) row.delta = 0.07;
    reports.push_back(bounds::verify_table1(rows));
  }
  if (s == "constants" || s == "all") reports.push_back(bounds::verify_constants());
  if (s == "monotonicity" || s == "all")
    reports.push_back(bounds::grid_monotonicity_suite(options.resolution, options.jobs));

  bool passed = true;
  ordered_json j;
  j["reports"] = ordered_json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    j["reports"].push_back(ordered_json::parse(bounds::to_json(r)));
    for (const auto& c : r.checks)
      if (!c.passed && !c.informational)
        print(err, fmt::format("FAIL {}: worst margin {}\n", c.name, c.worst_margin));
  }
  j["passed"] = passed;
  const std::string text = j.dump(2) + "\n";
  if (options.report_path.empty()) {
    print(out, text);
  } else {
    std::ofstream file(options.report_path);
    if (!file) {
      print(err, fmt::format("error: cannot write {}\n", options.report_path));
      return 2;
    }
    file << text;
    for (const auto& r : reports)
      print(out, fmt::format("{}: {} ({} checks, {} failed)\n", r.suite,
                             r.passed() ? "pass" : "FAIL", r.checks.size(), r.failures()));
  }
  return passed ? 0 : 1;
}

}  // namespace hyperflow::cli
