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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hyperflow/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = hyperflow::cli;
  CLI::App app{"Extended Ricci flow on hyper-ideal triangulations"};
  app.require_subcommand(1);

  std::string check_path;
  auto* check = app.add_subcommand("check", "validate a triangulation file");
  check->add_option("input", check_path, "triangulation JSON")->required();

  std::string flow_path;
  cli::FlowOptions flow_opts;
  auto* flow = app.add_subcommand("flow", "run the flow from the default or given metric");
  flow->add_option("input", flow_path, "triangulation JSON")->required();
  flow->add_option("--tol", flow_opts.tol, "residual tolerance")->capture_default_str();
  flow->add_option("--t-max", flow_opts.t_max, "flow time limit")->capture_default_str();
  flow->add_option("--trace", flow_opts.trace_path, "write the trace as CSV");
  flow->add_option("--output", flow_opts.output, "json | csv")->capture_default_str();
  flow->add_option("--init", flow_opts.init_path, "initial length overrides (JSON)");

  cli::BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "print b_n, mu_n and the row constants");
  bounds->add_option("--n-max", bounds_opts.n_max, "largest valence")->capture_default_str();
  bounds->add_option("--output", bounds_opts.output, "text | json")->capture_default_str();

  cli::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", verify_opts.suite, "table1 | monotonicity | constants | all")
      ->capture_default_str();
  verify->add_option("--resolution", verify_opts.resolution, "grid points per axis")
      ->capture_default_str();
  verify->add_option("--jobs", verify_opts.jobs, "worker threads")->capture_default_str();
  verify->add_option("--report", verify_opts.report_path, "write the JSON report here");
  verify->add_flag("--corrupt-table", verify_opts.corrupt_table,
                   "test hook: raise delta of the n = 12 row to 0.07");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*check) return cli::cmd_check(check_path, std::cout, std::cerr);
  if (*flow) return cli::cmd_flow(flow_path, flow_opts, std::cout, std::cerr);
  if (*bounds) return cli::cmd_bounds(bounds_opts, std::cout, std::cerr);
  return cli::cmd_verify(verify_opts, std::cout, std::cerr);
}
