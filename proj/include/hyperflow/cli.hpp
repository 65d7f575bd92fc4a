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

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperflow/triangulation.hpp"

namespace hyperflow::cli {

/// Malformed or invalid input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed triangulation file. Schema:
///   {"format": "edge_labels", "tetrahedra": n, "edge_labels": [[c x6], ...]}
///   {"format": "face_gluings", "tetrahedra": n,
///    "gluings": [{"tet", "face", "to_tet", "to_face", "vertex_map"}, ...]}
/// Either form may carry "initial_metric": {"<class>": length, ...}.
struct TriangulationFile {
  std::string format;
  Triangulation triangulation;
  std::map<int, double> initial_metric;
  std::string digest;  ///< FNV-1a 64 of the raw bytes, hex
};

TriangulationFile parse_triangulation(std::string_view text);
TriangulationFile load_triangulation(const std::string& path);

/// Length overrides from an --init file: a bare {"<class>": length} object,
/// an object with "initial_metric", or a flow report with "final_lengths".
std::map<int, double> load_metric_overrides(const std::string& path);

std::string fnv1a_hex(std::string_view bytes);

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err);

struct FlowOptions {
  double tol = 1e-10;
  double t_max = 200;
  std::string trace_path;
  std::string output = "json";  ///< json | csv
  std::string init_path;
};

/// 0 converged, 1 not converged (or final lengths outside the window), 2 bad input.
int cmd_flow(const std::string& path, const FlowOptions& options, std::ostream& out,
             std::ostream& err);

struct BoundsOptions {
  int n_max = 40;
  std::string output = "text";  ///< text | json
};

int cmd_bounds(const BoundsOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string suite = "all";  ///< table1 | monotonicity | constants | all
  int resolution = 16;
  int jobs = 1;
  std::string report_path;
  /// Test hook: run table1 with delta of the n = 12 row raised to 0.07.
  bool corrupt_table = false;
};

/// 0 if every selected check passes, 1 otherwise, 2 on bad options.
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace hyperflow::cli
