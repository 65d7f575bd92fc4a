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

#include "hyperflow/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace hyperflow::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string data(const char* name) { return std::string(HYPERFLOW_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("hyperflow_test_" + name);
  std::ofstream(p) << contents;
  return p.string();
}

struct Captured {
  int code;
  std::string out, err;
};

template <typename F>
Captured capture(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

TEST(Check, SingleClass) {
  for (const char* file : {"two_tet_labels.json", "two_tet_gluings.json"}) {
    const Captured r = capture([&](auto& o, auto& e) { return cmd_check(data(file), o, e); });
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1 class, valence 12"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.find("warning"), std::string::npos);
  }
}

TEST(Check, LowValenceWarns) {
  const Captured r =
      capture([&](auto& o, auto& e) { return cmd_check(data("valence6_labels.json"), o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hypothesis v(e) >= 9 violated"), std::string::npos);
}

TEST(Check, InputErrors) {
  const std::string bad[] = {
      "{ not json",
      R"({"format": "edge_labels", "tetrahedra": 1})",
      R"({"format": "edge_labels", "tetrahedra": 1, "edge_labels": [[0,0,0,0,0]]})",
      R"({"format": "edge_labels", "tetrahedra": 1, "edge_labels": [[0,0,0,0,0,2]]})",
      R"({"format": "census", "tetrahedra": 1})",
      R"({"format": "face_gluings", "tetrahedra": 1, "gluings": []})",
      R"({"format": "edge_labels", "tetrahedra": 1, "edge_labels": [[0,0,0,0,0,0]],
          "initial_metric": {"3": 0.5}})",
      R"({"format": "edge_labels", "tetrahedra": 1, "edge_labels": [[0,0,0,0,0,0]],
          "initial_metric": {"0": -0.5}})",
  };
  int i = 0;
  for (const auto& text : bad) {
    const std::string path = temp_file("bad" + std::to_string(i++) + ".json", text);
    const Captured r = capture([&](auto& o, auto& e) { return cmd_check(path, o, e); });
    EXPECT_EQ(r.code, 2) << text;
    EXPECT_FALSE(r.err.empty());
  }
  const Captured missing =
      capture([&](auto& o, auto& e) { return cmd_check("/nonexistent/x.json", o, e); });
  EXPECT_EQ(missing.code, 2);
}

TEST(Parse, DigestAndOverrides) {
  const std::string text = R"({"format": "edge_labels", "tetrahedra": 2,
    "edge_labels": [[0,0,0,0,0,0],[0,0,0,0,0,0]], "initial_metric": {"0": 0.9}})";
  const TriangulationFile f = parse_triangulation(text);
  EXPECT_EQ(f.digest, fnv1a_hex(text));
  EXPECT_EQ(f.digest.size(), 16u);
  EXPECT_EQ(f.initial_metric.at(0), 0.9);
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
}

TEST(Flow, ConvergesWithReport) {
  const Captured r = capture([&](auto& o, auto& e) {
    return cmd_flow(data("two_tet_gluings.json"), FlowOptions{}, o, e);
  });
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["converged"].get<bool>());
  EXPECT_NEAR(j["final_cosh_lengths"][0].get<double>(), 1.18301270189221932, 1e-6);
  EXPECT_LE(std::abs(j["final_curvatures"][0].get<double>()), 1e-10);
  EXPECT_TRUE(j["windows"][0]["inside"].get<bool>());
  EXPECT_TRUE(j["hyperideal"][0].get<bool>());
  EXPECT_TRUE(j["hyperideal"][1].get<bool>());
  EXPECT_LT(j["rate"].get<double>(), 0);
  EXPECT_EQ(j["input_digest"].get<std::string>().size(), 16u);
}

TEST(Flow, TimeLimitExitsOne) {
  FlowOptions opts;
  opts.t_max = 1e-6;
  const Captured r = capture(
      [&](auto& o, auto& e) { return cmd_flow(data("two_tet_labels.json"), opts, o, e); });
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.out)["converged"].get<bool>());
}

TEST(Flow, CsvTrace) {
  FlowOptions opts;
  opts.output = "csv";
  opts.trace_path = (fs::temp_directory_path() / "hyperflow_test_trace.csv").string();
  const Captured r = capture(
      [&](auto& o, auto& e) { return cmd_flow(data("mixed_valence_labels.json"), opts, o, e); });
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "time,residual,H,l0,l1");
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 4);
  }
  EXPECT_GT(rows, 10);
  std::ifstream file(opts.trace_path);
  std::stringstream copy;
  copy << file.rdbuf();
  EXPECT_EQ(copy.str(), r.out);
}

TEST(Flow, RoundTripConvergesImmediately) {
  const Captured first = capture([&](auto& o, auto& e) {
    return cmd_flow(data("mixed_valence_labels.json"), FlowOptions{}, o, e);
  });
  ASSERT_EQ(first.code, 0);
  FlowOptions opts;
  opts.init_path = temp_file("report.json", first.out);
  const Captured second = capture(
      [&](auto& o, auto& e) { return cmd_flow(data("mixed_valence_labels.json"), opts, o, e); });
  ASSERT_EQ(second.code, 0);
  EXPECT_LE(json::parse(second.out)["iterations"].get<int>(), 2);
}

TEST(Flow, InitOverrides) {
  FlowOptions opts;
  opts.init_path = temp_file("init.json", R"({"0": 1.1})");
  opts.t_max = 1e-9;
  const Captured r = capture(
      [&](auto& o, auto& e) { return cmd_flow(data("two_tet_labels.json"), opts, o, e); });
  EXPECT_EQ(json::parse(r.out)["initial_lengths"][0].get<double>(), 1.1);
  opts.init_path = temp_file("init_bad.json", R"({"4": 1.1})");
  const Captured bad = capture(
      [&](auto& o, auto& e) { return cmd_flow(data("two_tet_labels.json"), opts, o, e); });
  EXPECT_EQ(bad.code, 2);
}

TEST(Flow, BadOptions) {
  FlowOptions opts;
  opts.output = "xml";
  EXPECT_EQ(capture([&](auto& o, auto& e) {
              return cmd_flow(data("two_tet_labels.json"), opts, o, e);
            }).code,
            2);
  opts = {};
  opts.tol = -1;
  EXPECT_EQ(capture([&](auto& o, auto& e) {
              return cmd_flow(data("two_tet_labels.json"), opts, o, e);
            }).code,
            2);
  const Captured one_tet = capture([&](auto& o, auto& e) {
    return cmd_flow(data("one_tet_gluings.json"), FlowOptions{}, o, e);
  });
  EXPECT_EQ(one_tet.code, 2);
}

TEST(Bounds, TextAndJson) {
  const Captured text = capture([](auto& o, auto& e) { return cmd_bounds({}, o, e); });
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("\n9 2 0.1250043702177"), std::string::npos) << text.out;

  BoundsOptions opts;
  opts.output = "json";
  opts.n_max = 18;
  const Captured js = capture([&](auto& o, auto& e) { return cmd_bounds(opts, o, e); });
  ASSERT_EQ(js.code, 0);
  const json j = json::parse(js.out);
  const json& r18 = j["rows"][9];
  EXPECT_EQ(r18["n"], 18);
  EXPECT_EQ(r18["gamma"].get<double>(), 1.2488);
  EXPECT_EQ(r18["delta"].get<double>(), 0.0278);
  EXPECT_EQ(r18["d"].get<double>(), 1.9454);
  EXPECT_EQ(r18["q"].get<double>(), 1.9330);
  EXPECT_EQ(r18["p"].get<double>(), 1.9801);
  EXPECT_EQ(j["rows"][0]["b"].get<double>(), 2.0);

  opts.n_max = 8;
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_bounds(opts, o, e); }).code, 2);
}

TEST(Verify, Table1ReportsTheOneDefect) {
  VerifyOptions opts;
  opts.suite = "table1";
  const Captured r = capture([&](auto& o, auto& e) { return cmd_verify(opts, o, e); });
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("n=16 (e)"), std::string::npos);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["reports"][0]["failures"], 1);
}

TEST(Verify, CorruptedTable) {
  VerifyOptions opts;
  opts.suite = "table1";
  opts.corrupt_table = true;
  const Captured r = capture([&](auto& o, auto& e) { return cmd_verify(opts, o, e); });
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("n=12 (b)"), std::string::npos);
}

TEST(Verify, MonotonicityAndConstants) {
  VerifyOptions opts;
  opts.suite = "monotonicity";
  opts.resolution = 8;
  opts.jobs = 2;
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_verify(opts, o, e); }).code, 0);
  opts.suite = "constants";
  opts.report_path = (fs::temp_directory_path() / "hyperflow_test_constants.json").string();
  const Captured r = capture([&](auto& o, auto& e) { return cmd_verify(opts, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("constants: pass"), std::string::npos);
  std::ifstream file(opts.report_path);
  EXPECT_TRUE(json::parse(file)["passed"].get<bool>());
}

TEST(Verify, BadOptions) {
  VerifyOptions opts;
  opts.suite = "everything";
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_verify(opts, o, e); }).code, 2);
  opts.suite = "all";
  opts.resolution = 4;
  EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_verify(opts, o, e); }).code, 2);
}

}  // namespace
}  // namespace hyperflow::cli
