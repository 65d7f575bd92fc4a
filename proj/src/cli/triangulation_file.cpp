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

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "hyperflow/cli.hpp"
#include "json.hpp"

namespace hyperflow::cli {

namespace {

using nlohmann::json;

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(fmt::format("missing field \"{}\"", key));
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(fmt::format("{} must be an integer", what));
  return j.get<int>();
}

std::map<int, double> parse_overrides(const json& j) {
  if (!j.is_object()) throw InputError("initial metric must be an object");
  std::map<int, double> out;
  for (const auto& [key, value] : j.items()) {
    int cls = 0;
    try {
      std::size_t used = 0;
      cls = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError(fmt::format("initial metric key \"{}\" is not a class index", key));
    }
    if (!value.is_number()) throw InputError("initial metric values must be numbers");
    out[cls] = value.get<double>();
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot read {}", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("malformed JSON: {}", e.what()));
  }
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return fmt::format("{:016x}", hash);
}

TriangulationFile parse_triangulation(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InputError("top level must be an object");
  const json& format = member(j, "format");
  if (!format.is_string()) throw InputError("format must be a string");
  const int tets = as_int(member(j, "tetrahedra"), "tetrahedra");
  if (tets < 1) throw InputError("tetrahedra must be >= 1");

  TriangulationFile out;
  out.format = format.get<std::string>();
  out.digest = fnv1a_hex(text);
  try {
    if (out.format == "edge_labels") {
      const json& rows = member(j, "edge_labels");
      if (!rows.is_array() || static_cast<int>(rows.size()) != tets)
        throw InputError("edge_labels must hold one row per tetrahedron");
      std::vector<EdgeLabels> labels;
      for (const json& row : rows) {
        if (!row.is_array() || row.size() != 6)
          throw InputError("each edge_labels row must have 6 entries");
        EdgeLabels l{};
        for (int e = 0; e < 6; ++e) l[e] = as_int(row[e], "edge label");
        labels.push_back(l);
      }
      out.triangulation = build_from_edge_labels(std::move(labels));
    } else if (out.format == "face_gluings") {
      const json& list = member(j, "gluings");
      if (!list.is_array()) throw InputError("gluings must be an array");
      std::vector<FaceGluing> gluings;
      for (const json& g : list) {
        FaceGluing f;
        f.tet = as_int(member(g, "tet"), "tet");
        f.face = as_int(member(g, "face"), "face");
        f.to_tet = as_int(member(g, "to_tet"), "to_tet");
        f.to_face = as_int(member(g, "to_face"), "to_face");
        const json& map = member(g, "vertex_map");
        if (!map.is_array() || map.size() != 3)
          throw InputError("vertex_map must have 3 entries");
        for (int k = 0; k < 3; ++k) f.vertex_map[k] = as_int(map[k], "vertex_map entry");
        gluings.push_back(f);
      }
      out.triangulation = build_from_gluings(tets, gluings);
    } else {
      throw InputError(fmt::format("unknown format \"{}\"", out.format));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }

  if (j.contains("initial_metric")) {
    out.initial_metric = parse_overrides(j.at("initial_metric"));
    for (const auto& [cls, length] : out.initial_metric) {
      if (cls < 0 || cls >= out.triangulation.edge_class_count())
        throw InputError(fmt::format("initial metric names unknown class {}", cls));
      if (!(length > 0)) throw InputError("initial metric lengths must be positive");
    }
  }
  return out;
}

TriangulationFile load_triangulation(const std::string& path) {
  return parse_triangulation(read_file(path));
}

std::map<int, double> load_metric_overrides(const std::string& path) {
  const json j = parse_json(read_file(path));
  if (j.is_object() && j.contains("final_lengths")) {
    const json& lengths = j.at("final_lengths");
    if (!lengths.is_array()) throw InputError("final_lengths must be an array");
    std::map<int, double> out;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (!lengths[i].is_number()) throw InputError("final_lengths entries must be numbers");
      out[static_cast<int>(i)] = lengths[i].get<double>();
    }
    return out;
  }
  if (j.is_object() && j.contains("initial_metric")) return parse_overrides(j.at("initial_metric"));
  return parse_overrides(j);
}

}  // namespace hyperflow::cli
