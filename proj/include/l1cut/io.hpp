// Copyright 2026 The l1cut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON documents for every exchanged type. Rationals are strings "p/q" (or
// "p" for integers) so nothing passes through floating point.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "l1cut/cut_measure.hpp"
#include "l1cut/error.hpp"
#include "l1cut/graph.hpp"
#include "l1cut/hypermetric.hpp"
#include "l1cut/l1_oracle.hpp"
#include "l1cut/rational.hpp"
#include "l1cut/reduction.hpp"

namespace l1cut::io {

using nlohmann::json;

inline json to_json(const Rat& q) { return to_string(q); }

/// Accepts "p/q" strings, exact decimal strings, and JSON integers. JSON
/// floats are taken at their shortest decimal spelling.
inline Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_number_float()) return parse_rat(j.dump());
  throw InputError("expected a rational, got " + j.dump());
}

inline json to_json(const CutMeasure& m) {
  json atoms = json::array();
  for (const auto& atom : m.atoms()) {
    atoms.push_back({{"cut", atom.cut.members()}, {"weight", to_string(atom.weight)}});
  }
  return {{"universe_size", m.universe_size()}, {"atoms", atoms}};
}

inline CutMeasure cut_measure_from_json(const json& j) {
  try {
    CutMeasure m(j.at("universe_size").get<std::size_t>());
    for (const auto& atom : j.at("atoms")) {
      const auto members = atom.at("cut").get<std::vector<Vertex>>();
      m.add(Cut(m.universe_size(), members), rat_from_json(atom.at("weight")));
    }
    return m;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed cut measure: ") + e.what());
  }
}

inline json to_json(const Coordinates& coords) {
  json rows = json::array();
  for (const auto& row : coords) {
    json r = json::array();
    for (const auto& value : row) r.push_back(to_string(value));
    rows.push_back(std::move(r));
  }
  return {{"points", coords.size()},
          {"dimension", coords.empty() ? 0 : coords.front().size()},
          {"coordinates", rows}};
}

inline json to_json(const DistortionReport& r) {
  return {{"min_ratio", to_string(r.min_ratio)},
          {"max_ratio", to_string(r.max_ratio)},
          {"distortion", to_string(r.distortion)},
          {"distortion_decimal", to_decimal(r.distortion)},
          {"argmin_pair", {r.argmin_pair.first, r.argmin_pair.second}},
          {"argmax_pair", {r.argmax_pair.first, r.argmax_pair.second}}};
}

inline json to_json(const HypermetricCertificate& c) {
  return {{"b", c.b},
          {"positive_mass", to_string(c.positive_mass)},
          {"negative_mass", to_string(c.negative_mass)},
          {"bound", to_string(c.bound)}};
}

inline json to_json(const FiniteMetric& m) {
  json rows = json::array();
  for (Vertex x = 0; x < m.size(); ++x) {
    json row = json::array();
    for (Vertex y = 0; y < m.size(); ++y) row.push_back(to_string(m(x, y)));
    rows.push_back(std::move(row));
  }
  return {{"points", m.size()}, {"dist", rows}};
}

/// {points: m, dist: [[...]]}; validated as a metric (the error names a
/// violated triangle).
inline FiniteMetric metric_from_json(const json& j) {
  std::vector<std::vector<Rat>> rows;
  std::size_t points = 0;
  try {
    points = j.at("points").get<std::size_t>();
    for (const auto& row : j.at("dist")) {
      std::vector<Rat> r;
      for (const auto& entry : row) r.push_back(rat_from_json(entry));
      rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed metric: ") + e.what());
  }
  if (rows.size() != points) {
    throw InputError("metric declares " + std::to_string(points) + " points but has " +
                     std::to_string(rows.size()) + " rows");
  }
  return FiniteMetric::from_rows(rows);
}

inline json to_json(const LPResult& r) {
  json out = {{"status", status_name(r.status)}};
  if (r.status == OracleStatus::optimal) {
    out["optimum_D"] = to_string(r.optimum_D);
    out["optimum_D_decimal"] = to_decimal(r.optimum_D);
    out["witness"] = to_json(r.witness);
  }
  return out;
}

/// {n, weights: {"0-b": w, "1-b": w}} with b the B-vertex index 2..n+1.
inline K2nWeights weights_from_json(const json& j) {
  K2nWeights w;
  try {
    const auto n = j.at("n").get<std::size_t>();
    if (n == 0) {
      throw InputError("weighted instance needs n >= 1");
    }
    const auto& table = j.at("weights");
    for (std::size_t b = 2; b < n + 2; ++b) {
      const std::string key = std::to_string(b);
      if (!table.contains("0-" + key) || !table.contains("1-" + key)) {
        throw InputError("missing weight for B-vertex " + key);
      }
      w.to_zero.push_back(rat_from_json(table.at("0-" + key)));
      w.to_one.push_back(rat_from_json(table.at("1-" + key)));
    }
    if (table.size() != 2 * n) {
      throw InputError("weight table has entries beyond the " + std::to_string(2 * n) + " edges");
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed weighted instance: ") + e.what());
  }
  w.validate();
  return w;
}

inline json to_json(const K2nWeights& w) {
  json table = json::object();
  for (std::size_t b = 0; b < w.n(); ++b) {
    const std::string key = std::to_string(b + 2);
    table["0-" + key] = to_string(w.to_zero[b]);
    table["1-" + key] = to_string(w.to_one[b]);
  }
  return {{"n", w.n()}, {"weights", table}};
}

inline json to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json map = json::array();
    for (const auto& image : step.map) map.push_back(image ? json(*image) : json(nullptr));
    json s = {{"kind", step_name(step.kind)}, {"parameters", step.parameters}, {"map", map}};
    if (step.kind == StepKind::shrink) {
      s["path"] = step.path;
      s["contracted"] = step.contracted;
    }
    steps.push_back(std::move(s));
  }
  return {{"source_size", trace.source_size}, {"target_size", trace.target_size}, {"steps", steps}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace l1cut::io
