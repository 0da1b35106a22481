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

// l1cut: exact l1 embeddings of K_{2,n} metrics, hypermetric lower bounds,
// and a cut-cone LP oracle.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error,
// 3 guard refusal.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "l1cut/io.hpp"
#include "l1cut/l1cut.hpp"

namespace {

using l1cut::Rat;
using l1cut::to_decimal;
using l1cut::to_string;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

struct Options {
  bool json_output = false;
  bool csv_output = false;
  bool no_timings = false;
  std::uint64_t guard_cuts = l1cut::CutGuard{}.max_subsets;
  std::size_t guard_oracle_points = l1cut::OracleGuard{}.max_points;
};

struct RunReport {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::vector<std::pair<std::string, double>> timings;
  std::vector<std::string> text;
  std::vector<std::string> csv;
  int exit_code = kExitOk;

  template <class F>
  auto timed(const std::string& phase, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto value = f();
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    timings.emplace_back(phase, elapsed.count());
    return value;
  }
};

std::string show(const Rat& q) { return to_string(q) + " (" + to_decimal(q) + ")"; }

std::vector<std::string> pair_csv(const l1cut::FiniteMetric& base, const l1cut::SymMatrix<Rat>& embedded) {
  std::vector<std::string> rows{"x,y,d,d1,ratio"};
  for (l1cut::Vertex x = 0; x < base.size(); ++x) {
    for (l1cut::Vertex y = x + 1; y < base.size(); ++y) {
      rows.push_back(std::to_string(x) + "," + std::to_string(y) + "," + to_string(base(x, y)) + "," +
                     to_string(embedded(x, y)) + "," + to_string(embedded(x, y) / base(x, y)));
    }
  }
  return rows;
}

void describe_report(RunReport& run, const l1cut::DistortionReport& r) {
  run.text.push_back("distortion " + show(r.distortion));
  run.text.push_back("min ratio  " + to_string(r.min_ratio) + " at (" + std::to_string(r.argmin_pair.first) +
                     "," + std::to_string(r.argmin_pair.second) + ")");
  run.text.push_back("max ratio  " + to_string(r.max_ratio) + " at (" + std::to_string(r.argmax_pair.first) +
                     "," + std::to_string(r.argmax_pair.second) + ")");
}

RunReport cmd_formula(std::size_t n) {
  RunReport run;
  run.command = "formula";
  run.inputs["n"] = n;
  const Rat value = l1cut::c1_k2n(n);
  run.outputs = {{"n", n}, {"k", (n + 1) / 2}, {"c1", to_string(value)}, {"c1_decimal", to_decimal(value)}};
  run.text.push_back("c1(K_{2," + std::to_string(n) + "}) = " + show(value));
  run.csv = {"n,c1", std::to_string(n) + "," + to_string(value)};
  return run;
}

RunReport cmd_embed(std::size_t k, std::size_t ell, const std::string& output, const Options& opt) {
  RunReport run;
  run.command = "embed";
  run.inputs = {{"k", k}, {"ell", ell}};
  const l1cut::CutGuard guard{opt.guard_cuts};
  const auto theta = run.timed("build", [&] { return l1cut::build_theta(k, ell); });
  const auto metric = run.timed("metric", [&] { return l1cut::shortest_path_metric(theta.graph); });
  const auto measure = run.timed("cuts", [&] { return l1cut::combine_d1(k, ell, guard); });
  const auto table = run.timed("pseudometric", [&] { return l1cut::pseudometric_table(measure); });
  const auto report = run.timed("distortion", [&] { return l1cut::distortion_report(metric, table); });
  const Rat expected = l1cut::theta_distortion(k);
  const bool verified = report.distortion == expected;

  run.outputs = {{"vertices", metric.size()},
                 {"atoms", measure.atom_count()},
                 {"report", l1cut::io::to_json(report)},
                 {"expected_distortion", to_string(expected)},
                 {"verified", verified}};
  if (!output.empty()) {
    run.timed("write", [&] {
      const json document = {{"measure", l1cut::io::to_json(measure)},
                             {"coordinates", l1cut::io::to_json(l1cut::materialize_coordinates(measure))},
                             {"report", l1cut::io::to_json(report)}};
      std::ofstream out(output);
      if (!out) {
        throw l1cut::InputError("cannot write " + output);
      }
      out << document.dump(2) << "\n";
      return 0;
    });
    run.outputs["written"] = output;
  }
  run.text.push_back("theta graph K_{2," + std::to_string(2 * k) + "}^" + std::to_string(ell) + ": " +
                     std::to_string(metric.size()) + " vertices, " + std::to_string(measure.atom_count()) +
                     " cut atoms");
  describe_report(run, report);
  run.text.push_back(std::string("expected   ") + show(expected) + (verified ? "  [verified]" : "  [MISMATCH]"));
  run.csv = pair_csv(metric, table);
  run.exit_code = verified ? kExitOk : kExitMismatch;
  return run;
}

RunReport cmd_certify(std::size_t n) {
  RunReport run;
  run.command = "certify";
  run.inputs["n"] = n;
  if (n < 3) {
    run.outputs = {{"bound", "1"}, {"note", "n < 3: K_{2,n} embeds isometrically; no certificate beyond 1"}};
    run.text.push_back("bound 1 (n < 3 embeds isometrically)");
    return run;
  }
  const std::size_t k = (n - 1) / 2;
  const auto certificate = run.timed("certificate", [&] { return l1cut::k2n_certificate(k); });
  run.outputs = {{"k", k},
                 {"instance", "K_{2," + std::to_string(2 * k + 1) + "}"},
                 {"certificate", l1cut::io::to_json(certificate)},
                 {"bound_decimal", to_decimal(certificate.bound)}};
  if (n % 2 == 0) {
    run.outputs["note"] = "even n: certificate computed on the K_{2," + std::to_string(n - 1) +
                          "} sub-instance, which lower-bounds K_{2," + std::to_string(n) + "}";
  }
  run.text.push_back("instance   K_{2," + std::to_string(2 * k + 1) + "} with b = -" + std::to_string(k) +
                     " on A, 1 on B");
  run.text.push_back("positive   " + to_string(certificate.positive_mass));
  run.text.push_back("negative   " + to_string(certificate.negative_mass));
  run.text.push_back("bound      " + show(certificate.bound));
  return run;
}

RunReport cmd_oracle(const std::string& path, const Options& opt) {
  RunReport run;
  run.command = "oracle";
  run.inputs["metric_file"] = path;
  const auto metric = run.timed("read", [&] { return l1cut::io::metric_from_json(l1cut::io::read_json_file(path)); });
  const auto result = run.timed("solve", [&] { return l1cut::exact_c1(metric, {opt.guard_oracle_points}); });
  run.outputs = l1cut::io::to_json(result);
  run.outputs["points"] = metric.size();
  if (result.status == l1cut::OracleStatus::guard_exceeded) {
    run.text.push_back("refused: " + std::to_string(metric.size()) + " points exceeds the oracle guard of " +
                       std::to_string(opt.guard_oracle_points));
    run.exit_code = kExitGuard;
    return run;
  }
  run.text.push_back("c1 = " + show(result.optimum_D) + " over " + std::to_string(metric.size()) + " points");
  run.text.push_back("witness uses " + std::to_string(result.witness.atom_count()) + " cuts");
  return run;
}

RunReport cmd_pipeline(const std::string& path, const std::string& epsilon_text, const Options& opt) {
  RunReport run;
  run.command = "pipeline";
  const Rat epsilon = l1cut::parse_rat(epsilon_text);
  run.inputs = {{"instance_file", path}, {"epsilon", to_string(epsilon)}};
  const auto weights = run.timed("read", [&] { return l1cut::io::weights_from_json(l1cut::io::read_json_file(path)); });
  l1cut::ReductionGuard guard;
  guard.cuts.max_subsets = opt.guard_cuts;
  const auto result = run.timed("pipeline", [&] { return l1cut::embed_weighted_instance(weights, epsilon, guard); });
  run.outputs = {{"instance", l1cut::io::to_json(weights)},
                 {"theta", {{"k", result.k}, {"ell", result.ell}}},
                 {"trace", l1cut::io::to_json(result.trace)},
                 {"measure", l1cut::io::to_json(result.measure)},
                 {"report", l1cut::io::to_json(result.report)}};
  run.text.push_back("reduced to K_{2," + std::to_string(2 * result.k) + "}^" + std::to_string(result.ell) +
                     " in " + std::to_string(result.trace.steps.size()) + " steps");
  describe_report(run, result.report);

  const std::size_t points = result.metric.size();
  if (points <= opt.guard_oracle_points) {
    const auto oracle = run.timed("oracle", [&] { return l1cut::exact_c1(result.metric, {opt.guard_oracle_points}); });
    run.outputs["oracle"] = l1cut::io::to_json(oracle);
    run.text.push_back("pipeline " + show(result.report.distortion) + "   oracle " + show(oracle.optimum_D));
    if (oracle.optimum_D > result.report.distortion) {
      run.text.push_back("MISMATCH: the construction beats the exact optimum");
      run.exit_code = kExitMismatch;
    }
  } else {
    run.outputs["oracle"] = {{"status", "guard_exceeded"}};
    run.text.push_back("oracle skipped: " + std::to_string(points) + " points exceeds the guard");
  }
  run.csv = pair_csv(result.metric, l1cut::pseudometric_table(result.measure));
  return run;
}

int emit(const RunReport& run, const Options& opt) {
  if (opt.json_output) {
    json document = {{"command", run.command}, {"inputs", run.inputs}, {"outputs", run.outputs}};
    if (!opt.no_timings) {
      json timings = json::object();
      for (const auto& [phase, ms] : run.timings) timings[phase] = ms;
      document["timings"] = timings;
    }
    std::cout << document.dump(2) << "\n";
  } else if (opt.csv_output) {
    for (const auto& row : run.csv) std::cout << row << "\n";
  } else {
    for (const auto& line : run.text) std::cout << line << "\n";
    if (!opt.no_timings && !run.timings.empty()) {
      std::cout << "timings:";
      for (const auto& [phase, ms] : run.timings) std::cout << " " << phase << "=" << ms << "ms";
      std::cout << "\n";
    }
  }
  return run.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact l1 embeddings, hypermetric certificates and c1 oracle for K_{2,n} metrics"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "Print the run report as JSON");
  app.add_flag("--csv", opt.csv_output, "Print per-pair rows x,y,d,d1,ratio (embed, pipeline)");
  app.add_flag("--no-timings", opt.no_timings, "Omit phase timings so output is byte-reproducible");
  app.add_option("--guard-cuts", opt.guard_cuts, "Maximum number of k-subsets in the second cut family")
      ->check(CLI::PositiveNumber);
  app.add_option("--guard-oracle-points", opt.guard_oracle_points, "Maximum metric size for the LP oracle")
      ->check(CLI::Range(2, 20));
  app.fallthrough();

  std::function<RunReport()> command;

  std::size_t n = 0;
  auto* formula = app.add_subcommand("formula", "Print c1(K_{2,n})");
  formula->add_option("n", n, "Size of side B")->required()->check(CLI::PositiveNumber);
  formula->callback([&] { command = [&] { return cmd_formula(n); }; });

  std::size_t k = 0;
  std::size_t ell = 0;
  std::string output;
  auto* embed = app.add_subcommand("embed", "Embed K_{2,2k}^ell and verify its distortion");
  embed->add_option("k", k, "Half the number of paths")->required()->check(CLI::PositiveNumber);
  embed->add_option("ell", ell, "Half the path length")->required()->check(CLI::PositiveNumber);
  embed->add_option("-o,--output", output, "Write measure, coordinates and report as JSON");
  embed->callback([&] { command = [&] { return cmd_embed(k, ell, output, opt); }; });

  std::size_t certify_n = 0;
  auto* certify = app.add_subcommand("certify", "Hypermetric lower bound for K_{2,n}");
  certify->add_option("n", certify_n, "Size of side B")->required()->check(CLI::PositiveNumber);
  certify->callback([&] { command = [&] { return cmd_certify(certify_n); }; });

  std::string metric_file;
  auto* oracle = app.add_subcommand("oracle", "Exact c1 of a metric file by cut-cone LP");
  oracle->add_option("metric", metric_file, "Metric JSON {points, dist}")->required();
  oracle->callback([&] { command = [&] { return cmd_oracle(metric_file, opt); }; });

  std::string instance_file;
  std::string epsilon = "0";
  auto* pipeline = app.add_subcommand("pipeline", "Reduce and embed a weighted K_{2,n} instance");
  pipeline->add_option("instance", instance_file, "Weighted instance JSON {n, weights}")->required();
  pipeline->add_option("--epsilon", epsilon, "Relative error allowed when simplifying weights");
  pipeline->callback([&] { command = [&] { return cmd_pipeline(instance_file, epsilon, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (opt.json_output && opt.csv_output) {
    std::cerr << "error: --json and --csv are exclusive\n";
    return kExitInput;
  }

  try {
    return emit(command(), opt);
  } catch (const l1cut::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const l1cut::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const l1cut::Error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitMismatch;
  }
}
