// Copyright 2026 The qadapt Authors
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

#include "cli.hpp"

#include "qadapt/bench.hpp"
#include "qadapt/pipeline.hpp"
#include "qadapt/qasm.hpp"
#include "qadapt/report.hpp"
#include "qadapt/simulator.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace qadapt::cli {

namespace {

/// Input that could not be read or understood; carries the exit status.
struct InputError : std::runtime_error {
  InputError(const std::string& what, int code)
      : std::runtime_error(what), code(code) {}
  int code;
};

std::string read_file(const std::string& path, int code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read '" + path + "'", code);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text, int code) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw InputError("cannot write '" + path + "'", code);
  }
}

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("'" + std::string(s) + "' is not a count");
  }
  return v;
}

struct TranspileArgs {
  std::string qasm;
  std::string coupling;
  std::string out;
  std::string report;
  std::string baseline;
  std::size_t lookahead = kDefaultLookahead;
  std::size_t global_limit = SearchLimits{}.max_nodes;
  bool no_global = false;
  bool no_local = false;
  bool no_merge = false;
  double tol = 1e-6;
};

int cmd_transpile(const TranspileArgs& a, std::ostream& out, std::ostream& err) {
  Circuit circuit;
  CouplingGraph graph;
  try {
    circuit = parse_qasm(read_file(a.qasm, kExitParseError));
    graph = load_coupling(a.coupling);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  if (circuit.num_qubits() > graph.size()) {
    err << "error: program uses " << circuit.num_qubits()
        << " qubits but the coupling graph has " << graph.size()
        << " (qubit index out of range)\n";
    return kExitParseError;
  }
  if (!graph.connected()) {
    err << "error: coupling graph is not connected\n";
    return kExitDisconnected;
  }

  PipelineConfig config;
  config.lookahead = a.lookahead;
  config.global_limits.max_nodes = a.global_limit;
  config.use_global = !a.no_global;
  config.use_local = !a.no_local;
  config.use_merge = !a.no_merge;
  config.tolerance = a.tol;

  TranspileResult result;
  const auto start = std::chrono::steady_clock::now();
  try {
    config.validate();
    result = a.baseline == "naive"
                 ? transpile_baseline(circuit, graph, config.use_merge)
                 : transpile(circuit, graph, config);
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDisconnected;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIllegal;
  }
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  if (const std::size_t bad = count_illegal_cnots(result.circuit, graph, true);
      bad != 0) {
    err << "error: output still has " << bad << " illegal CNOTs\n";
    return kExitIllegal;
  }
  try {
    write_file(a.out, emit_qasm(result.circuit), kExitParseError);
    if (!a.report.empty()) {
      write_file(a.report, transpile_report(result, elapsed).dump(2) + "\n",
                 kExitParseError);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  }
  out << "initial mapping " << result.initial_mapping.to_string()
      << ", final mapping " << result.final_mapping.to_string() << '\n'
      << "cost " << result.cost_before << " -> " << result.cost_after << " ("
      << result.swaps << " swaps)\n";
  return 0;
}

struct VerifyArgs {
  std::string original;
  std::string transpiled;
  std::string mapping;
  double tol = 1e-6;
  std::uint64_t seed = kDefaultProbeSeed;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const Circuit original = parse_qasm(read_file(a.original, kExitIoError));
    const Circuit transpiled = parse_qasm(read_file(a.transpiled, kExitIoError));
    MappingPair maps;
    if (!a.mapping.empty()) {
      maps = mappings_from_report(
          nlohmann::json::parse(read_file(a.mapping, kExitIoError)));
    }
    const EquivalenceReport report = check_equivalence(
        original, transpiled, maps.final, a.tol, maps.initial, a.seed);
    out << std::setprecision(12) << "worst fidelity " << report.worst_fidelity
        << " over " << report.probes << " probes (seed " << report.seed
        << ")\n"
        << (report.equivalent ? "equivalent" : "NOT equivalent") << '\n';
    return report.equivalent ? 0 : kExitMismatch;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }
}

struct BenchArgs {
  std::string layouts = "linear,circle,central,neighbour";
  std::string qubits = "3..8";
  std::string depths = "1..6";
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  std::string csv;
  std::string json;
  std::size_t lookahead = kDefaultLookahead;
  bool timing = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  try {
    std::stringstream ss(a.layouts);
    for (std::string name; std::getline(ss, name, ',');) {
      config.layouts.push_back(parse_layout_kind(name));
    }
    std::tie(config.qubits_min, config.qubits_max) = parse_range(a.qubits);
    std::tie(config.depth_min, config.depth_max) = parse_range(a.depths);
    config.trials = a.trials;
    config.seed = a.seed;
    config.timing = a.timing;
    config.pipeline.lookahead = a.lookahead;
    config.validate();
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  const BenchReport report = run_benchmark(config);
  try {
    write_file(a.csv, records_to_csv(report.records), kExitIoError);
    const std::string json_path = a.json.empty() ? a.csv + ".json" : a.json;
    write_file(json_path, report_to_json(report, config) + "\n", kExitIoError);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  }
  out << report.records.size() << " records, " << report.verification_failures
      << " verification failures\n";
  for (const LayoutAggregate& l : report.layouts) {
    out << std::setw(10) << to_string(l.layout) << "  pipeline "
        << std::setprecision(4) << l.pipeline_cost_ratio << "x  baseline "
        << l.baseline_cost_ratio << "x original cost\n";
  }
  if (report.verification_failures > 0) {
    err << "error: " << report.verification_failures
        << " records failed verification (see failures in the JSON report)\n";
    return kExitVerifyFailed;
  }
  return 0;
}

}  // namespace

CouplingGraph load_coupling(const std::string& spec) {
  if (spec.rfind("layout:", 0) == 0) {
    const std::string rest = spec.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("expected layout:NAME:N, got '" + spec + "'");
    }
    return make_layout(parse_layout_kind(rest.substr(0, colon)),
                       parse_size(rest.substr(colon + 1)));
  }
  return coupling_from_json(read_file(spec, kExitParseError));
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = parse_size(text);
    return {v, v};
  }
  const std::size_t lo = parse_size(std::string_view(text).substr(0, dots));
  const std::size_t hi = parse_size(std::string_view(text).substr(dots + 2));
  if (lo > hi) {
    throw std::invalid_argument("empty range '" + text + "'");
  }
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Layout-aware transpiler for Open-QASM 2.0 programs", "qadapt"};
  app.require_subcommand(1);

  TranspileArgs t;
  CLI::App* transpile = app.add_subcommand(
      "transpile", "Legalize a program for a coupling graph and fuse gates");
  transpile->add_option("--qasm", t.qasm, "Input Open-QASM file")->required();
  transpile
      ->add_option("--coupling", t.coupling,
                   "Coupling JSON file or layout:NAME:N")
      ->required();
  transpile->add_option("--out", t.out, "Output Open-QASM file")->required();
  transpile->add_option("--report", t.report, "Write a JSON report here");
  transpile->add_option("--lookahead", t.lookahead, "Exact lookahead depth")
      ->check(CLI::PositiveNumber);
  transpile->add_option("--global-limit", t.global_limit,
                        "Node budget of the global relabeling search");
  transpile->add_flag("--no-global", t.no_global, "Skip global relabeling");
  transpile->add_flag("--no-local", t.no_local,
                      "Skip SWAP insertion (fails unless already routable)");
  transpile->add_flag("--no-merge", t.no_merge, "Skip single-qubit fusion");
  transpile->add_option("--baseline", t.baseline, "Use a baseline router")
      ->check(CLI::IsMember({"naive"}));
  transpile->add_option("--tol", t.tol, "Verification tolerance");

  VerifyArgs v;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a transpiled program against its original");
  verify->add_option("--original", v.original)->required();
  verify->add_option("--transpiled", v.transpiled)->required();
  verify->add_option("--mapping", v.mapping,
                     "JSON with final_mapping (and initial_mapping)");
  verify->add_option("--tol", v.tol)->check(CLI::Range(0.0, 1.0));
  verify->add_option("--seed", v.seed, "Probe seed for wide registers");

  BenchArgs b;
  CLI::App* bench = app.add_subcommand(
      "bench", "Compare the pipeline with the naive baseline on random circuits");
  bench->add_option("--layouts", b.layouts, "Comma-separated layout names");
  bench->add_option("--qubits", b.qubits, "Qubit range a..b");
  bench->add_option("--depths", b.depths, "Layer range a..b");
  bench->add_option("--trials", b.trials);
  bench->add_option("--seed", b.seed);
  bench->add_option("--csv", b.csv, "Per-record CSV output")->required();
  bench->add_option("--json", b.json, "Aggregate JSON (default: CSV path + .json)");
  bench->add_option("--lookahead", b.lookahead)->check(CLI::PositiveNumber);
  bench->add_flag("--timing", b.timing,
                  "Record wall-clock times (makes the CSV non-reproducible)");

  std::vector<const char*> argv{"qadapt"};
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (transpile->parsed()) {
    return cmd_transpile(t, out, err);
  }
  if (verify->parsed()) {
    return cmd_verify(v, out, err);
  }
  return cmd_bench(b, out, err);
}

}  // namespace qadapt::cli
