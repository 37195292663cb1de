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

#include "qadapt/bench.hpp"

#include "qadapt/random.hpp"
#include "qadapt/simulator.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qadapt {

Circuit gen_random_circuit(std::size_t n, std::size_t su4_depth,
                           std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("random circuits need at least 2 qubits");
  }
  if (su4_depth < 1) {
    throw std::invalid_argument("random circuits need at least 1 layer");
  }
  SplitMix64 rng(seed);
  Circuit c(n, 0);
  const auto u3 = [&](Qubit q) {
    const double theta = rng.angle();
    const double phi = rng.angle();
    const double lambda = rng.angle();
    c.add(Gate::u3(theta, phi, lambda, q));
  };
  std::vector<Qubit> order(n);
  for (std::size_t layer = 0; layer < su4_depth; ++layer) {
    std::iota(order.begin(), order.end(), Qubit{0});
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(order[i], order[rng.below(i + 1)]);
    }
    for (std::size_t p = 0; p + 1 < n; p += 2) {
      const Qubit a = order[p];
      const Qubit b = order[p + 1];
      u3(a);
      u3(b);
      c.add(Gate::cnot(a, b));
      u3(a);
      u3(b);
      c.add(Gate::cnot(b, a));
      u3(a);
      u3(b);
      c.add(Gate::cnot(a, b));
      u3(a);
      u3(b);
    }
    if (n % 2 == 1) {
      u3(order[n - 1]);
    }
  }
  return c;
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t n,
                         std::size_t su4_depth, std::size_t trial) {
  return mix_seed(mix_seed(mix_seed(base, n), su4_depth), trial);
}

void BenchConfig::validate() const {
  if (layouts.empty()) {
    throw std::invalid_argument("no layouts selected");
  }
  if (qubits_min > qubits_max || depth_min > depth_max) {
    throw std::invalid_argument("empty qubit or depth range");
  }
  if (qubits_min < 2 || depth_min < 1 || trials < 1) {
    throw std::invalid_argument("qubits >= 2, depth >= 1 and trials >= 1 required");
  }
  pipeline.validate();
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BenchRecord run_one(LayoutKind kind, std::size_t n, std::size_t d,
                    std::size_t trial, const BenchConfig& config) {
  BenchRecord r;
  r.layout = kind;
  r.n = n;
  r.su4_depth = d;
  r.trial = trial;
  r.seed = trial_seed(config.seed, n, d, trial);
  const Circuit original = gen_random_circuit(n, d, r.seed);
  const CouplingGraph graph = make_layout(kind, n);
  r.cost_original = cost(original);
  try {
    auto start = Clock::now();
    const TranspileResult ours = transpile(original, graph, config.pipeline);
    const double t_ours = seconds_since(start);
    start = Clock::now();
    const TranspileResult base = transpile_baseline(original, graph);
    const double t_base = seconds_since(start);
    if (config.timing) {
      r.time_pipeline_s = t_ours;
      r.time_baseline_s = t_base;
    }
    r.cost_pipeline = ours.cost_after;
    r.cost_baseline = base.cost_after;
    r.pipeline_used_swaps = ours.swaps > 0;

    const double tol = config.pipeline.tolerance;
    if (count_illegal_cnots(ours.circuit, graph, true) != 0) {
      r.failure = "pipeline output has illegal CNOTs";
    } else if (count_illegal_cnots(base.circuit, graph, true) != 0) {
      r.failure = "baseline output has illegal CNOTs";
    } else if (!check_equivalence(original, ours.circuit, ours.final_mapping,
                                  tol, ours.initial_mapping, config.pipeline.seed)
                    .equivalent) {
      r.failure = "pipeline output not equivalent";
    } else if (!check_equivalence(original, base.circuit, {}, tol, {},
                                  config.pipeline.seed)
                    .equivalent) {
      r.failure = "baseline output not equivalent";
    }
  } catch (const std::exception& e) {
    r.failure = e.what();
  }
  r.verified = r.failure.empty();
  return r;
}

std::string number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

void aggregate(BenchReport& report, const std::vector<LayoutKind>& layouts) {
  report.layouts.clear();
  report.cells.clear();
  report.verification_failures = 0;

  struct CellSums {
    std::size_t records = 0;
    double pipeline = 0.0;
    double baseline = 0.0;
    double t_pipeline = 0.0;
    double t_baseline = 0.0;
    bool timed = true;
  };
  // Key: (layout index or -1 for pooled, n, depth).
  std::map<std::tuple<int, std::size_t, std::size_t>, CellSums> cells;

  for (std::size_t li = 0; li < layouts.size(); ++li) {
    LayoutAggregate agg;
    agg.layout = layouts[li];
    double eff = 0.0;
    bool timed = true;
    for (const BenchRecord& r : report.records) {
      if (r.layout != layouts[li] || !r.verified) {
        continue;
      }
      ++agg.records;
      agg.pipeline_cost_ratio += r.cost_pipeline / r.cost_original;
      agg.baseline_cost_ratio += r.cost_baseline / r.cost_original;
      if (r.time_pipeline_s && r.time_baseline_s && *r.time_pipeline_s > 0) {
        eff += *r.time_baseline_s / *r.time_pipeline_s;
      } else {
        timed = false;
      }
      for (const int key : {static_cast<int>(li), -1}) {
        CellSums& s = cells[{key, r.n, r.su4_depth}];
        ++s.records;
        s.pipeline += r.cost_pipeline;
        s.baseline += r.cost_baseline;
        if (r.time_pipeline_s && r.time_baseline_s) {
          s.t_pipeline += *r.time_pipeline_s;
          s.t_baseline += *r.time_baseline_s;
        } else {
          s.timed = false;
        }
      }
    }
    if (agg.records > 0) {
      const auto count = static_cast<double>(agg.records);
      agg.pipeline_cost_ratio /= count;
      agg.baseline_cost_ratio /= count;
      if (timed) {
        agg.efficiency = eff / count;
      }
    }
    report.layouts.push_back(agg);
  }
  for (const BenchRecord& r : report.records) {
    if (!r.verified) {
      ++report.verification_failures;
    }
  }
  for (const auto& [key, s] : cells) {
    const auto& [li, n, d] = key;
    CellAggregate cell;
    if (li >= 0) {
      cell.layout = layouts[static_cast<std::size_t>(li)];
    }
    cell.n = n;
    cell.su4_depth = d;
    cell.records = s.records;
    cell.cost_ratio = s.baseline / s.pipeline;
    if (s.timed && s.t_pipeline > 0) {
      cell.efficiency = s.t_baseline / s.t_pipeline;
    }
    report.cells.push_back(cell);
  }
}

BenchReport run_benchmark(const BenchConfig& config) {
  config.validate();
  BenchReport report;
  for (const LayoutKind kind : config.layouts) {
    for (std::size_t n = config.qubits_min; n <= config.qubits_max; ++n) {
      for (std::size_t d = config.depth_min; d <= config.depth_max; ++d) {
        for (std::size_t t = 0; t < config.trials; ++t) {
          report.records.push_back(run_one(kind, n, d, t, config));
        }
      }
    }
  }
  aggregate(report, config.layouts);
  return report;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "layout,n,su4_depth,trial,seed,cost_original,cost_pipeline,"
        "cost_baseline,time_pipeline_s,time_baseline_s,verified\n";
  for (const BenchRecord& r : records) {
    os << to_string(r.layout) << ',' << r.n << ',' << r.su4_depth << ','
       << r.trial << ',' << r.seed << ',' << number(r.cost_original) << ','
       << number(r.cost_pipeline) << ',' << number(r.cost_baseline) << ','
       << (r.time_pipeline_s ? number(*r.time_pipeline_s) : "") << ','
       << (r.time_baseline_s ? number(*r.time_baseline_s) : "") << ','
       << (r.verified ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string report_to_json(const BenchReport& report,
                           const BenchConfig& config) {
  using nlohmann::json;
  const auto opt = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  json j;
  j["baseline"] = "naive swap-in/swap-out routing + direction fixing + "
                  "single-qubit fusion";
  j["seed"] = config.seed;
  j["probe_seed"] = config.pipeline.seed;
  j["lookahead"] = config.pipeline.lookahead;
  j["tolerance"] = config.pipeline.tolerance;
  j["records"] = report.records.size();
  j["verification_failures"] = report.verification_failures;
  j["layouts"] = json::object();
  for (const LayoutAggregate& a : report.layouts) {
    j["layouts"][to_string(a.layout)] = {
        {"records", a.records},
        {"pipeline_cost_ratio", a.pipeline_cost_ratio},
        {"baseline_cost_ratio", a.baseline_cost_ratio},
        {"efficiency", opt(a.efficiency)}};
  }
  j["cells"] = json::array();
  for (const CellAggregate& c : report.cells) {
    j["cells"].push_back(
        {{"layout", c.layout ? to_string(*c.layout) : "all"},
         {"n", c.n},
         {"su4_depth", c.su4_depth},
         {"records", c.records},
         {"cost", c.cost_ratio},
         {"efficiency", opt(c.efficiency)}});
  }
  j["failures"] = json::array();
  for (const BenchRecord& r : report.records) {
    if (!r.verified) {
      j["failures"].push_back({{"layout", to_string(r.layout)},
                               {"n", r.n},
                               {"su4_depth", r.su4_depth},
                               {"trial", r.trial},
                               {"seed", r.seed},
                               {"reason", r.failure}});
    }
  }
  return j.dump(2);
}

}  // namespace qadapt
