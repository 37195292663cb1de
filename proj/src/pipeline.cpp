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

#include "qadapt/pipeline.hpp"

#include "qadapt/gate_merge.hpp"

#include <stdexcept>

namespace qadapt {

void PipelineConfig::validate() const {
  if (lookahead < 1) {
    throw std::invalid_argument("lookahead depth must be at least 1");
  }
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw std::invalid_argument("verification tolerance must lie in (0, 1)");
  }
}

namespace {

class StageLog {
public:
  explicit StageLog(std::vector<StageDelta>& out) : out_(out) {}

  Circuit run(const std::string& name, const Circuit& in, auto&& stage) {
    Circuit out = stage(in);
    out_.push_back({name, gate_counts(in), gate_counts(out)});
    return out;
  }

private:
  std::vector<StageDelta>& out_;
};

}  // namespace

TranspileResult transpile(const Circuit& circuit, const CouplingGraph& graph,
                          const PipelineConfig& config) {
  config.validate();
  if (circuit.num_qubits() > graph.size()) {
    throw std::invalid_argument(
        "circuit uses " + std::to_string(circuit.num_qubits()) +
        " qubits but the coupling graph has " + std::to_string(graph.size()));
  }
  graph.require_connected();

  TranspileResult result;
  result.cost_before = cost(circuit);
  StageLog log(result.stages);
  Circuit current = circuit.widened(graph.size());

  if (config.use_global) {
    const GlobalAdjustResult global =
        global_adjust(current, graph, config.global_limits);
    result.initial_mapping = global.mapping;
    result.global_nodes = global.nodes;
    current = log.run("global", current, [&](const Circuit& c) {
      return apply_mapping(c, global.mapping, 0);
    });
  }
  result.final_mapping = result.initial_mapping;

  if (config.use_local) {
    current = log.run("local", current, [&](const Circuit& c) {
      LocalAdjustResult local = local_adjust(c, graph, {config.lookahead});
      result.final_mapping = result.initial_mapping.then(local.final_mapping);
      result.swaps = local.swaps;
      result.search_cost = local.search_cost;
      return std::move(local.circuit);
    });
  }
  current = log.run("direction", current, [&](const Circuit& c) {
    return fix_directions(c, graph);
  });
  if (config.use_merge) {
    current = log.run("merge", current, merge_single_qubit_runs);
  }
  result.cost_after = cost(current);
  result.circuit = std::move(current);
  return result;
}

TranspileResult transpile_baseline(const Circuit& circuit,
                                   const CouplingGraph& graph, bool merge) {
  TranspileResult result;
  result.cost_before = cost(circuit);
  StageLog log(result.stages);
  Circuit current = log.run("naive", circuit, [&](const Circuit& c) {
    return naive_route(c, graph);
  });
  current = log.run("direction", current, [&](const Circuit& c) {
    return fix_directions(c, graph);
  });
  if (merge) {
    current = log.run("merge", current, merge_single_qubit_runs);
  }
  result.cost_after = cost(current);
  result.circuit = std::move(current);
  return result;
}

std::size_t count_illegal_cnots(const Circuit& circuit,
                                const CouplingGraph& graph,
                                bool respect_direction) {
  std::size_t illegal = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.is_cnot() &&
        !graph.is_legal_cnot(g.control(), g.target(), respect_direction)) {
      ++illegal;
    }
  }
  return illegal;
}

}  // namespace qadapt
