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

#pragma once

#include "qadapt/circuit.hpp"
#include "qadapt/coupling.hpp"
#include "qadapt/global_adjust.hpp"
#include "qadapt/local_adjust.hpp"
#include "qadapt/simulator.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qadapt {

struct PipelineConfig {
  std::size_t lookahead = kDefaultLookahead;
  SearchLimits global_limits;
  bool use_global = true;
  bool use_local = true;
  bool use_merge = true;
  double tolerance = 1e-6;
  std::uint64_t seed = kDefaultProbeSeed;

  /// Throws std::invalid_argument on lookahead 0 or a tolerance outside (0, 1).
  void validate() const;
};

struct StageDelta {
  std::string stage;
  GateCounts before;
  GateCounts after;
};

struct TranspileResult {
  Circuit circuit;
  /// Where each logical qubit starts (the whole-program relabeling).
  QubitMapping initial_mapping;
  /// Where each logical qubit ends up.
  QubitMapping final_mapping;
  double cost_before = 0.0;
  double cost_after = 0.0;
  std::size_t swaps = 0;
  double search_cost = 0.0;
  std::size_t global_nodes = 0;
  std::vector<StageDelta> stages;
};

/// Global relabeling, SWAP-chain routing, direction fixing and single-qubit
/// fusion, in that order. The circuit is widened to the graph size first.
TranspileResult transpile(const Circuit& circuit, const CouplingGraph& graph,
                          const PipelineConfig& config = {});

/// naive_route, direction fixing and (optionally) the same fusion stage.
/// Both mappings are the identity.
TranspileResult transpile_baseline(const Circuit& circuit,
                                   const CouplingGraph& graph,
                                   bool merge = true);

std::size_t count_illegal_cnots(const Circuit& circuit,
                                const CouplingGraph& graph,
                                bool respect_direction);

}  // namespace qadapt
