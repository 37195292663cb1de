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

#include <cstddef>
#include <span>
#include <vector>

namespace qadapt {

struct SearchLimits {
  std::size_t max_nodes = 4096;
  /// 0 means twice the coupling graph size.
  std::size_t max_depth = 0;
};

struct GlobalAdjustResult {
  /// Whole-program relabeling; the empty mapping when nothing beats it.
  QubitMapping mapping;
  double estimated_cost = 0.0;
  /// Mappings that were scored, the empty mapping included.
  std::size_t mappings_scored = 0;
  std::size_t nodes = 0;
  bool truncated = false;
};

/// Transpositions that make `illegal` adjacent without breaking any CNOT in
/// `prefix`: the control swapped with a neighbour of the target, then the
/// target swapped with a neighbour of the control, each side in ascending
/// neighbour order.
std::vector<QubitMapping> candidate_mappings(Cnot illegal,
                                             const CouplingGraph& graph,
                                             std::span<const Cnot> prefix);

/// Depth-first search for a relabeling of the whole program that legalizes
/// as many CNOTs as possible for free. Every mapping reached (fully legal ones
/// at cost 0, dead ends at their estimate_cost) is scored and the cheapest
/// wins; the empty mapping is scored last so it only wins when strictly
/// better. Never inserts gates.
GlobalAdjustResult global_adjust(const Circuit& circuit,
                                 const CouplingGraph& graph,
                                 const SearchLimits& limits = {});

}  // namespace qadapt
