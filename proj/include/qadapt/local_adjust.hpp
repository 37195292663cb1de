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

/// Search-cost units charged per SWAP (3 CNOT + 4 H at weights 10 and 1).
inline constexpr double kSwapCost = 34.0;
/// Extra search cost charged when the control qubit is the one moved.
inline constexpr double kControlMovePenalty = 4.0;
inline constexpr std::size_t kDefaultLookahead = 4;

enum class Mover { Control, Target };

/// SWAP chain that walks one endpoint of a CNOT along the shortest path until
/// it sits next to the other endpoint.
struct SwapChain {
  Mover mover = Mover::Target;
  /// Moved qubit first, ending at the stationary qubit's neighbour. Every
  /// consecutive pair is one SWAP.
  std::vector<Qubit> path;

  [[nodiscard]] std::size_t swap_count() const {
    return path.empty() ? 0 : path.size() - 1;
  }
  /// Where each physical position's state ends up after the chain: the moved
  /// qubit goes to the end of the path, every other path vertex steps back
  /// by one.
  [[nodiscard]] QubitMapping induced_mapping() const;
  /// Search cost: kSwapCost per SWAP plus the control penalty.
  [[nodiscard]] double search_cost() const;
};

SwapChain make_swap_chain(Cnot cnot, Mover mover, const CouplingGraph& graph);

/// Discounted cost of the illegal CNOTs still ahead: the i-th of n (1-based)
/// with m_i intermediate qubits contributes ((n - i) / n)^2 * m_i * 34.
double estimate_cost(std::span<const std::size_t> intermediates);

/// Intermediate counts of the CNOTs in `cnots` that are not adjacent on
/// `graph`, in order. Feeds estimate_cost.
std::vector<std::size_t> illegal_intermediates(std::span<const Cnot> cnots,
                                               const CouplingGraph& graph);

struct LookaheadChoice {
  Mover mover = Mover::Target;
  SwapChain chain;
  /// Relabeling induced by the chosen chain.
  QubitMapping mapping;
  /// Exact cost over the explored levels plus the residual estimate of the
  /// winning leaf.
  double cost = 0.0;
  std::size_t leaves = 0;
};

/// Explores both movers for `illegal` and for each of the next depth - 1
/// illegal CNOTs in `rest` it causes, estimating the remainder at the
/// horizon. Returns the first decision of the cheapest leaf, with ties going
/// to the leaf explored first (control before target at every level).
/// `illegal` and `rest` use physical qubit labels.
LookaheadChoice lookahead_choose(Cnot illegal, std::span<const Cnot> rest,
                                 const CouplingGraph& graph,
                                 std::size_t depth = kDefaultLookahead);

struct LocalAdjustOptions {
  std::size_t lookahead = kDefaultLookahead;
};

struct LocalAdjustResult {
  Circuit circuit;
  /// Position of every input label at the end of the circuit.
  QubitMapping final_mapping;
  /// Sum of the chosen chains' search costs.
  double search_cost = 0.0;
  std::size_t swaps = 0;
  std::size_t decisions = 0;
};

/// Legalizes every CNOT on the undirected view by inserting SWAP chains and
/// relabeling everything after them. The result never has an undirected
/// illegal CNOT. Throws DisconnectedGraphError.
LocalAdjustResult local_adjust(const Circuit& circuit,
                               const CouplingGraph& graph,
                               const LocalAdjustOptions& options = {});

/// Replaces every CNOT whose orientation is not an edge with the H-conjugated
/// reverse CNOT. Throws std::logic_error on a CNOT that is illegal in both
/// orientations.
Circuit fix_directions(const Circuit& circuit, const CouplingGraph& graph);

/// Baseline router: swaps the control toward the target, applies the CNOT
/// and swaps back, leaving the qubit layout unchanged.
Circuit naive_route(const Circuit& circuit, const CouplingGraph& graph);

}  // namespace qadapt
