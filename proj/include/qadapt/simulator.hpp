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
#include <cstdint>
#include <vector>

namespace qadapt {

inline constexpr std::size_t kMaxSimulatedQubits = 16;
inline constexpr std::uint64_t kDefaultProbeSeed = 0x5eed'0f'9a7e5ULL;

/// Dense state over n qubits; qubit 0 is the least significant bit of the
/// basis index.
class Statevector {
public:
  explicit Statevector(std::size_t num_qubits, std::uint64_t basis = 0);
  Statevector(std::size_t num_qubits, std::vector<Complex> amplitudes);

  [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] const std::vector<Complex>& amplitudes() const {
    return amps_;
  }
  [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }
  [[nodiscard]] double norm() const;

  void apply(const Gate& gate);
  void apply_single(const Mat2& m, Qubit q);
  void apply_cnot(Qubit control, Qubit target);

  /// Moves the state of qubit q to qubit mapping(q).
  [[nodiscard]] Statevector permuted(const QubitMapping& mapping) const;

private:
  std::size_t num_qubits_;
  std::vector<Complex> amps_;
};

/// |<a|b>|
double fidelity(const Statevector& a, const Statevector& b);

/// Runs the circuit in program order. Measure and barrier act as identity.
/// Throws std::invalid_argument above kMaxSimulatedQubits.
Statevector simulate(const Circuit& circuit, Statevector initial);
Statevector simulate(const Circuit& circuit, std::uint64_t initial_basis = 0);

struct EquivalenceReport {
  bool equivalent = false;
  double worst_fidelity = 1.0;
  std::size_t probes = 0;
  std::uint64_t seed = 0;
};

/// Compares `transpiled`, fed the probe with every logical qubit q placed at
/// initial_map(q), against `original` followed by the final_map permutation.
/// Probes are every basis state for n <= 6, otherwise 32 random basis states
/// and 8 random product states drawn from `seed`. The original is padded to
/// the transpiled register size.
EquivalenceReport check_equivalence(const Circuit& original,
                                    const Circuit& transpiled,
                                    const QubitMapping& final_map, double tol,
                                    const QubitMapping& initial_map = {},
                                    std::uint64_t seed = kDefaultProbeSeed);

bool equivalent(const Circuit& original, const Circuit& transpiled,
                const QubitMapping& final_map, double tol,
                const QubitMapping& initial_map = {});

struct RouteCostBound {
  /// Cheapest total search cost (34 per SWAP, +4 per control move) over
  /// every sequence of mover choices.
  double search_cost = 0.0;
  /// Cheapest weighted gate cost (10 per CNOT, 1 per single-qubit gate)
  /// added by any realization, after direction fixing.
  double emitted_cost = 0.0;
  /// Height of the decision tree: the most illegal CNOTs met on one branch.
  std::size_t depth = 0;
  std::size_t leaves = 0;
};

inline constexpr std::size_t kMaxBruteForceDepth = 12;

/// Exhaustive routing oracle: for every control/target choice at every
/// illegal CNOT it rebuilds the circuit with the SWAP chain inserted and the
/// remainder relabeled, and reports the minimum costs. Throws
/// std::invalid_argument when a branch meets more than kMaxBruteForceDepth
/// illegal CNOTs.
RouteCostBound brute_force_route_cost(const Circuit& circuit,
                                      const CouplingGraph& graph);

}  // namespace qadapt
