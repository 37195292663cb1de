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

#include "qadapt/simulator.hpp"

#include "qadapt/local_adjust.hpp"
#include "qadapt/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qadapt {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxSimulatedQubits) {
    throw std::invalid_argument("cannot simulate " + std::to_string(n) +
                                " qubits (limit " +
                                std::to_string(kMaxSimulatedQubits) + ")");
  }
}

}  // namespace

Statevector::Statevector(std::size_t num_qubits, std::uint64_t basis)
    : num_qubits_(num_qubits) {
  check_size(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Complex(0, 0));
  if (basis >= amps_.size()) {
    throw std::out_of_range("basis index out of range");
  }
  amps_[basis] = 1.0;
}

Statevector::Statevector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  check_size(num_qubits);
  if (amps_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
}

double Statevector::norm() const {
  double total = 0.0;
  for (const Complex& a : amps_) {
    total += std::norm(a);
  }
  return std::sqrt(total);
}

void Statevector::apply_single(const Mat2& m, Qubit q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) {
      continue;
    }
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | bit];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | bit] = m[2] * a0 + m[3] * a1;
  }
}

void Statevector::apply_cnot(Qubit control, Qubit target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amps_[i], amps_[i | tbit]);
    }
  }
}

void Statevector::apply(const Gate& gate) {
  for (const Qubit q : gate.qubits) {
    if (q >= num_qubits_) {
      throw std::out_of_range("gate qubit outside the simulated register");
    }
  }
  if (gate.is_cnot()) {
    apply_cnot(gate.control(), gate.target());
  } else if (gate.is_single_qubit_unitary()) {
    apply_single(single_qubit_matrix(gate), gate.qubits[0]);
  }
}

Statevector Statevector::permuted(const QubitMapping& mapping) const {
  const std::vector<Qubit> perm = mapping.to_permutation(num_qubits_);
  std::vector<Complex> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    std::size_t j = 0;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
      if (i >> q & 1U) {
        j |= std::size_t{1} << perm[q];
      }
    }
    out[j] = amps_[i];
  }
  return Statevector(num_qubits_, std::move(out));
}

double fidelity(const Statevector& a, const Statevector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("fidelity of states with different sizes");
  }
  Complex overlap(0, 0);
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    overlap += std::conj(a[i]) * b[i];
  }
  return std::abs(overlap);
}

Statevector simulate(const Circuit& circuit, Statevector initial) {
  if (initial.num_qubits() != circuit.num_qubits()) {
    throw std::invalid_argument("initial state size does not match circuit");
  }
  for (const Gate& g : circuit.gates()) {
    initial.apply(g);
  }
  return initial;
}

Statevector simulate(const Circuit& circuit, std::uint64_t initial_basis) {
  return simulate(circuit, Statevector(circuit.num_qubits(), initial_basis));
}

EquivalenceReport check_equivalence(const Circuit& original,
                                    const Circuit& transpiled,
                                    const QubitMapping& final_map, double tol,
                                    const QubitMapping& initial_map,
                                    std::uint64_t seed) {
  const std::size_t n = transpiled.num_qubits();
  if (original.num_qubits() > n) {
    throw std::invalid_argument("original circuit is wider than the transpiled one");
  }
  check_size(n);
  const Circuit padded = original.widened(n);

  std::vector<Statevector> probes;
  if (n <= 6) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      probes.emplace_back(n, b);
    }
  } else {
    SplitMix64 rng(seed);
    for (int k = 0; k < 32; ++k) {
      probes.emplace_back(n, rng.below(std::uint64_t{1} << n));
    }
    for (int k = 0; k < 8; ++k) {
      Statevector s(n);
      for (std::size_t q = 0; q < n; ++q) {
        const Gate g = Gate::u3(rng.angle(), rng.angle(), rng.angle(),
                                static_cast<Qubit>(q));
        s.apply(g);
      }
      probes.push_back(std::move(s));
    }
  }

  EquivalenceReport report;
  report.seed = seed;
  report.probes = probes.size();
  for (const Statevector& probe : probes) {
    const Statevector want = simulate(padded, probe).permuted(final_map);
    const Statevector got = simulate(transpiled, probe.permuted(initial_map));
    report.worst_fidelity = std::min(report.worst_fidelity, fidelity(want, got));
  }
  report.equivalent = report.worst_fidelity >= 1.0 - tol;
  return report;
}

bool equivalent(const Circuit& original, const Circuit& transpiled,
                const QubitMapping& final_map, double tol,
                const QubitMapping& initial_map) {
  return check_equivalence(original, transpiled, final_map, tol, initial_map)
      .equivalent;
}

namespace {

/// Walks every mover choice on explicit circuits. Deliberately shares no
/// search code with the router: chains are rebuilt from shortest_path and
/// the remainder is relabeled with apply_mapping.
class RouteEnumerator {
public:
  RouteEnumerator(const Circuit& circuit, const CouplingGraph& graph)
      : graph_(graph), base_cost_(cost(circuit)) {}

  void walk(const Circuit& c, std::size_t from, double search,
            std::size_t depth) {
    std::size_t i = from;
    while (i < c.size() && !(c[i].is_cnot() &&
                             !graph_.adjacent(c[i].control(), c[i].target()))) {
      ++i;
    }
    if (i == c.size()) {
      ++bound_.leaves;
      bound_.depth = std::max(bound_.depth, depth);
      bound_.search_cost = std::min(bound_.search_cost, search);
      bound_.emitted_cost = std::min(
          bound_.emitted_cost, cost(fix_directions(c, graph_)) - base_cost_);
      return;
    }
    if (depth == kMaxBruteForceDepth) {
      throw std::invalid_argument("brute-force routing limited to " +
                                  std::to_string(kMaxBruteForceDepth) +
                                  " illegal CNOTs per branch");
    }
    const Qubit control = c[i].control();
    const Qubit target = c[i].target();
    const std::vector<Qubit> path = graph_.shortest_path(control, target);
    const std::size_t m = path.size() - 2;
    for (const bool move_control : {true, false}) {
      // Vertices the moved qubit visits, starting where it sits.
      std::vector<Qubit> walk_path;
      if (move_control) {
        walk_path.assign(path.begin(), path.end() - 1);
      } else {
        walk_path.assign(path.rbegin(), path.rend() - 1);
      }
      Circuit next(c.num_qubits(), c.num_clbits());
      for (std::size_t k = 0; k < i; ++k) {
        next.add(c[k]);
      }
      QubitMapping moved;
      for (std::size_t k = 0; k + 1 < walk_path.size(); ++k) {
        next.add_swap(walk_path[k], walk_path[k + 1]);
        moved = moved.then(
            QubitMapping::transposition(walk_path[k], walk_path[k + 1]));
      }
      Circuit tail(c.num_qubits(), c.num_clbits());
      for (std::size_t k = i; k < c.size(); ++k) {
        tail.add(c[k]);
      }
      tail = apply_mapping(tail, moved, 0);
      for (const Gate& g : tail.gates()) {
        next.add(g);
      }
      const double step = 34.0 * static_cast<double>(m) + (move_control ? 4.0 : 0.0);
      walk(next, i + 3 * m + 1, search + step, depth + 1);
    }
  }

  RouteCostBound result() const { return bound_; }

private:
  const CouplingGraph& graph_;
  double base_cost_;
  RouteCostBound bound_{std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity(), 0, 0};
};

}  // namespace

RouteCostBound brute_force_route_cost(const Circuit& circuit,
                                      const CouplingGraph& graph) {
  graph.require_connected();
  RouteEnumerator e(circuit, graph);
  e.walk(circuit.widened(graph.size()), 0, 0.0, 0);
  return e.result();
}

}  // namespace qadapt
