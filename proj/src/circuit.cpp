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

#include "qadapt/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qadapt {

std::string to_string(GateKind kind) {
  switch (kind) {
  case GateKind::U1:
    return "u1";
  case GateKind::U2:
    return "u2";
  case GateKind::U3:
    return "u3";
  case GateKind::CNOT:
    return "cx";
  case GateKind::H:
    return "h";
  case GateKind::Measure:
    return "measure";
  case GateKind::Barrier:
    return "barrier";
  }
  return "?";
}

Gate Gate::u1(double lambda, Qubit q) {
  return {GateKind::U1, {lambda}, {q}, std::nullopt};
}
Gate Gate::u2(double phi, double lambda, Qubit q) {
  return {GateKind::U2, {phi, lambda}, {q}, std::nullopt};
}
Gate Gate::u3(double theta, double phi, double lambda, Qubit q) {
  return {GateKind::U3, {theta, phi, lambda}, {q}, std::nullopt};
}
Gate Gate::cnot(Qubit control, Qubit target) {
  return {GateKind::CNOT, {}, {control, target}, std::nullopt};
}
Gate Gate::h(Qubit q) { return {GateKind::H, {}, {q}, std::nullopt}; }
Gate Gate::measure(Qubit q, Clbit c) {
  return {GateKind::Measure, {}, {q}, c};
}
Gate Gate::barrier(std::vector<Qubit> qubits) {
  return {GateKind::Barrier, {}, std::move(qubits), std::nullopt};
}

bool Gate::is_single_qubit_unitary() const {
  return kind == GateKind::U1 || kind == GateKind::U2 ||
         kind == GateKind::U3 || kind == GateKind::H;
}

void Gate::validate() const {
  std::size_t n_params = 0;
  std::size_t n_qubits = 1;
  switch (kind) {
  case GateKind::U1:
    n_params = 1;
    break;
  case GateKind::U2:
    n_params = 2;
    break;
  case GateKind::U3:
    n_params = 3;
    break;
  case GateKind::CNOT:
    n_qubits = 2;
    break;
  case GateKind::H:
  case GateKind::Measure:
    break;
  case GateKind::Barrier:
    n_qubits = qubits.size();
    break;
  }
  if (params.size() != n_params) {
    throw std::invalid_argument(to_string(kind) + " expects " +
                                std::to_string(n_params) + " parameters");
  }
  if (qubits.size() != n_qubits || (kind == GateKind::Barrier && qubits.empty())) {
    throw std::invalid_argument(to_string(kind) + " has wrong qubit arity");
  }
  for (const double p : params) {
    if (!std::isfinite(p)) {
      throw std::invalid_argument(to_string(kind) + " has non-finite angle");
    }
  }
  if (kind == GateKind::CNOT && qubits[0] == qubits[1]) {
    throw std::invalid_argument("cx control and target coincide");
  }
  if ((kind == GateKind::Measure) != clbit.has_value()) {
    throw std::invalid_argument("only measure carries a classical bit");
  }
}

Mat2 single_qubit_matrix(const Gate& gate) {
  const auto u3 = [](double theta, double phi, double lambda) -> Mat2 {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {Complex(c, 0), -std::polar(s, lambda), std::polar(s, phi),
            std::polar(c, phi + lambda)};
  };
  switch (gate.kind) {
  case GateKind::U1:
    return {Complex(1, 0), Complex(0, 0), Complex(0, 0),
            std::polar(1.0, gate.params[0])};
  case GateKind::U2:
    return u3(std::numbers::pi / 2, gate.params[0], gate.params[1]);
  case GateKind::U3:
    return u3(gate.params[0], gate.params[1], gate.params[2]);
  case GateKind::H: {
    const double r = std::numbers::sqrt2 / 2;
    return {Complex(r, 0), Complex(r, 0), Complex(r, 0), Complex(-r, 0)};
  }
  default:
    throw std::invalid_argument(to_string(gate.kind) +
                                " is not a single-qubit unitary");
  }
}

Circuit::Circuit(std::size_t num_qubits, std::size_t num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits) {}

Circuit& Circuit::add(Gate gate) {
  gate.validate();
  for (const Qubit q : gate.qubits) {
    if (q >= num_qubits_) {
      throw std::out_of_range("qubit index " + std::to_string(q) +
                              " out of range for " +
                              std::to_string(num_qubits_) + " qubits");
    }
  }
  if (gate.clbit && *gate.clbit >= num_clbits_) {
    throw std::out_of_range("clbit index " + std::to_string(*gate.clbit) +
                            " out of range for " +
                            std::to_string(num_clbits_) + " clbits");
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::add_swap(Qubit a, Qubit b) {
  add(Gate::cnot(a, b));
  add(Gate::cnot(b, a));
  add(Gate::cnot(a, b));
  return *this;
}

Circuit Circuit::widened(std::size_t num_qubits) const {
  if (num_qubits < num_qubits_) {
    throw std::invalid_argument("cannot shrink a circuit register");
  }
  Circuit out = *this;
  out.num_qubits_ = num_qubits;
  return out;
}

QubitMapping QubitMapping::from_pairs(const std::map<Qubit, Qubit>& pairs) {
  std::set<Qubit> keys;
  std::set<Qubit> images;
  QubitMapping m;
  for (const auto& [from, to] : pairs) {
    keys.insert(from);
    images.insert(to);
    if (from != to) {
      m.pairs_.emplace(from, to);
    }
  }
  // Unlisted indices are fixed points, so the listed images must be exactly
  // the listed keys.
  if (keys != images) {
    throw std::invalid_argument("qubit mapping is not a bijection");
  }
  return m;
}

QubitMapping QubitMapping::transposition(Qubit a, Qubit b) {
  QubitMapping m;
  if (a != b) {
    m.pairs_ = {{a, b}, {b, a}};
  }
  return m;
}

QubitMapping QubitMapping::from_permutation(std::span<const Qubit> perm) {
  std::map<Qubit, Qubit> pairs;
  for (std::size_t q = 0; q < perm.size(); ++q) {
    pairs.emplace(static_cast<Qubit>(q), perm[q]);
  }
  return from_pairs(pairs);
}

Qubit QubitMapping::operator()(Qubit q) const {
  const auto it = pairs_.find(q);
  return it == pairs_.end() ? q : it->second;
}

QubitMapping QubitMapping::then(const QubitMapping& next) const {
  std::map<Qubit, Qubit> pairs;
  for (const auto& [from, _] : pairs_) {
    pairs[from] = next((*this)(from));
  }
  for (const auto& [from, _] : next.pairs_) {
    if (!pairs.contains(from)) {
      pairs[from] = next((*this)(from));
    }
  }
  return from_pairs(pairs);
}

QubitMapping QubitMapping::inverse() const {
  QubitMapping m;
  for (const auto& [from, to] : pairs_) {
    m.pairs_.emplace(to, from);
  }
  return m;
}

std::vector<Qubit> QubitMapping::to_permutation(std::size_t n) const {
  std::vector<Qubit> perm(n);
  for (std::size_t q = 0; q < n; ++q) {
    perm[q] = (*this)(static_cast<Qubit>(q));
    if (perm[q] >= n) {
      throw std::out_of_range("mapping image exceeds register size");
    }
  }
  return perm;
}

std::string QubitMapping::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [from, to] : pairs_) {
    os << (first ? "" : ", ") << from << ':' << to;
    first = false;
  }
  os << '}';
  return os.str();
}

Circuit apply_mapping(const Circuit& circuit, const QubitMapping& mapping,
                      std::size_t from_gate) {
  if (from_gate > circuit.size()) {
    throw std::out_of_range("apply_mapping start index past end of circuit");
  }
  Circuit out(circuit.num_qubits(), circuit.num_clbits());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    Gate g = circuit[i];
    if (i >= from_gate) {
      for (Qubit& q : g.qubits) {
        q = mapping(q);
      }
    }
    out.add(std::move(g));
  }
  return out;
}

GateCounts gate_counts(const Circuit& circuit) {
  GateCounts counts;
  for (const Gate& g : circuit.gates()) {
    if (g.is_cnot()) {
      ++counts.cnot;
    } else if (g.is_single_qubit_unitary()) {
      ++counts.single;
    }
  }
  return counts;
}

double cost(const Circuit& circuit, const CostModel& model) {
  const GateCounts counts = gate_counts(circuit);
  return static_cast<double>(counts.cnot) * model.cnot_weight +
         static_cast<double>(counts.single) * model.single_weight;
}

std::vector<Cnot> extract_cnots(const Circuit& circuit) {
  std::vector<Cnot> cnots;
  for (const Gate& g : circuit.gates()) {
    if (g.is_cnot()) {
      cnots.push_back({g.control(), g.target()});
    }
  }
  return cnots;
}

}  // namespace qadapt
