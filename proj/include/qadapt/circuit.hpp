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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qadapt {

using Qubit = std::uint32_t;
using Clbit = std::uint32_t;
using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

enum class GateKind { U1, U2, U3, CNOT, H, Measure, Barrier };

std::string to_string(GateKind kind);

/// One operation of the {u1, u2, u3, cx} basis plus the h/measure/barrier
/// statements the QASM front end accepts. Angles are radians.
struct Gate {
  GateKind kind = GateKind::U1;
  std::vector<double> params;
  std::vector<Qubit> qubits;
  std::optional<Clbit> clbit;

  static Gate u1(double lambda, Qubit q);
  static Gate u2(double phi, double lambda, Qubit q);
  static Gate u3(double theta, double phi, double lambda, Qubit q);
  static Gate cnot(Qubit control, Qubit target);
  static Gate h(Qubit q);
  static Gate measure(Qubit q, Clbit c);
  static Gate barrier(std::vector<Qubit> qubits);

  /// u1/u2/u3/h.
  [[nodiscard]] bool is_single_qubit_unitary() const;
  [[nodiscard]] bool is_cnot() const { return kind == GateKind::CNOT; }
  [[nodiscard]] Qubit control() const { return qubits.at(0); }
  [[nodiscard]] Qubit target() const { return qubits.at(1); }

  /// Throws std::invalid_argument if arity, parameter count or angles are
  /// malformed.
  void validate() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Exact 2x2 matrix of a single-qubit unitary gate (u1/u2/u3 per the usual
/// Open-QASM definitions, h as the Hadamard matrix).
Mat2 single_qubit_matrix(const Gate& gate);

/// Ordered gate list over a fixed qubit/clbit register. Gates are validated
/// against the register sizes on insertion.
class Circuit {
public:
  Circuit() = default;
  Circuit(std::size_t num_qubits, std::size_t num_clbits = 0);

  [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::size_t num_clbits() const { return num_clbits_; }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] bool empty() const { return gates_.empty(); }
  [[nodiscard]] const Gate& operator[](std::size_t i) const {
    return gates_[i];
  }

  Circuit& add(Gate gate);
  Circuit& add_swap(Qubit a, Qubit b);

  /// Same gates over a larger register; used to pad a program to the
  /// coupling graph size.
  [[nodiscard]] Circuit widened(std::size_t num_qubits) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  std::size_t num_qubits_ = 0;
  std::size_t num_clbits_ = 0;
  std::vector<Gate> gates_;
};

/// Bijection on qubit indices. Indices not listed map to themselves, so the
/// empty mapping is the identity.
class QubitMapping {
public:
  QubitMapping() = default;

  /// Throws std::invalid_argument unless the pairs form a bijection.
  static QubitMapping from_pairs(const std::map<Qubit, Qubit>& pairs);
  static QubitMapping transposition(Qubit a, Qubit b);
  /// `perm[q]` is the image of q.
  static QubitMapping from_permutation(std::span<const Qubit> perm);

  [[nodiscard]] Qubit operator()(Qubit q) const;
  [[nodiscard]] bool is_identity() const { return pairs_.empty(); }
  [[nodiscard]] const std::map<Qubit, Qubit>& pairs() const { return pairs_; }

  /// Mapping that applies `*this` first and then `next`.
  [[nodiscard]] QubitMapping then(const QubitMapping& next) const;
  [[nodiscard]] QubitMapping inverse() const;
  [[nodiscard]] std::vector<Qubit> to_permutation(std::size_t n) const;

  /// "{1:3, 3:1}"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const QubitMapping&, const QubitMapping&) = default;

private:
  std::map<Qubit, Qubit> pairs_;  // fixed points are never stored
};

/// Rewrites the qubit operands of every gate at index >= from_gate through
/// `mapping`. Classical bits are left untouched.
Circuit apply_mapping(const Circuit& circuit, const QubitMapping& mapping,
                      std::size_t from_gate = 0);

struct GateCounts {
  std::size_t cnot = 0;
  std::size_t single = 0;
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Measure and barrier are not counted.
GateCounts gate_counts(const Circuit& circuit);

/// Weighted gate cost. A SWAP expands to 3 CNOT + 4 H, hence 34.
struct CostModel {
  double cnot_weight = 10.0;
  double single_weight = 1.0;
  [[nodiscard]] double swap_weight() const {
    return 3 * cnot_weight + 4 * single_weight;
  }
};

double cost(const Circuit& circuit, const CostModel& model = {});

/// The CNOTs of a circuit as (control, target) pairs in program order.
struct Cnot {
  Qubit control = 0;
  Qubit target = 0;
  friend bool operator==(const Cnot&, const Cnot&) = default;
};

std::vector<Cnot> extract_cnots(const Circuit& circuit);

}  // namespace qadapt
