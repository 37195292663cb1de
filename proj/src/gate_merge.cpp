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

#include "qadapt/gate_merge.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qadapt {

namespace {

constexpr double kPi = std::numbers::pi;

// SU(2) rotations: Rz(a) = diag(e^{-ia/2}, e^{ia/2}).
Mat2 rz(double a) {
  return {std::polar(1.0, -a / 2), Complex(0, 0), Complex(0, 0),
          std::polar(1.0, a / 2)};
}

Mat2 ry(double a) {
  const double c = std::cos(a / 2);
  const double s = std::sin(a / 2);
  return {Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0)};
}

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

/// u1/u2/u3/h as (theta, phi, lambda) of the u3 parameterization.
ZYTriple as_triple(const Gate& g) {
  switch (g.kind) {
  case GateKind::U1:
    return {0.0, 0.0, g.params[0]};
  case GateKind::U2:
    return {kPi / 2, g.params[0], g.params[1]};
  case GateKind::U3:
    return {g.params[0], g.params[1], g.params[2]};
  case GateKind::H:
    return {kPi / 2, 0.0, kPi};
  default:
    throw std::invalid_argument(to_string(g.kind) +
                                " is not a single-qubit unitary");
  }
}

/// Canonical gate for u3(theta, phi, lambda): theta folded into [0, pi],
/// then downgraded to u1/u2 where the rotation allows.
Gate make_single(double theta, double phi, double lambda, Qubit q) {
  theta = wrap_angle(theta);
  if (theta < 0) {
    // Ry(-t) = Rz(pi) Ry(t) Rz(-pi) up to phase.
    theta = -theta;
    phi += kPi;
    lambda -= kPi;
  }
  if (theta < kMergeTolerance) {
    return Gate::u1(wrap_angle(phi + lambda), q);
  }
  if (std::abs(theta - kPi / 2) < kMergeTolerance) {
    return Gate::u2(wrap_angle(phi), wrap_angle(lambda), q);
  }
  return Gate::u3(theta, wrap_angle(phi), wrap_angle(lambda), q);
}

}  // namespace

double wrap_angle(double angle) {
  double r = std::remainder(angle, 2 * kPi);  // [-pi, pi]
  if (r <= -kPi) {
    r += 2 * kPi;
  }
  return r;
}

ZYTriple yz_to_zy(double theta1, double mid, double theta2) {
  const Mat2 m = mul(ry(theta1), mul(rz(mid), ry(theta2)));
  // m = [[cos(b/2) e^{-i(a+g)/2}, .], [sin(b/2) e^{i(a-g)/2}, .]]
  const double c = std::abs(m[0]);
  const double s = std::abs(m[2]);
  const double beta = 2 * std::atan2(s, c);
  if (s < kMergeTolerance) {
    return {0.0, wrap_angle(-2 * std::arg(m[0])), 0.0};
  }
  if (c < kMergeTolerance) {
    return {kPi, wrap_angle(2 * std::arg(m[2])), 0.0};
  }
  const double sum = -2 * std::arg(m[0]);
  const double diff = 2 * std::arg(m[2]);
  return {beta, wrap_angle((sum + diff) / 2), wrap_angle((sum - diff) / 2)};
}

Gate merge_adjacent(const Gate& later, const Gate& earlier) {
  if (!later.is_single_qubit_unitary() || !earlier.is_single_qubit_unitary()) {
    throw std::invalid_argument("merge_adjacent needs single-qubit unitaries");
  }
  const Qubit q = earlier.qubits[0];
  if (later.qubits[0] != q) {
    throw std::invalid_argument("merge_adjacent operands act on different qubits");
  }
  const ZYTriple l = as_triple(later);
  const ZYTriple e = as_triple(earlier);
  // Z rotations commute into the neighbouring Z slot.
  if (later.kind == GateKind::U1) {
    return make_single(e.theta, e.phi + l.lambda, e.lambda, q);
  }
  if (earlier.kind == GateKind::U1) {
    return make_single(l.theta, l.phi, l.lambda + e.lambda, q);
  }
  const ZYTriple inner = yz_to_zy(l.theta, l.lambda + e.phi, e.theta);
  return make_single(inner.theta, l.phi + inner.phi, inner.lambda + e.lambda,
                     q);
}

bool is_identity_gate(const Gate& gate) {
  if (!gate.is_single_qubit_unitary()) {
    return false;
  }
  const Gate g = make_single(as_triple(gate).theta, as_triple(gate).phi,
                             as_triple(gate).lambda, gate.qubits[0]);
  return g.kind == GateKind::U1 && std::abs(g.params[0]) < kMergeTolerance;
}

Circuit merge_single_qubit_runs(const Circuit& circuit) {
  const auto& gates = circuit.gates();
  std::vector<std::optional<Gate>> slots(gates.begin(), gates.end());
  std::vector<std::vector<std::size_t>> runs(circuit.num_qubits());

  const auto flush = [&](Qubit q) {
    auto& run = runs[q];
    if (run.empty()) {
      return;
    }
    if (run.size() == 1) {
      if (is_identity_gate(gates[run[0]])) {
        slots[run[0]].reset();
      }
      run.clear();
      return;
    }
    Gate acc = gates[run[0]];
    for (std::size_t k = 1; k < run.size(); ++k) {
      acc = merge_adjacent(gates[run[k]], acc);
    }
    for (const std::size_t i : run) {
      slots[i].reset();
    }
    if (!is_identity_gate(acc)) {
      slots[run.back()] = std::move(acc);
    }
    run.clear();
  };

  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.is_single_qubit_unitary()) {
      runs[g.qubits[0]].push_back(i);
    } else {
      for (const Qubit q : g.qubits) {
        flush(q);
      }
    }
  }
  for (std::size_t q = 0; q < runs.size(); ++q) {
    flush(static_cast<Qubit>(q));
  }

  Circuit out(circuit.num_qubits(), circuit.num_clbits());
  for (auto& slot : slots) {
    if (slot) {
      out.add(std::move(*slot));
    }
  }
  return out;
}

}  // namespace qadapt
