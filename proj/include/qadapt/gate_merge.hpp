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

namespace qadapt {

/// Angles below this are treated as exactly zero (or pi/2 for the u2
/// downgrade) when canonicalizing fused gates.
inline constexpr double kMergeTolerance = 1e-9;

/// Rz(phi) * Ry(theta) * Rz(lambda), theta in [0, pi], phi and lambda in
/// (-pi, pi].
struct ZYTriple {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
};

/// Rewrites Ry(theta1) * Rz(mid) * Ry(theta2) as Rz(phi) * Ry(theta) *
/// Rz(lambda), up to global phase. In the degenerate cases the Z angles are
/// folded into phi: theta ~ 0 gives (phi + lambda, 0, 0) and theta ~ pi
/// gives lambda = 0.
ZYTriple yz_to_zy(double theta1, double mid, double theta2);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

/// Single gate equal to later * earlier up to global phase. Both operands
/// must be single-qubit unitaries on the same qubit. The result is a u1 when
/// the rotation angle vanishes, a u2 when it is pi/2, and a u3 otherwise.
Gate merge_adjacent(const Gate& later, const Gate& earlier);

/// True if the gate is the identity up to global phase (within
/// kMergeTolerance).
bool is_identity_gate(const Gate& gate);

/// Fuses each run of single-qubit gates that no CNOT, measure or barrier on
/// the same qubit interrupts into at most one gate, placed where the run's
/// last gate was. A run of one gate is kept as written unless it is the
/// identity; runs that fuse to the identity disappear.
Circuit merge_single_qubit_runs(const Circuit& circuit);

}  // namespace qadapt
