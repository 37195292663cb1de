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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qadapt {

/// Parse failure with the 1-based source position of the offending token.
class QasmError : public std::runtime_error {
public:
  QasmError(const std::string& what, std::size_t line, std::size_t column);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the Open-QASM 2.0 subset: a single qreg, at most one creg, and the
/// statements u1/u2/u3/cx/h/measure/barrier. Angle arguments may be
/// arithmetic over float literals and `pi`.
Circuit parse_qasm(std::string_view text);

/// Emits `OPENQASM 2.0;` source with registers named q and c. Angles are
/// printed with 17 significant digits so parse_qasm reproduces them exactly.
std::string emit_qasm(const Circuit& circuit);

}  // namespace qadapt
