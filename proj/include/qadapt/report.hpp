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
#include "qadapt/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace qadapt {

/// {"1": 3, "3": 1}; fixed points omitted.
nlohmann::json mapping_to_json(const QubitMapping& mapping);
QubitMapping mapping_from_json(const nlohmann::json& j);

/// Transpile report: initial/final mappings, costs, per-stage gate counts.
nlohmann::json transpile_report(const TranspileResult& result,
                                double elapsed_s);

/// Reads the mappings back out of a transpile report (or any object with a
/// "final_mapping" and optional "initial_mapping" key).
struct MappingPair {
  QubitMapping initial;
  QubitMapping final;
};
MappingPair mappings_from_report(const nlohmann::json& report);

}  // namespace qadapt
