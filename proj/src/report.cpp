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

#include "qadapt/report.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace qadapt {

nlohmann::json mapping_to_json(const QubitMapping& mapping) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [from, to] : mapping.pairs()) {
    j[std::to_string(from)] = to;
  }
  return j;
}

QubitMapping mapping_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("mapping must be a JSON object");
  }
  std::map<Qubit, Qubit> pairs;
  for (const auto& [key, value] : j.items()) {
    Qubit from = 0;
    const auto [ptr, ec] =
        std::from_chars(key.data(), key.data() + key.size(), from);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      throw std::invalid_argument("mapping key '" + key + "' is not a qubit index");
    }
    if (!value.is_number_unsigned()) {
      throw std::invalid_argument("mapping value for '" + key +
                                  "' is not a qubit index");
    }
    pairs[from] = value.get<Qubit>();
  }
  return QubitMapping::from_pairs(pairs);
}

nlohmann::json transpile_report(const TranspileResult& result,
                                double elapsed_s) {
  nlohmann::json j;
  j["initial_mapping"] = mapping_to_json(result.initial_mapping);
  j["final_mapping"] = mapping_to_json(result.final_mapping);
  j["cost_before"] = result.cost_before;
  j["cost_after"] = result.cost_after;
  j["swaps"] = result.swaps;
  j["search_cost"] = result.search_cost;
  j["elapsed_s"] = elapsed_s;
  j["stages"] = nlohmann::json::array();
  for (const StageDelta& s : result.stages) {
    j["stages"].push_back({{"stage", s.stage},
                           {"cnot_before", s.before.cnot},
                           {"single_before", s.before.single},
                           {"cnot_after", s.after.cnot},
                           {"single_after", s.after.single},
                           {"cnot_delta", static_cast<long long>(s.after.cnot) -
                                              static_cast<long long>(s.before.cnot)},
                           {"single_delta",
                            static_cast<long long>(s.after.single) -
                                static_cast<long long>(s.before.single)}});
  }
  return j;
}

MappingPair mappings_from_report(const nlohmann::json& report) {
  if (!report.is_object() || !report.contains("final_mapping")) {
    throw std::invalid_argument("mapping file needs a \"final_mapping\" object");
  }
  MappingPair m;
  m.final = mapping_from_json(report.at("final_mapping"));
  if (report.contains("initial_mapping")) {
    m.initial = mapping_from_json(report.at("initial_mapping"));
  }
  return m;
}

}  // namespace qadapt
