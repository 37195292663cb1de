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
#include "qadapt/pipeline.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qadapt {

/// Random circuit of `su4_depth` layers. Each layer pairs the qubits at
/// random and gives every pair the 3-CNOT two-qubit template with random u3
/// gates around each CNOT (8 u3 + 3 cx per pair); an odd qubit out gets one
/// u3. Deterministic in (n, su4_depth, seed).
Circuit gen_random_circuit(std::size_t n, std::size_t su4_depth,
                           std::uint64_t seed);

/// Seed of the circuit for one grid cell and trial. Layout-independent, so
/// every layout sees the same circuits.
std::uint64_t trial_seed(std::uint64_t base, std::size_t n,
                         std::size_t su4_depth, std::size_t trial);

struct BenchRecord {
  LayoutKind layout = LayoutKind::Linear;
  std::size_t n = 0;
  std::size_t su4_depth = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double cost_original = 0.0;
  double cost_pipeline = 0.0;
  double cost_baseline = 0.0;
  /// Only filled when timing is enabled.
  std::optional<double> time_pipeline_s;
  std::optional<double> time_baseline_s;
  bool verified = false;
  bool pipeline_used_swaps = true;
  std::string failure;
};

struct BenchConfig {
  std::vector<LayoutKind> layouts;
  std::size_t qubits_min = 3;
  std::size_t qubits_max = 8;
  std::size_t depth_min = 1;
  std::size_t depth_max = 6;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  bool timing = false;
  PipelineConfig pipeline;

  void validate() const;
};

/// Per-layout means of cost / original cost (and baseline time / pipeline
/// time when timed) over verified records.
struct LayoutAggregate {
  LayoutKind layout = LayoutKind::Linear;
  std::size_t records = 0;
  double pipeline_cost_ratio = 0.0;
  double baseline_cost_ratio = 0.0;
  std::optional<double> efficiency;
};

/// Per-(n, depth) sums over verified records: baseline cost / pipeline cost
/// and baseline time / pipeline time.
struct CellAggregate {
  std::optional<LayoutKind> layout;  // nullopt: all layouts pooled
  std::size_t n = 0;
  std::size_t su4_depth = 0;
  std::size_t records = 0;
  double cost_ratio = 0.0;
  std::optional<double> efficiency;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  std::vector<LayoutAggregate> layouts;
  std::vector<CellAggregate> cells;
  std::size_t verification_failures = 0;
};

BenchReport run_benchmark(const BenchConfig& config);

/// Aggregates recomputed from records, skipping unverified ones.
void aggregate(BenchReport& report, const std::vector<LayoutKind>& layouts);

std::string records_to_csv(const std::vector<BenchRecord>& records);
std::string report_to_json(const BenchReport& report, const BenchConfig& config);

}  // namespace qadapt
