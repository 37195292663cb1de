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
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qadapt {

/// Raised by routing queries on a graph whose undirected view is not
/// connected.
class DisconnectedGraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class LayoutKind { Linear, Circle, Central, Neighbour };

std::string to_string(LayoutKind kind);
/// Accepts "linear", "circle", "central", "neighbour" (and "neighbor").
LayoutKind parse_layout_kind(const std::string& name);

/// Hardware coupling graph. Edges are ordered (control, target) pairs; when
/// `directed` is false both orientations of every edge are legal CNOTs.
/// Routing always works on the undirected view.
class CouplingGraph {
public:
  using Edge = std::pair<Qubit, Qubit>;

  CouplingGraph() = default;
  CouplingGraph(std::size_t n, std::set<Edge> edges, bool directed);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] bool directed() const { return directed_; }
  [[nodiscard]] const std::set<Edge>& edges() const { return edges_; }
  [[nodiscard]] bool connected() const { return connected_; }

  [[nodiscard]] bool is_legal_cnot(Qubit control, Qubit target,
                                   bool respect_direction) const;
  /// Undirected adjacency in ascending order.
  [[nodiscard]] const std::vector<Qubit>& adjacent(Qubit q) const;
  [[nodiscard]] bool adjacent(Qubit a, Qubit b) const;
  /// Undirected hop count.
  [[nodiscard]] std::size_t distance(Qubit a, Qubit b) const;
  /// Minimum-hop path a..b on the undirected view; among equal-length paths
  /// the lexicographically smallest vertex sequence.
  [[nodiscard]] std::vector<Qubit> shortest_path(Qubit a, Qubit b) const;
  /// Path vertices strictly between a and b: distance(a, b) - 1 of them.
  [[nodiscard]] std::size_t intermediate_count(Qubit a, Qubit b) const;

  /// Throws DisconnectedGraphError unless the undirected view is connected.
  void require_connected() const;

private:
  void check_index(Qubit q) const;

  std::size_t n_ = 0;
  bool directed_ = false;
  bool connected_ = false;
  std::set<Edge> edges_;
  std::vector<std::vector<Qubit>> adjacency_;
  std::vector<std::vector<bool>> adjacent_;
  std::vector<std::vector<bool>> legal_;  // respects direction
  std::vector<std::vector<std::size_t>> dist_;
};

/// Linear chain, ring, star around qubit 0, or a row-major grid of
/// ceil(sqrt(n)) columns. All undirected.
CouplingGraph make_layout(LayoutKind kind, std::size_t n);

/// {"n": int, "directed": bool, "edges": [[c, t], ...]}
CouplingGraph coupling_from_json(const std::string& text);
std::string coupling_to_json(const CouplingGraph& graph);

}  // namespace qadapt
