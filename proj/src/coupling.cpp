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

#include "qadapt/coupling.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace qadapt {

namespace {
constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
}  // namespace

std::string to_string(LayoutKind kind) {
  switch (kind) {
  case LayoutKind::Linear:
    return "linear";
  case LayoutKind::Circle:
    return "circle";
  case LayoutKind::Central:
    return "central";
  case LayoutKind::Neighbour:
    return "neighbour";
  }
  return "?";
}

LayoutKind parse_layout_kind(const std::string& name) {
  if (name == "linear") {
    return LayoutKind::Linear;
  }
  if (name == "circle" || name == "circular") {
    return LayoutKind::Circle;
  }
  if (name == "central" || name == "star") {
    return LayoutKind::Central;
  }
  if (name == "neighbour" || name == "neighbor" || name == "grid") {
    return LayoutKind::Neighbour;
  }
  throw std::invalid_argument("unknown layout '" + name + "'");
}

CouplingGraph::CouplingGraph(std::size_t n, std::set<Edge> edges,
                             bool directed)
    : n_(n), directed_(directed), edges_(std::move(edges)),
      adjacency_(n), adjacent_(n, std::vector<bool>(n, false)),
      legal_(n, std::vector<bool>(n, false)),
      dist_(n, std::vector<std::size_t>(n, kUnreachable)) {
  for (const auto& [c, t] : edges_) {
    if (c >= n || t >= n) {
      throw std::invalid_argument("coupling edge endpoint out of range");
    }
    if (c == t) {
      throw std::invalid_argument("coupling graph has a self-loop on " +
                                  std::to_string(c));
    }
    adjacent_[c][t] = adjacent_[t][c] = true;
    legal_[c][t] = true;
    if (!directed_) {
      legal_[t][c] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (adjacent_[a][b]) {
        adjacency_[a].push_back(static_cast<Qubit>(b));
      }
    }
  }
  // All-pairs BFS; graphs here are small.
  for (std::size_t src = 0; src < n; ++src) {
    auto& d = dist_[src];
    d[src] = 0;
    std::deque<Qubit> queue{static_cast<Qubit>(src)};
    while (!queue.empty()) {
      const Qubit u = queue.front();
      queue.pop_front();
      for (const Qubit v : adjacency_[u]) {
        if (d[v] == kUnreachable) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  connected_ = n > 0 && std::ranges::none_of(dist_[0], [](std::size_t d) {
                 return d == kUnreachable;
               });
}

void CouplingGraph::check_index(Qubit q) const {
  if (q >= n_) {
    throw std::out_of_range("qubit " + std::to_string(q) +
                            " out of range for coupling graph of size " +
                            std::to_string(n_));
  }
}

void CouplingGraph::require_connected() const {
  if (!connected_) {
    throw DisconnectedGraphError("coupling graph is not connected");
  }
}

bool CouplingGraph::is_legal_cnot(Qubit control, Qubit target,
                                  bool respect_direction) const {
  check_index(control);
  check_index(target);
  return respect_direction ? legal_[control][target]
                           : adjacent_[control][target];
}

const std::vector<Qubit>& CouplingGraph::adjacent(Qubit q) const {
  check_index(q);
  return adjacency_[q];
}

bool CouplingGraph::adjacent(Qubit a, Qubit b) const {
  check_index(a);
  check_index(b);
  return adjacent_[a][b];
}

std::size_t CouplingGraph::distance(Qubit a, Qubit b) const {
  check_index(a);
  check_index(b);
  if (dist_[a][b] == kUnreachable) {
    throw DisconnectedGraphError("no path between " + std::to_string(a) +
                                 " and " + std::to_string(b));
  }
  return dist_[a][b];
}

std::vector<Qubit> CouplingGraph::shortest_path(Qubit a, Qubit b) const {
  std::size_t remaining = distance(a, b);
  std::vector<Qubit> path{a};
  Qubit cur = a;
  // Greedy descent on the distance field to b picks the smallest vertex at
  // every step, which yields the lexicographically smallest shortest path.
  while (remaining > 0) {
    for (const Qubit v : adjacency_[cur]) {
      if (dist_[v][b] == remaining - 1) {
        cur = v;
        break;
      }
    }
    path.push_back(cur);
    --remaining;
  }
  return path;
}

std::size_t CouplingGraph::intermediate_count(Qubit a, Qubit b) const {
  const std::size_t d = distance(a, b);
  return d == 0 ? 0 : d - 1;
}

CouplingGraph make_layout(LayoutKind kind, std::size_t n) {
  const std::size_t min_n = kind == LayoutKind::Circle ? 3 : 2;
  if (n < min_n) {
    throw std::invalid_argument(to_string(kind) + " layout needs at least " +
                                std::to_string(min_n) + " qubits");
  }
  std::set<CouplingGraph::Edge> edges;
  const auto q = [](std::size_t i) { return static_cast<Qubit>(i); };
  switch (kind) {
  case LayoutKind::Linear:
  case LayoutKind::Circle:
    for (std::size_t i = 0; i + 1 < n; ++i) {
      edges.emplace(q(i), q(i + 1));
    }
    if (kind == LayoutKind::Circle) {
      edges.emplace(q(n - 1), q(0));
    }
    break;
  case LayoutKind::Central:
    for (std::size_t i = 1; i < n; ++i) {
      edges.emplace(q(0), q(i));
    }
    break;
  case LayoutKind::Neighbour: {
    const auto width =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    for (std::size_t i = 0; i < n; ++i) {
      if ((i + 1) % width != 0 && i + 1 < n) {
        edges.emplace(q(i), q(i + 1));
      }
      if (i + width < n) {
        edges.emplace(q(i), q(i + width));
      }
    }
    break;
  }
  }
  return CouplingGraph(n, std::move(edges), false);
}

CouplingGraph coupling_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("coupling JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw std::invalid_argument(
        "coupling JSON must be an object with \"n\" and \"edges\"");
  }
  const auto n = j.at("n").get<std::size_t>();
  const bool directed = j.value("directed", false);
  std::set<CouplingGraph::Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("coupling edge must be a [control, target] pair");
    }
    edges.emplace(e[0].get<Qubit>(), e[1].get<Qubit>());
  }
  return CouplingGraph(n, std::move(edges), directed);
}

std::string coupling_to_json(const CouplingGraph& graph) {
  nlohmann::json j;
  j["n"] = graph.size();
  j["directed"] = graph.directed();
  j["edges"] = nlohmann::json::array();
  for (const auto& [c, t] : graph.edges()) {
    j["edges"].push_back({c, t});
  }
  return j.dump();
}

}  // namespace qadapt
