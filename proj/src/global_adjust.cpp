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

#include "qadapt/global_adjust.hpp"

#include "qadapt/local_adjust.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qadapt {

namespace {

bool all_adjacent(std::span<const Cnot> cnots, const CouplingGraph& graph) {
  return std::ranges::all_of(cnots, [&](const Cnot& c) {
    return graph.adjacent(c.control, c.target);
  });
}

Cnot relabel(const Cnot& c, const QubitMapping& m) {
  return {m(c.control), m(c.target)};
}

class GlobalSearch {
public:
  GlobalSearch(std::vector<Cnot> cnots, const CouplingGraph& graph,
               const SearchLimits& limits)
      : cnots_(std::move(cnots)), graph_(graph),
        max_nodes_(limits.max_nodes),
        max_depth_(limits.max_depth ? limits.max_depth : 2 * graph.size()) {}

  GlobalAdjustResult run() {
    if (!all_adjacent(cnots_, graph_)) {
      adjust({}, 0);
    }
    // The unadjusted program is always a candidate; scoring it last lets
    // any explored mapping with an equal score win.
    score({});
    result_.mapping = best_;
    result_.estimated_cost = best_cost_;
    return result_;
  }

private:
  std::vector<Cnot> relabeled(const QubitMapping& m) const {
    std::vector<Cnot> out;
    out.reserve(cnots_.size());
    for (const Cnot& c : cnots_) {
      out.push_back(relabel(c, m));
    }
    return out;
  }

  void record(const QubitMapping& m, double cost) {
    ++result_.mappings_scored;
    if (cost < best_cost_) {
      best_cost_ = cost;
      best_ = m;
    }
  }

  void score(const QubitMapping& m) {
    record(m, estimate_cost(illegal_intermediates(relabeled(m), graph_)));
  }

  void adjust(const QubitMapping& amap, std::size_t depth) {
    if (result_.nodes >= max_nodes_) {
      result_.truncated = true;
      return;
    }
    ++result_.nodes;
    const std::vector<Cnot> current = relabeled(amap);
    const auto first_illegal =
        std::ranges::find_if(current, [&](const Cnot& c) {
          return !graph_.adjacent(c.control, c.target);
        });
    if (first_illegal == current.end()) {
      record(amap, 0.0);
      return;
    }
    const auto prefix_len =
        static_cast<std::size_t>(first_illegal - current.begin());
    const std::vector<QubitMapping> candidates = candidate_mappings(
        *first_illegal, graph_,
        std::span<const Cnot>(current).first(prefix_len));
    if (candidates.empty()) {
      record(amap, estimate_cost(illegal_intermediates(current, graph_)));
      return;
    }
    for (const QubitMapping& t : candidates) {
      const QubitMapping next = amap.then(t);
      if (all_adjacent(relabeled(next), graph_)) {
        record(next, 0.0);
      } else if (depth + 1 >= max_depth_ || result_.nodes >= max_nodes_) {
        result_.truncated = true;
        score(next);
      } else {
        adjust(next, depth + 1);
      }
    }
  }

  std::vector<Cnot> cnots_;
  const CouplingGraph& graph_;
  std::size_t max_nodes_;
  std::size_t max_depth_;
  GlobalAdjustResult result_;
  QubitMapping best_;
  double best_cost_ = std::numeric_limits<double>::infinity();
};

}  // namespace

std::vector<QubitMapping> candidate_mappings(Cnot illegal,
                                             const CouplingGraph& graph,
                                             std::span<const Cnot> prefix) {
  std::vector<QubitMapping> out;
  const auto consider = [&](Qubit moved, Qubit onto) {
    QubitMapping t = QubitMapping::transposition(moved, onto);
    if (t.is_identity()) {
      return;
    }
    for (const Cnot& c : prefix) {
      const Cnot r = relabel(c, t);
      if (!graph.adjacent(r.control, r.target)) {
        return;
      }
    }
    if (std::ranges::find(out, t) == out.end()) {
      out.push_back(std::move(t));
    }
  };
  for (const Qubit a : graph.adjacent(illegal.target)) {
    consider(illegal.control, a);
  }
  for (const Qubit b : graph.adjacent(illegal.control)) {
    consider(illegal.target, b);
  }
  return out;
}

GlobalAdjustResult global_adjust(const Circuit& circuit,
                                 const CouplingGraph& graph,
                                 const SearchLimits& limits) {
  if (circuit.num_qubits() > graph.size()) {
    throw std::invalid_argument("circuit has more qubits than the coupling graph");
  }
  graph.require_connected();
  return GlobalSearch(extract_cnots(circuit), graph, limits).run();
}

}  // namespace qadapt
