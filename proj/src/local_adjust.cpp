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

#include "qadapt/local_adjust.hpp"

#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace qadapt {

QubitMapping SwapChain::induced_mapping() const {
  if (path.size() < 2) {
    return {};
  }
  std::map<Qubit, Qubit> pairs;
  pairs[path.front()] = path.back();
  for (std::size_t i = 1; i < path.size(); ++i) {
    pairs[path[i]] = path[i - 1];
  }
  return QubitMapping::from_pairs(pairs);
}

double SwapChain::search_cost() const {
  return kSwapCost * static_cast<double>(swap_count()) +
         (mover == Mover::Control ? kControlMovePenalty : 0.0);
}

SwapChain make_swap_chain(Cnot cnot, Mover mover, const CouplingGraph& graph) {
  std::vector<Qubit> full = graph.shortest_path(cnot.control, cnot.target);
  SwapChain chain;
  chain.mover = mover;
  full.pop_back();
  if (mover == Mover::Control) {
    chain.path = std::move(full);
  } else {
    // Same intermediate vertices, walked from the target side.
    chain.path.push_back(cnot.target);
    chain.path.insert(chain.path.end(), full.rbegin(), full.rend() - 1);
  }
  return chain;
}

double estimate_cost(std::span<const std::size_t> intermediates) {
  const auto n = static_cast<double>(intermediates.size());
  double total = 0.0;
  for (std::size_t i = 0; i < intermediates.size(); ++i) {
    const double factor = (n - static_cast<double>(i + 1)) / n;
    total += factor * factor * static_cast<double>(intermediates[i]) *
             kSwapCost;
  }
  return total;
}

std::vector<std::size_t> illegal_intermediates(std::span<const Cnot> cnots,
                                               const CouplingGraph& graph) {
  std::vector<std::size_t> out;
  for (const Cnot& c : cnots) {
    if (!graph.adjacent(c.control, c.target)) {
      out.push_back(graph.intermediate_count(c.control, c.target));
    }
  }
  return out;
}

namespace {

/// Depth-limited search over mover decisions. CNOTs in `rest` are stored by
/// their labels at the root; `pos` maps such a label to its current physical
/// position.
class Lookahead {
public:
  Lookahead(std::span<const Cnot> rest, const CouplingGraph& graph,
            std::size_t depth)
      : rest_(rest), graph_(graph), depth_(depth) {}

  LookaheadChoice run(Cnot illegal) {
    std::vector<Qubit> pos(graph_.size());
    std::iota(pos.begin(), pos.end(), Qubit{0});
    explore(illegal, 0, pos, 0.0, 1, std::nullopt);
    LookaheadChoice choice;
    choice.mover = best_mover_;
    choice.chain = make_swap_chain(illegal, best_mover_, graph_);
    choice.mapping = choice.chain.induced_mapping();
    choice.cost = best_cost_;
    choice.leaves = leaves_;
    return choice;
  }

private:
  [[nodiscard]] Cnot at(const std::vector<Qubit>& pos, std::size_t j) const {
    return {pos[rest_[j].control], pos[rest_[j].target]};
  }

  void leaf(double cost, Mover root_mover) {
    ++leaves_;
    if (cost < best_cost_) {
      best_cost_ = cost;
      best_mover_ = root_mover;
    }
  }

  void explore(Cnot illegal, std::size_t next, const std::vector<Qubit>& pos,
               double cost, std::size_t d, std::optional<Mover> root_mover) {
    for (const Mover mover : {Mover::Control, Mover::Target}) {
      const SwapChain chain = make_swap_chain(illegal, mover, graph_);
      const double branch_cost = cost + chain.search_cost();
      const Mover root = root_mover.value_or(mover);

      const QubitMapping sigma = chain.induced_mapping();
      std::vector<Qubit> moved(pos.size());
      for (std::size_t l = 0; l < pos.size(); ++l) {
        moved[l] = sigma(pos[l]);
      }

      std::size_t j = next;
      while (j < rest_.size() &&
             graph_.adjacent(at(moved, j).control, at(moved, j).target)) {
        ++j;
      }
      if (j == rest_.size()) {
        leaf(branch_cost, root);
      } else if (d >= depth_) {
        std::vector<Cnot> residual;
        residual.reserve(rest_.size() - j);
        for (std::size_t k = j; k < rest_.size(); ++k) {
          residual.push_back(at(moved, k));
        }
        leaf(branch_cost +
                 estimate_cost(illegal_intermediates(residual, graph_)),
             root);
      } else {
        explore(at(moved, j), j + 1, moved, branch_cost, d + 1, root);
      }
    }
  }

  std::span<const Cnot> rest_;
  const CouplingGraph& graph_;
  std::size_t depth_;
  double best_cost_ = std::numeric_limits<double>::infinity();
  Mover best_mover_ = Mover::Target;
  std::size_t leaves_ = 0;
};

}  // namespace

LookaheadChoice lookahead_choose(Cnot illegal, std::span<const Cnot> rest,
                                 const CouplingGraph& graph,
                                 std::size_t depth) {
  if (depth == 0) {
    throw std::invalid_argument("lookahead depth must be at least 1");
  }
  if (graph.adjacent(illegal.control, illegal.target)) {
    throw std::invalid_argument("lookahead_choose called on a legal CNOT");
  }
  return Lookahead(rest, graph, depth).run(illegal);
}

LocalAdjustResult local_adjust(const Circuit& circuit,
                               const CouplingGraph& graph,
                               const LocalAdjustOptions& options) {
  graph.require_connected();
  if (circuit.num_qubits() > graph.size()) {
    throw std::invalid_argument("circuit has more qubits than the coupling graph");
  }
  const Circuit input = circuit.widened(graph.size());
  const std::vector<Cnot> cnots = extract_cnots(input);

  std::vector<Qubit> pos(graph.size());
  std::iota(pos.begin(), pos.end(), Qubit{0});

  LocalAdjustResult result;
  result.circuit = Circuit(graph.size(), input.num_clbits());
  std::size_t cnot_index = 0;
  for (const Gate& gate : input.gates()) {
    Gate out = gate;
    for (Qubit& q : out.qubits) {
      q = pos[q];
    }
    if (gate.is_cnot()) {
      ++cnot_index;
      if (!graph.adjacent(out.control(), out.target())) {
        std::vector<Cnot> rest;
        rest.reserve(cnots.size() - cnot_index);
        for (std::size_t j = cnot_index; j < cnots.size(); ++j) {
          rest.push_back({pos[cnots[j].control], pos[cnots[j].target]});
        }
        const LookaheadChoice choice = lookahead_choose(
            {out.control(), out.target()}, rest, graph, options.lookahead);
        const auto& path = choice.chain.path;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          result.circuit.add_swap(path[i], path[i + 1]);
        }
        for (Qubit& p : pos) {
          p = choice.mapping(p);
        }
        for (Qubit& q : out.qubits) {
          q = choice.mapping(q);
        }
        result.search_cost += choice.chain.search_cost();
        result.swaps += choice.chain.swap_count();
        ++result.decisions;
      }
    }
    result.circuit.add(std::move(out));
  }
  result.final_mapping = QubitMapping::from_permutation(pos);
  return result;
}

Circuit fix_directions(const Circuit& circuit, const CouplingGraph& graph) {
  Circuit out(circuit.num_qubits(), circuit.num_clbits());
  for (const Gate& gate : circuit.gates()) {
    if (!gate.is_cnot() ||
        graph.is_legal_cnot(gate.control(), gate.target(), true)) {
      out.add(gate);
      continue;
    }
    const Qubit c = gate.control();
    const Qubit t = gate.target();
    if (!graph.is_legal_cnot(t, c, true)) {
      throw std::logic_error("cx q[" + std::to_string(c) + "],q[" +
                             std::to_string(t) +
                             "] is not an edge in either orientation");
    }
    out.add(Gate::h(c)).add(Gate::h(t)).add(Gate::cnot(t, c));
    out.add(Gate::h(c)).add(Gate::h(t));
  }
  return out;
}

Circuit naive_route(const Circuit& circuit, const CouplingGraph& graph) {
  graph.require_connected();
  if (circuit.num_qubits() > graph.size()) {
    throw std::invalid_argument("circuit has more qubits than the coupling graph");
  }
  Circuit out(graph.size(), circuit.num_clbits());
  for (const Gate& gate : circuit.gates()) {
    if (!gate.is_cnot() || graph.adjacent(gate.control(), gate.target())) {
      out.add(gate);
      continue;
    }
    const std::vector<Qubit> path =
        graph.shortest_path(gate.control(), gate.target());
    const std::size_t last = path.size() - 2;  // control's final position
    for (std::size_t i = 0; i < last; ++i) {
      out.add_swap(path[i], path[i + 1]);
    }
    out.add(Gate::cnot(path[last], gate.target()));
    for (std::size_t i = last; i-- > 0;) {
      out.add_swap(path[i], path[i + 1]);
    }
  }
  return out;
}

}  // namespace qadapt
