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

#include "oracles.hpp"
#include "qadapt/local_adjust.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

namespace qadapt {
namespace {

using oracle::circuit_unitary;
using oracle::permutation_matrix;
using oracle::phase_distance;

/// True if `out` acts as `in` followed by moving qubit q to final(q).
bool same_up_to_relabel(const Circuit& in, const Circuit& out,
                        const QubitMapping& final) {
  const Circuit padded = in.widened(out.num_qubits());
  const auto want = permutation_matrix(final.to_permutation(out.num_qubits())) *
                    circuit_unitary(padded);
  return phase_distance(circuit_unitary(out), want) < 1e-9;
}

TEST(EstimateCost, HandValues) {
  const std::vector<std::size_t> two{1, 2};
  EXPECT_NEAR(estimate_cost(two), 8.5, 1e-12);
  const std::vector<std::size_t> three{1, 1, 1};
  EXPECT_NEAR(estimate_cost(three), 34.0 * 5.0 / 9.0, 1e-12);
  const std::vector<std::size_t> one{7};
  EXPECT_EQ(estimate_cost(one), 0.0);
  EXPECT_EQ(estimate_cost(std::vector<std::size_t>{}), 0.0);
}

TEST(EstimateCost, MonotoneInEachTerm) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::size_t> m(1 + rng() % 6);
    for (auto& x : m) {
      x = 1 + rng() % 5;
    }
    const double base = estimate_cost(m);
    m[rng() % m.size()] += 1;
    EXPECT_GE(estimate_cost(m), base);
  }
}

TEST(SwapChain, WalksFromEitherEnd) {
  const CouplingGraph line = make_layout(LayoutKind::Linear, 5);
  const SwapChain c = make_swap_chain({0, 4}, Mover::Control, line);
  EXPECT_EQ(c.path, (std::vector<Qubit>{0, 1, 2, 3}));
  EXPECT_EQ(c.swap_count(), 3U);
  EXPECT_DOUBLE_EQ(c.search_cost(), 3 * 34.0 + 4.0);
  const SwapChain t = make_swap_chain({0, 4}, Mover::Target, line);
  EXPECT_EQ(t.path, (std::vector<Qubit>{4, 3, 2, 1}));
  EXPECT_DOUBLE_EQ(t.search_cost(), 3 * 34.0);
  // The moved state lands at the end of the path.
  const QubitMapping m = t.induced_mapping();
  EXPECT_EQ(m(4), 1U);
  EXPECT_EQ(m(1), 2U);
  EXPECT_EQ(m(3), 4U);
  EXPECT_TRUE(line.adjacent(m(4), m(0)));
}

TEST(SwapChain, InducedMappingMatchesSwapGates) {
  const CouplingGraph g = make_layout(LayoutKind::Neighbour, 6);
  for (const Mover mover : {Mover::Control, Mover::Target}) {
    const SwapChain chain = make_swap_chain({0, 5}, mover, g);
    Circuit swaps(6, 0);
    for (std::size_t i = 0; i + 1 < chain.path.size(); ++i) {
      swaps.add_swap(chain.path[i], chain.path[i + 1]);
    }
    EXPECT_TRUE(same_up_to_relabel(Circuit(6, 0), swaps, chain.induced_mapping()));
  }
}

TEST(Lookahead, SingleCnotPrefersTarget) {
  const CouplingGraph line = make_layout(LayoutKind::Linear, 4);
  const LookaheadChoice c = lookahead_choose({0, 3}, {}, line);
  EXPECT_EQ(c.mover, Mover::Target);
  EXPECT_DOUBLE_EQ(c.cost, 2 * 34.0);
  EXPECT_EQ(c.leaves, 2U);
}

TEST(Lookahead, ControlWinsWhenItSavesLaterSwaps) {
  // cx(0,2) then cx(0,3) on a line: moving the control to 1 leaves the
  // second CNOT one hop shorter than moving the target would.
  const CouplingGraph line = make_layout(LayoutKind::Linear, 4);
  const std::vector<Cnot> rest{{0, 3}};
  const LookaheadChoice c = lookahead_choose({0, 2}, rest, line);
  // control: 34 + 4, then cx(1,3): target 34 -> 72
  // target: 34, then cx(0,3) with 3 unmoved: 2 swaps -> 102
  EXPECT_EQ(c.mover, Mover::Control);
  EXPECT_DOUBLE_EQ(c.cost, 72.0);
  EXPECT_EQ(c.leaves, 4U);
}

TEST(Lookahead, HorizonAddsEstimate) {
  const CouplingGraph line = make_layout(LayoutKind::Linear, 6);
  const std::vector<Cnot> rest{{0, 5}, {1, 4}, {0, 5}};
  const LookaheadChoice deep = lookahead_choose({0, 2}, rest, line, 4);
  const LookaheadChoice shallow = lookahead_choose({0, 2}, rest, line, 1);
  EXPECT_EQ(shallow.leaves, 2U);
  EXPECT_GE(deep.leaves, shallow.leaves);
  // Depth 1: target branch = 34 + estimate of the residue under its map.
  const QubitMapping m = make_swap_chain({0, 2}, Mover::Target, line).induced_mapping();
  std::vector<Cnot> residual;
  for (const Cnot& c : rest) {
    residual.push_back({m(c.control), m(c.target)});
  }
  const double target_total = 34.0 + estimate_cost(illegal_intermediates(residual, line));
  EXPECT_LE(shallow.cost, target_total);
}

/// Independent exhaustive search over mover choices for a bare CNOT list.
double exhaustive(std::vector<Cnot> cnots, const CouplingGraph& g) {
  std::size_t i = 0;
  while (i < cnots.size() && g.adjacent(cnots[i].control, cnots[i].target)) {
    ++i;
  }
  if (i == cnots.size()) {
    return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Mover mover : {Mover::Control, Mover::Target}) {
    const SwapChain chain = make_swap_chain(cnots[i], mover, g);
    const QubitMapping m = chain.induced_mapping();
    std::vector<Cnot> rest;
    for (std::size_t j = i; j < cnots.size(); ++j) {
      rest.push_back({m(cnots[j].control), m(cnots[j].target)});
    }
    best = std::min(best, chain.search_cost() + exhaustive(rest, g));
  }
  return best;
}

std::size_t tree_height(std::vector<Cnot> cnots, const CouplingGraph& g) {
  std::size_t i = 0;
  while (i < cnots.size() && g.adjacent(cnots[i].control, cnots[i].target)) {
    ++i;
  }
  if (i == cnots.size()) {
    return 0;
  }
  std::size_t h = 0;
  for (const Mover mover : {Mover::Control, Mover::Target}) {
    const QubitMapping m = make_swap_chain(cnots[i], mover, g).induced_mapping();
    std::vector<Cnot> rest;
    for (std::size_t j = i; j < cnots.size(); ++j) {
      rest.push_back({m(cnots[j].control), m(cnots[j].target)});
    }
    h = std::max(h, 1 + tree_height(rest, g));
  }
  return h;
}

TEST(Lookahead, ExactWithinHorizon) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 150) {
    const auto kind = static_cast<LayoutKind>(rng() % 4);
    const std::size_t n = 4 + rng() % 3;
    const CouplingGraph g = make_layout(kind, n);
    std::vector<Cnot> list;
    for (std::size_t k = 0; k < 2 + rng() % 5; ++k) {
      const auto a = static_cast<Qubit>(rng() % n);
      auto b = static_cast<Qubit>(rng() % (n - 1));
      b += b >= a ? 1 : 0;
      list.push_back({a, b});
    }
    const auto first = std::ranges::find_if(
        list, [&](const Cnot& c) { return !g.adjacent(c.control, c.target); });
    if (first == list.end() || tree_height(list, g) > kDefaultLookahead) {
      continue;
    }
    const std::vector<Cnot> rest(first + 1, list.end());
    const LookaheadChoice c = lookahead_choose(*first, rest, g);
    ASSERT_DOUBLE_EQ(c.cost, exhaustive(list, g)) << checked;

    Circuit circ(n, 0);
    for (const Cnot& x : list) {
      circ.add(Gate::cnot(x.control, x.target));
    }
    ASSERT_DOUBLE_EQ(local_adjust(circ, g).search_cost, exhaustive(list, g));
    ++checked;
  }
}

TEST(LocalAdjust, ChainNeedsOneSwap) {
  const CouplingGraph line = make_layout(LayoutKind::Linear, 3);
  Circuit c(3, 0);
  c.add(Gate::cnot(0, 2));
  const LocalAdjustResult r = local_adjust(c, line);
  EXPECT_EQ(r.swaps, 1U);
  EXPECT_EQ(gate_counts(r.circuit), (GateCounts{4, 0}));
  const Gate& last = r.circuit[r.circuit.size() - 1];
  EXPECT_TRUE(line.adjacent(last.control(), last.target()));
  // The target is moved (control moves cost 4 more), so 2 and 1 trade places.
  EXPECT_EQ(r.final_mapping, QubitMapping::transposition(1, 2));
  EXPECT_TRUE(same_up_to_relabel(c, r.circuit, r.final_mapping));
}

TEST(LocalAdjust, LegalCircuitUnchanged) {
  std::mt19937_64 rng(9);
  const CouplingGraph line = make_layout(LayoutKind::Linear, 4);
  Circuit c(4, 0);
  for (int i = 0; i < 20; ++i) {
    const auto a = static_cast<Qubit>(rng() % 3);
    c.add(oracle::random_single(rng, a));
    c.add(rng() % 2 ? Gate::cnot(a, a + 1) : Gate::cnot(a + 1, a));
  }
  const LocalAdjustResult r = local_adjust(c, line);
  EXPECT_EQ(r.circuit, c);
  EXPECT_TRUE(r.final_mapping.is_identity());
  EXPECT_EQ(r.swaps, 0U);
}

TEST(LocalAdjust, ChipCnotMatchesSwapConstruction) {
  const CouplingGraph g = oracle::chip5();
  Circuit c(5, 0);
  c.add(Gate::cnot(1, 4));
  const LocalAdjustResult r = local_adjust(c, g);
  // 1 and 4 are three hops apart on the undirected view: 1-2-3-4.
  EXPECT_EQ(r.swaps, 2U);
  EXPECT_TRUE(same_up_to_relabel(c, r.circuit, r.final_mapping));
  EXPECT_EQ(count_if(r.circuit.gates().begin(), r.circuit.gates().end(),
                     [&](const Gate& x) {
                       return !g.adjacent(x.control(), x.target());
                     }),
            0);
}

TEST(LocalAdjust, RandomCircuitsStayEquivalent) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const auto kind = static_cast<LayoutKind>(rng() % 4);
    const std::size_t n = 3 + rng() % 3;
    const CouplingGraph g = make_layout(kind, n);
    const Circuit c = oracle::random_circuit(rng, n, 25);
    const LocalAdjustResult r = local_adjust(c, g);
    for (const Gate& x : r.circuit.gates()) {
      if (x.is_cnot()) {
        ASSERT_TRUE(g.adjacent(x.control(), x.target()));
      }
    }
    ASSERT_EQ(gate_counts(r.circuit).cnot,
              gate_counts(c).cnot + 3 * r.swaps);
    ASSERT_EQ(gate_counts(r.circuit).single, gate_counts(c).single);
    ASSERT_TRUE(same_up_to_relabel(c, r.circuit, r.final_mapping)) << trial;
  }
}

TEST(LocalAdjust, Errors) {
  Circuit c(4, 0);
  c.add(Gate::cnot(0, 3));
  EXPECT_THROW(local_adjust(c, CouplingGraph(4, {{0, 1}, {2, 3}}, false)),
               DisconnectedGraphError);
  EXPECT_THROW(local_adjust(Circuit(5, 0), make_layout(LayoutKind::Linear, 4)),
               std::invalid_argument);
}

TEST(FixDirections, HConjugation) {
  const CouplingGraph g(2, {{0, 1}}, true);
  Circuit c(2, 0);
  c.add(Gate::cnot(1, 0));
  Circuit want(2, 0);
  want.add(Gate::h(1)).add(Gate::h(0)).add(Gate::cnot(0, 1));
  want.add(Gate::h(1)).add(Gate::h(0));
  const Circuit got = fix_directions(c, g);
  EXPECT_EQ(got, want);
  EXPECT_LT(phase_distance(circuit_unitary(got), circuit_unitary(c)), 1e-12);
}

TEST(FixDirections, UndirectedNoOp) {
  std::mt19937_64 rng(1);
  Circuit c(3, 0);
  for (int i = 0; i < 10; ++i) {
    c.add(Gate::cnot(1, rng() % 2 ? 0 : 2));
    c.add(Gate::cnot(rng() % 2 ? 0 : 2, 1));
  }
  EXPECT_EQ(fix_directions(c, make_layout(LayoutKind::Linear, 3)), c);
}

TEST(FixDirections, RejectsNonEdge) {
  Circuit c(3, 0);
  c.add(Gate::cnot(0, 2));
  EXPECT_THROW(fix_directions(c, CouplingGraph(3, {{0, 1}, {1, 2}}, true)),
               std::logic_error);
}

TEST(NaiveRoute, SwapThereAndBack) {
  const CouplingGraph line = make_layout(LayoutKind::Linear, 3);
  Circuit c(3, 0);
  c.add(Gate::cnot(0, 2));
  Circuit want(3, 0);
  want.add_swap(0, 1).add(Gate::cnot(1, 2)).add_swap(0, 1);
  const Circuit got = naive_route(c, line);
  EXPECT_EQ(got, want);
  EXPECT_TRUE(same_up_to_relabel(c, got, {}));
}

TEST(NaiveRoute, AddsTwoSwapsPerIntermediate) {
  // Directed chain: every SWAP needs one reversed CNOT, so a SWAP costs the
  // full 3 CNOT + 4 H.
  const CouplingGraph chain(3, {{0, 1}, {1, 2}}, true);
  Circuit c(3, 0);
  c.add(Gate::cnot(0, 2));
  const Circuit routed = fix_directions(naive_route(c, chain), chain);
  EXPECT_DOUBLE_EQ(cost(routed) - cost(c), 2 * 1 * 34.0);
  EXPECT_TRUE(same_up_to_relabel(c, routed, {}));

  const CouplingGraph line = make_layout(LayoutKind::Linear, 6);
  Circuit far(6, 0);
  far.add(Gate::cnot(0, 5));
  EXPECT_EQ(gate_counts(naive_route(far, line)).cnot, 1 + 2 * 4 * 3U);
}

TEST(NaiveRoute, LegalCircuitUnchanged) {
  Circuit c(3, 0);
  c.add(Gate::cnot(0, 1)).add(Gate::h(2)).add(Gate::cnot(2, 1));
  EXPECT_EQ(naive_route(c, make_layout(LayoutKind::Linear, 3)), c);
}

TEST(NaiveRoute, RandomCircuitsStayEquivalent) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto kind = static_cast<LayoutKind>(rng() % 4);
    const std::size_t n = 3 + rng() % 3;
    const Circuit c = oracle::random_circuit(rng, n, 20);
    ASSERT_TRUE(same_up_to_relabel(c, naive_route(c, make_layout(kind, n)), {}));
  }
}

}  // namespace
}  // namespace qadapt
