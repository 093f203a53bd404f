// Copyright 2026 The qrepgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QREPGAME_REPEATED10_HPP_
#define QREPGAME_REPEATED10_HPP_

// Twice-repeated 2x2 game on a 10-qubit register.
//
// Player 1 owns the odd qubits and player 2 the even ones. Qubits 1-2 carry
// the stage-1 moves; after stage-1 outcome iota = (i1 i2)_2 the stage-2 moves
// live on qubits 2*iota+3 and 2*iota+4. Payoffs are read by
//   X1       = sum_y O_y |y><y| on qubits 1-2,
//   X2.iota  = |iota><iota| on qubits 1-2 times sum_y O_y |y><y| on the
//              contingency pair of iota,
// and E_{i.1} = tr(X1 rho), E_{i.2} = tr(sum_iota X2.iota rho) with the
// player-i component of O.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrepgame/qstate.hpp"
#include "qrepgame/stagegames.hpp"

namespace qrg {

inline constexpr int kRepQubits = 10;
inline constexpr int kRepPairs = 5;

class RepGame {
 public:
  RepGame(PureState initial, StageGame stage);

  const PureState& initial() const { return initial_; }
  const StageGame& stage() const { return stage_; }
  // X1 (stage 1) or sum_iota X2.iota (stage 2) for `player`.
  const DiagonalObservable& observable(int player, int stage) const;

 private:
  PureState initial_;
  StageGame stage_;
  std::vector<DiagonalObservable> observables_;  // [2 * (player-1) + (stage-1)]
};

DiagonalObservable StageOneObservable(const StageGame& stage, int player);
DiagonalObservable StageTwoObservable(const StageGame& stage, int player);

// Flips a pure strategy writes onto the register: qubits {1,3,5,7,9} for
// player 1, {2,4,6,8,10} for player 2, in field order.
FlipLayer StrategyQubitMap(int player, const RepStrategy& strategy);

// The qubit pair (2*iota+3, 2*iota+4) played after stage-1 outcome iota.
std::pair<int, int> ContingencyQubits(int outcome);

struct RepPayoffs {
  std::array<std::array<double, 2>, 2> e{};  // [player-1][stage-1]

  double at(int player, int stage) const { return e.at(player - 1).at(stage - 1); }
  double total(int player) const { return at(player, 1) + at(player, 2); }
  Payoff totals() const { return {total(1), total(2)}; }
  double MaxAbsDifference(const RepPayoffs& other) const;
};

// All flips applied to the initial state at once.
RepPayoffs PlayBatch(const RepGame& game, const RepStrategy& s1, const RepStrategy& s2);

struct TranscriptBranch {
  int outcome = 0;
  double probability = 0.0;
  // False when the measurement pruned this outcome; choices are still the
  // strategies' prescriptions, contributions are zero.
  bool reachable = false;
  int choice1 = 0;
  int choice2 = 0;
  // Probability-weighted share of each E_{i.j}.
  RepPayoffs contribution;
};

struct PlayTranscript {
  int stage1_choice1 = 0;
  int stage1_choice2 = 0;
  std::array<TranscriptBranch, 4> branches;
  RepPayoffs payoffs;
};

// Stage-1 flips, projective measurement of qubits 1-2, then the contingent
// flips on each surviving branch; payoffs are evaluated on the resulting
// ensemble.
PlayTranscript PlaySequential(const RepGame& game, const RepStrategy& s1,
                              const RepStrategy& s2);

class MixedRepStrategy {
 public:
  using Entry = std::pair<double, RepStrategy>;

  // Probabilities in [0,1] summing to 1 within kNormTolerance.
  explicit MixedRepStrategy(std::vector<Entry> support);
  static MixedRepStrategy Pure(const RepStrategy& s) { return MixedRepStrategy({{1.0, s}}); }

  const std::vector<Entry>& support() const { return support_; }

 private:
  std::vector<Entry> support_;
};

// Convex combination of PlayBatch over both supports.
RepPayoffs PlayMixed(const RepGame& game, const MixedRepStrategy& m1,
                     const MixedRepStrategy& m2);

// 32 x 32 table of total payoffs, indexed per RepStrategy::Index.
Bimatrix RepBimatrix(const RepGame& game);

// Splits an even-sized state into normalized two-qubit factors on pairs
// (1,2), (3,4), ... when it is a product across those pairs.
std::optional<std::vector<PureState>> FactorPairs(const PureState& state,
                                                  double tol = 1e-9);

// True for l0 |0...0> + l1 |1...1>.
bool IsGhzFamily(const PureState& state, double tol = 1e-12);

enum class NodeKind { kDecision, kChance, kTerminal };

struct TreeNode {
  int id = 0;
  NodeKind kind = NodeKind::kDecision;
  int owner = 0;  // 1 or 2 at decision nodes, 0 otherwise
  std::string infoset;
  // Actions along the path: stage-1 bits, "|", outcome, "|", stage-2 bits.
  std::string history;
  std::vector<std::string> actions;
  std::vector<int> children;
  std::vector<double> probabilities;  // chance nodes only
  bool reachable = true;
  std::optional<Payoff> payoff;  // terminals; total over both stages
};

struct ExtensiveTree {
  std::string family;  // "pair_product" or "ghz"
  std::vector<TreeNode> nodes;  // nodes[0] is the root
};

// Game tree of the sequential procedure. Stage-2 information sets group the
// histories that share a measurement outcome. Supported initial states are
// pair products and the GHZ family; anything else throws
// Error(kUnsupported). All four chance branches are kept; pruned ones are
// marked unreachable. Unreachable GHZ terminals carry no payoff.
ExtensiveTree BuildExtensive(const RepGame& game);

}  // namespace qrg

#endif  // QREPGAME_REPEATED10_HPP_
