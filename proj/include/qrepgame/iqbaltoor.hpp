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

#ifndef QREPGAME_IQBALTOOR_HPP_
#define QREPGAME_IQBALTOOR_HPP_

// The 4-qubit two-stage protocol. Player 1 owns qubits 1
// (stage 1) and 3 (stage 2), player 2 owns qubits 2 and 4. Each stage is
// scored by the stage table applied to its own qubit pair, so a player only
// ever commits to one stage-2 action: four pure strategies per player.

#include <array>

#include "qrepgame/equilibria.hpp"
#include "qrepgame/qstate.hpp"
#include "qrepgame/stagegames.hpp"

namespace qrg {

// Mixed strategy as independent per-qubit flip probabilities.
struct ITStrategy {
  double stage1_flip_prob = 0.0;
  double stage2_flip_prob = 0.0;

  static constexpr int kPureCount = 4;

  static ITStrategy Pure(int stage1_bit, int stage2_bit);
  // Pure strategy index 2 * stage1_bit + stage2_bit.
  static ITStrategy FromPureIndex(int index);
  bool is_pure() const;
};

struct ITGame {
  ITGame(PureState initial_state, StageGame stage_game);

  PureState initial;
  StageGame stage;
};

// E[player-1][stage-1] = tr(X_{player.stage} rho_fin).
struct ITPayoffs {
  std::array<std::array<double, 2>, 2> e{};

  double at(int player, int stage) const { return e.at(player - 1).at(stage - 1); }
  double total(int player) const { return at(player, 1) + at(player, 2); }
};

// X_{player.stage}: the stage table on qubits (1,2) or (3,4), identity on the
// other pair.
DiagonalObservable ITPayoffObservable(const StageGame& stage, int player,
                                      int stage_index);

// Sequential evaluation: the stage-1 mixture over qubits 1-2, then the
// stage-2 mixture over qubits 3-4, as an ensemble of at most 16 flip images.
ITPayoffs ITExpected(const ITGame& game, const ITStrategy& s1, const ITStrategy& s2);

// Single flip layer on all four qubits at once. Pure strategies only, given
// as pure indices.
ITPayoffs ITBatch(const ITGame& game, int pure1, int pure2);

// 4 x 4 table of total payoffs over pure strategies, rows/cols labelled by
// "<stage1 bit><stage2 bit>".
Bimatrix ITPureBimatrix(const ITGame& game);

// Stage-1 payoffs of player 1 read as a PD table: (k1,k2) = (0,0) -> R',
// (0,1) -> S', (1,0) -> T', (1,1) -> P'.
struct StageOnePattern {
  double R = 0.0;
  double S = 0.0;
  double T = 0.0;
  double P = 0.0;
  // Player 2's stage-1 payoffs are the mirror image (R', T', S', P').
  bool mirrored = false;
  // T' > R' > P' > S', 2R' > T' + S', and mirrored.
  bool pd_consistent = false;
};

StageOnePattern ITStageOnePattern(const ITGame& game);

struct DominanceGaps {
  // Formula values: gain from flipping the own stage-1 qubit when the
  // opponent's stage-1 bit is 0 (T' - R') or 1 (P' - S').
  double vs_opponent_0 = 0.0;
  double vs_opponent_1 = 0.0;
  // Smallest gain measured over all own stage-2 bits and opponent strategies.
  double min_measured = 0.0;
  // Largest |measured - formula| over the same comparisons.
  double max_deviation = 0.0;
};

struct NoCooperationVerdict {
  StageOnePattern pattern;
  std::array<DominanceGaps, 2> gaps;  // per player
  bool dominance_holds = false;       // every measured gain > 0
  EquilibriumReport equilibria;
  bool cooperation_free = false;      // no pure NE has a stage-1 bit 0
};

// Throws Error(kPrecondition) when the stage-1 pattern is not PD-consistent.
NoCooperationVerdict ITNoCooperationCheck(const ITGame& game,
                                          double tol = kDefaultEquilibriumTolerance);

}  // namespace qrg

#endif  // QREPGAME_IQBALTOOR_HPP_
