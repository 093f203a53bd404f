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

#ifndef QREPGAME_MW_HPP_
#define QREPGAME_MW_HPP_

#include "qrepgame/qstate.hpp"
#include "qrepgame/stagegames.hpp"

namespace qrg {

// Single-stage MW game: player 1 flips qubit 1, player 2 flips
// qubit 2, and payoffs are read off the diagonal operator sum_y O_y |y><y|.
struct MWGame {
  MWGame(PureState initial_state, StageGame stage_game);

  PureState initial;
  StageGame stage;
};

// The 2-qubit payoff observable of `player` (1 or 2) derived from the stage.
DiagonalObservable MWPayoffObservable(const StageGame& stage, int player);

// Cell (k1, k2) holds both players' expected payoffs after flips {1:k1, 2:k2}.
Bimatrix MWBimatrix(const MWGame& game);

}  // namespace qrg

#endif  // QREPGAME_MW_HPP_
