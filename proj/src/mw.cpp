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

#include "qrepgame/mw.hpp"

#include "qrepgame/error.hpp"

namespace qrg {

MWGame::MWGame(PureState initial_state, StageGame stage_game)
    : initial(std::move(initial_state)), stage(std::move(stage_game)) {
  if (initial.num_qubits() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "MW game needs a 2-qubit state");
  }
}

DiagonalObservable MWPayoffObservable(const StageGame& stage, int player) {
  std::vector<double> w(4);
  for (int y = 0; y < 4; ++y) w[y] = stage.outcome(y).of(player);
  return DiagonalObservable(2, std::move(w));
}

Bimatrix MWBimatrix(const MWGame& game) {
  const DiagonalObservable x1 = MWPayoffObservable(game.stage, 1);
  const DiagonalObservable x2 = MWPayoffObservable(game.stage, 2);
  std::vector<Payoff> cells;
  for (int k1 = 0; k1 < 2; ++k1) {
    for (int k2 = 0; k2 < 2; ++k2) {
      const PureState fin = ApplyFlips(game.initial, FlipLayer{{1, k1}, {2, k2}});
      cells.push_back({Expectation(fin, x1), Expectation(fin, x2)});
    }
  }
  return Bimatrix(2, 2, std::move(cells), {"0", "1"}, {"0", "1"});
}

}  // namespace qrg
