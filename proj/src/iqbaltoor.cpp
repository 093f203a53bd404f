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

#include "qrepgame/iqbaltoor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qrepgame/error.hpp"

namespace qrg {
namespace {

constexpr double kPatternTolerance = 1e-9;

void CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "flip probability " + std::to_string(p) + " outside [0,1]");
  }
}

std::array<double, 2> Weights(double flip_prob) { return {1.0 - flip_prob, flip_prob}; }

ITPayoffs Evaluate(const ITGame& game, const Ensemble& rho_fin) {
  ITPayoffs out;
  for (int player = 1; player <= 2; ++player) {
    for (int stage = 1; stage <= 2; ++stage) {
      out.e[player - 1][stage - 1] =
          Expectation(rho_fin, ITPayoffObservable(game.stage, player, stage));
    }
  }
  return out;
}

}  // namespace

ITStrategy ITStrategy::Pure(int stage1_bit, int stage2_bit) {
  if ((stage1_bit != 0 && stage1_bit != 1) || (stage2_bit != 0 && stage2_bit != 1)) {
    throw Error(ErrorCode::kInvalidArgument, "pure choices must be 0 or 1");
  }
  return {static_cast<double>(stage1_bit), static_cast<double>(stage2_bit)};
}

ITStrategy ITStrategy::FromPureIndex(int index) {
  if (index < 0 || index >= kPureCount) {
    throw Error(ErrorCode::kInvalidArgument, "pure index outside 0..3");
  }
  return Pure(index >> 1, index & 1);
}

bool ITStrategy::is_pure() const {
  auto pure = [](double p) { return p == 0.0 || p == 1.0; };
  return pure(stage1_flip_prob) && pure(stage2_flip_prob);
}

ITGame::ITGame(PureState initial_state, StageGame stage_game)
    : initial(std::move(initial_state)), stage(std::move(stage_game)) {
  if (initial.num_qubits() != 4) {
    throw Error(ErrorCode::kInvalidArgument, "iqbal-toor game needs a 4-qubit state");
  }
}

DiagonalObservable ITPayoffObservable(const StageGame& stage, int player,
                                      int stage_index) {
  if (stage_index != 1 && stage_index != 2) {
    throw Error(ErrorCode::kInvalidArgument, "stage must be 1 or 2");
  }
  const int shift = stage_index == 1 ? 2 : 0;
  std::vector<double> w(16);
  for (std::uint32_t x = 0; x < 16; ++x) {
    w[x] = stage.outcome(static_cast<int>((x >> shift) & 3)).of(player);
  }
  return DiagonalObservable(4, std::move(w));
}

ITPayoffs ITExpected(const ITGame& game, const ITStrategy& s1, const ITStrategy& s2) {
  for (double p : {s1.stage1_flip_prob, s1.stage2_flip_prob, s2.stage1_flip_prob,
                   s2.stage2_flip_prob}) {
    CheckProbability(p);
  }

  // rho after the stage-1 operations on qubits 1 and 2.
  std::vector<Ensemble::Member> rho;
  const auto p1 = Weights(s1.stage1_flip_prob);
  const auto q1 = Weights(s2.stage1_flip_prob);
  for (int k1 = 0; k1 < 2; ++k1) {
    for (int k2 = 0; k2 < 2; ++k2) {
      const double w = p1[k1] * q1[k2];
      if (w == 0.0) continue;
      rho.emplace_back(w, ApplyFlips(game.initial, FlipLayer{{1, k1}, {2, k2}}));
    }
  }

  // rho_fin after the stage-2 operations on qubits 3 and 4.
  std::vector<Ensemble::Member> rho_fin;
  const auto p3 = Weights(s1.stage2_flip_prob);
  const auto q4 = Weights(s2.stage2_flip_prob);
  for (const auto& [w, state] : rho) {
    for (int k3 = 0; k3 < 2; ++k3) {
      for (int k4 = 0; k4 < 2; ++k4) {
        const double w2 = w * p3[k3] * q4[k4];
        if (w2 == 0.0) continue;
        rho_fin.emplace_back(w2, ApplyFlips(state, FlipLayer{{3, k3}, {4, k4}}));
      }
    }
  }
  return Evaluate(game, Ensemble(std::move(rho_fin)));
}

ITPayoffs ITBatch(const ITGame& game, int pure1, int pure2) {
  const ITStrategy a = ITStrategy::FromPureIndex(pure1);
  const ITStrategy b = ITStrategy::FromPureIndex(pure2);
  const FlipLayer layer{{1, static_cast<int>(a.stage1_flip_prob)},
                        {2, static_cast<int>(b.stage1_flip_prob)},
                        {3, static_cast<int>(a.stage2_flip_prob)},
                        {4, static_cast<int>(b.stage2_flip_prob)}};
  return Evaluate(game, Ensemble::Pure(ApplyFlips(game.initial, layer)));
}

Bimatrix ITPureBimatrix(const ITGame& game) {
  std::vector<Payoff> cells;
  for (int r = 0; r < ITStrategy::kPureCount; ++r) {
    for (int c = 0; c < ITStrategy::kPureCount; ++c) {
      const ITPayoffs e = ITBatch(game, r, c);
      cells.push_back({e.total(1), e.total(2)});
    }
  }
  std::vector<std::string> labels{"00", "01", "10", "11"};
  return Bimatrix(4, 4, std::move(cells), labels, labels);
}

StageOnePattern ITStageOnePattern(const ITGame& game) {
  std::array<ITPayoffs, 4> e;
  for (int k = 0; k < 4; ++k) {
    e[k] = ITExpected(game, ITStrategy::Pure(k >> 1, 0), ITStrategy::Pure(k & 1, 0));
  }
  StageOnePattern out;
  out.R = e[0].at(1, 1);
  out.S = e[1].at(1, 1);
  out.T = e[2].at(1, 1);
  out.P = e[3].at(1, 1);

  auto near = [](double a, double b) { return std::abs(a - b) <= kPatternTolerance; };
  out.mirrored = near(e[0].at(2, 1), out.R) && near(e[1].at(2, 1), out.T) &&
                 near(e[2].at(2, 1), out.S) && near(e[3].at(2, 1), out.P);
  out.pd_consistent = out.mirrored && out.T > out.R && out.R > out.P &&
                      out.P > out.S && 2 * out.R > out.T + out.S;
  return out;
}

NoCooperationVerdict ITNoCooperationCheck(const ITGame& game, double tol) {
  NoCooperationVerdict v;
  v.pattern = ITStageOnePattern(game);
  if (!v.pattern.pd_consistent) {
    throw Error(ErrorCode::kPrecondition,
                "stage-1 payoffs do not form a prisoner's dilemma; the "
                "no-cooperation argument does not apply");
  }

  const Bimatrix bm = ITPureBimatrix(game);
  const double vs0 = v.pattern.T - v.pattern.R;
  const double vs1 = v.pattern.P - v.pattern.S;
  v.dominance_holds = true;

  for (int player = 1; player <= 2; ++player) {
    DominanceGaps& g = v.gaps[player - 1];
    g.vs_opponent_0 = vs0;
    g.vs_opponent_1 = vs1;
    g.min_measured = std::numeric_limits<double>::infinity();
    for (int own_stage2 = 0; own_stage2 < 2; ++own_stage2) {
      const int cooperate = own_stage2;       // (0, k)
      const int defect = 2 + own_stage2;      // (1, k)
      for (int opp = 0; opp < ITStrategy::kPureCount; ++opp) {
        const double gain =
            player == 1 ? bm.at(defect, opp).first - bm.at(cooperate, opp).first
                        : bm.at(opp, defect).second - bm.at(opp, cooperate).second;
        const double expected = (opp >> 1) == 0 ? vs0 : vs1;
        g.min_measured = std::min(g.min_measured, gain);
        g.max_deviation = std::max(g.max_deviation, std::abs(gain - expected));
        if (!(gain > 0.0)) v.dominance_holds = false;
      }
    }
  }

  v.equilibria = PureNash(bm, tol);
  v.cooperation_free = std::none_of(
      v.equilibria.equilibria.begin(), v.equilibria.equilibria.end(),
      [](const Equilibrium& e) { return (e.row >> 1) == 0 || (e.col >> 1) == 0; });
  return v;
}

}  // namespace qrg
