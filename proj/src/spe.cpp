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

#include "qrepgame/spe.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qrepgame/error.hpp"
#include "qrepgame/mw.hpp"

namespace qrg {
namespace {

const char* kOutcomeNames[4] = {"00", "01", "10", "11"};

}  // namespace

EquilibriumReport SpePairProduct(const RepGame& game, double tol) {
  const auto factors = FactorPairs(game.initial());
  if (!factors) {
    throw Error(ErrorCode::kUnsupported, "SPE undefined for cross-pair entanglement");
  }

  const Bimatrix first = MWBimatrix(MWGame((*factors)[0], game.stage()));
  std::array<Bimatrix, 4> sub{first, first, first, first};
  std::array<std::vector<Equilibrium>, 4> sub_ne;
  for (int iota = 0; iota < 4; ++iota) {
    sub[iota] = MWBimatrix(MWGame((*factors)[iota + 1], game.stage()));
    sub_ne[iota] = PureNash(sub[iota], tol).equilibria;
    if (sub_ne[iota].empty()) {
      throw Error(ErrorCode::kNoEquilibrium,
                  std::string("no pure equilibrium in the subgame after outcome ") +
                      kOutcomeNames[iota]);
    }
  }

  // p(iota | k1 k2): the stage-1 flips permute the first pair's amplitudes.
  const auto amps = (*factors)[0].amplitudes();
  auto reach = [&](int kappa, int iota) { return std::norm(amps[iota ^ kappa]); };

  EquilibriumReport report{EquilibriumKind::kSubgamePerfect, tol, {}};
  std::array<int, 4> pick{};
  while (true) {
    std::vector<Payoff> cells;
    for (int kappa = 0; kappa < 4; ++kappa) {
      Payoff cell = first.at(kappa >> 1, kappa & 1);
      for (int iota = 0; iota < 4; ++iota) {
        cell = cell + reach(kappa, iota) * sub_ne[iota][pick[iota]].payoff;
      }
      cells.push_back(cell);
    }
    const Bimatrix induced(2, 2, std::move(cells));
    bool continuation_strict = true;
    for (int iota = 0; iota < 4; ++iota) {
      continuation_strict = continuation_strict && sub_ne[iota][pick[iota]].strict;
    }

    for (const Equilibrium& e : PureNash(induced, tol).equilibria) {
      RepStrategy s1{e.row, {}};
      RepStrategy s2{e.col, {}};
      for (int iota = 0; iota < 4; ++iota) {
        s1.after[iota] = sub_ne[iota][pick[iota]].row;
        s2.after[iota] = sub_ne[iota][pick[iota]].col;
      }
      report.equilibria.push_back({s1.Index(), s2.Index(), s1.ToBits(), s2.ToBits(),
                                   e.payoff, e.strict && continuation_strict});
    }

    int i = 0;
    while (i < 4 && ++pick[i] == static_cast<int>(sub_ne[i].size())) pick[i++] = 0;
    if (i == 4) break;
  }

  std::sort(report.equilibria.begin(), report.equilibria.end(),
            [](const Equilibrium& a, const Equilibrium& b) {
              return std::pair(a.row, a.col) < std::pair(b.row, b.col);
            });
  AnnotatePayoffDominance(report);
  return report;
}

double CooperationBound(const StageGame& stage) {
  if (!stage.is_pd()) {
    throw Error(ErrorCode::kPrecondition, "stage game is not a prisoner's dilemma");
  }
  const PdParams p = *stage.pd_params();
  const double a = p.T - p.R;
  const double b = p.P - p.S;
  return std::min(a, b) / (a + b);
}

CooperationAnalysis CooperationScan(const StageGame& stage, double grid_step,
                                    double tol) {
  CooperationAnalysis out;
  out.closed_form_bound = CooperationBound(stage);
  if (!(grid_step > 0.0 && grid_step < 0.5)) {
    throw Error(ErrorCode::kPrecondition, "grid step must lie in (0, 0.5)");
  }
  out.payoffs = *stage.pd_params();
  out.grid_step = grid_step;
  out.payoff_improves = true;

  for (int k = 1;; ++k) {
    const double x = k * grid_step;
    if (x >= 1.0 - 1e-12) break;
    const PureState phi(2, {std::sqrt(x), 0.0, 0.0, std::sqrt(1.0 - x)});
    const auto ne = PureNash(MWBimatrix(MWGame(phi, stage)), tol).equilibria;
    CooperationSample s;
    s.x = x;
    s.unique_ne = ne.size() == 1 && ne[0].row == 0 && ne[0].col == 0;
    s.q = x * out.payoffs.R + (1.0 - x) * out.payoffs.P;
    if (s.unique_ne) {
      out.empirical_bound = std::max(out.empirical_bound, x);
      if (!(s.q > out.payoffs.P)) out.payoff_improves = false;
    }
    out.samples.push_back(s);
  }
  out.bound_agrees =
      std::abs(out.closed_form_bound - out.empirical_bound) <= grid_step + 1e-12;
  return out;
}

}  // namespace qrg
