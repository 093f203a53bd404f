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

#ifndef QREPGAME_SPE_HPP_
#define QREPGAME_SPE_HPP_

#include <vector>

#include "qrepgame/equilibria.hpp"
#include "qrepgame/repeated10.hpp"
#include "qrepgame/stagegames.hpp"

namespace qrg {

// Subgame perfect equilibria of a 10-qubit game whose initial state is a
// product over the pairs (1,2), (3,4), ..., (9,10). The subgame after
// stage-1 outcome iota is the MW game on pair iota+2; every combination of
// its pure equilibria is folded back into an induced stage-1 game on pair 1.
//
// Rows and columns of the report are RepStrategy indices. A profile is
// strict when the induced stage-1 equilibrium and all four selected
// subgame equilibria are strict.
//
// Throws Error(kUnsupported) for states entangled across pairs and
// Error(kNoEquilibrium) when a subgame has no pure equilibrium.
EquilibriumReport SpePairProduct(const RepGame& game,
                                 double tol = kDefaultEquilibriumTolerance);

// min{T-R, P-S} / (T-R+P-S). Throws Error(kPrecondition) unless the stage
// is a prisoner's dilemma.
double CooperationBound(const StageGame& stage);

struct CooperationSample {
  double x = 0.0;          // |lambda_0|^2 of sqrt(x)|00> + sqrt(1-x)|11>
  bool unique_ne = false;  // (0,0) is the only pure NE of the MW game
  double q = 0.0;          // x R + (1-x) P
};

struct CooperationAnalysis {
  PdParams payoffs{};
  double closed_form_bound = 0.0;
  // Largest grid x with unique_ne; 0 when there is none.
  double empirical_bound = 0.0;
  double grid_step = 0.0;
  std::vector<CooperationSample> samples;
  bool bound_agrees = false;     // |closed - empirical| <= grid_step
  bool payoff_improves = false;  // q > P at every unique_ne sample
};

// Scans x = step, 2*step, ... over the open interval (0, 1). Requires a
// prisoner's dilemma and 0 < grid_step < 0.5.
CooperationAnalysis CooperationScan(const StageGame& stage, double grid_step,
                                    double tol = kDefaultEquilibriumTolerance);

}  // namespace qrg

#endif  // QREPGAME_SPE_HPP_
