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

#ifndef QREPGAME_EQUILIBRIA_HPP_
#define QREPGAME_EQUILIBRIA_HPP_

#include <string>
#include <utility>
#include <vector>

#include "qrepgame/stagegames.hpp"

namespace qrg {

inline constexpr double kDefaultEquilibriumTolerance = 1e-9;

enum class EquilibriumKind { kNash, kSubgamePerfect };

struct Equilibrium {
  int row;
  int col;
  std::string row_label;
  std::string col_label;
  Payoff payoff;
  // No unilateral deviation ties, compared exactly.
  bool strict;
  // Another listed equilibrium gives both players at least as much and one
  // player more (beyond the report tolerance).
  bool payoff_dominated = false;
};

struct EquilibriumReport {
  EquilibriumKind kind;
  double tolerance;
  std::vector<Equilibrium> equilibria;  // ordered by (row, col)
};

// Pure Nash equilibria: (r, c) is listed iff u1(r,c) >= u1(r',c) - tol for
// every r' and u2(r,c) >= u2(r,c') - tol for every c'. Throws on an empty
// bimatrix or a negative tolerance.
EquilibriumReport PureNash(const Bimatrix& bm,
                           double tol = kDefaultEquilibriumTolerance);

// Pairs (dominated, dominating) of `player`'s strategies where the dominating
// one pays more than the dominated one plus `tol` against every opponent
// strategy.
std::vector<std::pair<int, int>> StrictlyDominated(const Bimatrix& bm, int player,
                                                   double tol = 0.0);

// Sets Equilibrium::payoff_dominated across the report.
void AnnotatePayoffDominance(EquilibriumReport& report);

}  // namespace qrg

#endif  // QREPGAME_EQUILIBRIA_HPP_
