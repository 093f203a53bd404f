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

#include "qrepgame/equilibria.hpp"

#include <algorithm>
#include <limits>

#include "qrepgame/error.hpp"

namespace qrg {

EquilibriumReport PureNash(const Bimatrix& bm, double tol) {
  if (bm.rows() == 0 || bm.cols() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "bimatrix is empty");
  }
  if (!(tol >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be non-negative");
  }

  // Column-wise best payoff for player 1 and row-wise best for player 2.
  std::vector<double> best1(bm.cols(), -std::numeric_limits<double>::infinity());
  std::vector<double> best2(bm.rows(), -std::numeric_limits<double>::infinity());
  for (int r = 0; r < bm.rows(); ++r) {
    for (int c = 0; c < bm.cols(); ++c) {
      best1[c] = std::max(best1[c], bm.at(r, c).first);
      best2[r] = std::max(best2[r], bm.at(r, c).second);
    }
  }

  EquilibriumReport report{EquilibriumKind::kNash, tol, {}};
  for (int r = 0; r < bm.rows(); ++r) {
    for (int c = 0; c < bm.cols(); ++c) {
      const Payoff& u = bm.at(r, c);
      if (u.first < best1[c] - tol || u.second < best2[r] - tol) continue;

      bool strict = true;
      for (int r2 = 0; r2 < bm.rows() && strict; ++r2) {
        if (r2 != r && bm.at(r2, c).first >= u.first) strict = false;
      }
      for (int c2 = 0; c2 < bm.cols() && strict; ++c2) {
        if (c2 != c && bm.at(r, c2).second >= u.second) strict = false;
      }
      report.equilibria.push_back(
          {r, c, bm.row_labels()[r], bm.col_labels()[c], u, strict});
    }
  }
  AnnotatePayoffDominance(report);
  return report;
}

std::vector<std::pair<int, int>> StrictlyDominated(const Bimatrix& bm, int player,
                                                   double tol) {
  if (player != 1 && player != 2) {
    throw Error(ErrorCode::kInvalidArgument, "player must be 1 or 2");
  }
  if (!(tol >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be non-negative");
  }
  const int own = player == 1 ? bm.rows() : bm.cols();
  const int other = player == 1 ? bm.cols() : bm.rows();
  auto payoff = [&](int mine, int theirs) {
    return player == 1 ? bm.at(mine, theirs).first : bm.at(theirs, mine).second;
  };

  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < own; ++a) {
    for (int b = 0; b < own; ++b) {
      if (a == b || other == 0) continue;
      bool dominated = true;
      for (int o = 0; o < other && dominated; ++o) {
        if (!(payoff(b, o) > payoff(a, o) + tol)) dominated = false;
      }
      if (dominated) out.emplace_back(a, b);
    }
  }
  return out;
}

void AnnotatePayoffDominance(EquilibriumReport& report) {
  const double tol = report.tolerance;
  for (Equilibrium& e : report.equilibria) {
    e.payoff_dominated = false;
    for (const Equilibrium& f : report.equilibria) {
      const bool weakly = f.payoff.first >= e.payoff.first - tol &&
                          f.payoff.second >= e.payoff.second - tol;
      const bool better = f.payoff.first > e.payoff.first + tol ||
                          f.payoff.second > e.payoff.second + tol;
      if (weakly && better) {
        e.payoff_dominated = true;
        break;
      }
    }
  }
}

}  // namespace qrg
