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

#include "qrepgame/repro.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qrepgame/analysis.hpp"
#include "qrepgame/config.hpp"
#include "qrepgame/iqbaltoor.hpp"
#include "qrepgame/mw.hpp"
#include "qrepgame/serialize.hpp"
#include "qrepgame/spe.hpp"

namespace qrg {
namespace {

constexpr double kTol = 1e-9;
constexpr std::uint64_t kSeed = 20260101;

std::string Fmt(double v) { return FormatNumber(v); }

// Squared norm summed in sorted order, so any permutation of the amplitudes
// gives the same bits.
double SortedNormSquared(const PureState& s) {
  std::vector<double> p;
  for (const Complex& a : s.amplitudes()) p.push_back(std::norm(a));
  std::sort(p.begin(), p.end());
  double total = 0.0;
  for (double v : p) total += v;
  return total;
}

CheckResult ClassicalEmbedding() {
  const StageGame pd = MakePd(5, 3, 1, 0);
  const double d = RepBimatrix(RepGame(PureState::Basis(kRepQubits, 0), pd))
                       .MaxAbsDifference(ClassicalTwiceRepeated(pd));
  return {1, "classical-embedding", d <= kTol, "max deviation " + Fmt(d)};
}

CheckResult BatchSequential() {
  const ComparisonReport r = CompareProtocols(Protocol::kMw10, MakePd(5, 3, 1, 0), 20, kSeed);
  return {2, "batch-sequential-equivalence", r.max_deviation <= kTol,
          std::to_string(r.samples) + " states, " + std::to_string(r.profiles) +
              " profiles, max deviation " + Fmt(r.max_deviation)};
}

CheckResult SecondStageTable() {
  const StageGame pd = MakePd(5, 3, 1, 0);
  std::mt19937_64 rng(kSeed + 3);
  double worst = 0.0;
  bool ne_ok = true;
  const int members = 25;
  for (int m = 0; m < members; ++m) {
    const ITGame game(RandomDiagonalPairState(1.0 / 3.0, rng), pd);
    // Stage-2 table over (stage-2 bit of player 1, stage-2 bit of player 2).
    const double want1[2][2] = {{5.0 / 3, 10.0 / 3}, {5.0 / 3, 7.0 / 3}};
    std::vector<Payoff> cells;
    for (int k3 = 0; k3 < 2; ++k3) {
      for (int k4 = 0; k4 < 2; ++k4) {
        for (int k1 = 0; k1 < 2; ++k1) {
          for (int k2 = 0; k2 < 2; ++k2) {
            const ITPayoffs e = ITBatch(game, 2 * k1 + k3, 2 * k2 + k4);
            worst = std::max(worst, std::abs(e.at(1, 2) - want1[k3][k4]));
            worst = std::max(worst, std::abs(e.at(2, 2) - want1[k4][k3]));
          }
        }
        const ITPayoffs e = ITBatch(game, k3, k4);
        cells.push_back({e.at(1, 2), e.at(2, 2)});
      }
    }
    const auto ne = PureNash(Bimatrix(2, 2, cells), kTol).equilibria;
    auto has = [&](int r, int c) {
      return std::any_of(ne.begin(), ne.end(),
                         [&](const Equilibrium& e) { return e.row == r && e.col == c; });
    };
    ne_ok = ne_ok && ne.size() >= 2 && has(0, 1) && has(1, 0);
  }
  return {3, "second-stage-continuum", worst <= kTol && ne_ok,
          std::to_string(members) + " family members, max deviation " + Fmt(worst) +
              (ne_ok ? ", NE include (0,1) and (1,0)" : ", NE set mismatch")};
}

CheckResult NoCooperation() {
  const StageGame pd = MakePd(5, 3, 1, 0);
  std::mt19937_64 rng(kSeed + 4);
  std::vector<PureState> states{PureState::Basis(4, 0)};
  while (states.size() < 60) states.push_back(RandomPdConsistentState(pd, rng));
  double worst = 0.0;
  bool ok = true;
  for (const PureState& s : states) {
    const NoCooperationVerdict v = ITNoCooperationCheck(ITGame(s, pd), kTol);
    for (const DominanceGaps& g : v.gaps) worst = std::max(worst, g.max_deviation);
    ok = ok && v.dominance_holds && v.cooperation_free;
  }
  return {4, "no-cooperation", ok && worst <= kTol,
          std::to_string(states.size()) + " states, max gap deviation " + Fmt(worst) +
              (ok ? ", no stage-1 cooperation in any NE" : ", theorem violated")};
}

CheckResult FlippedTable() {
  const StageGame pd = MakePd(5, 3, 1, 0);
  const Bimatrix bm = MWBimatrix(MWGame(PureState::Basis("11"), pd));
  const bool ok = bm.at(1, 1) == Payoff{3, 3} && bm.at(0, 0) == Payoff{1, 1} &&
                  bm.at(0, 1) == Payoff{5, 0} && bm.at(1, 0) == Payoff{0, 5};
  return {5, "flipped-basis-table", ok, ok ? "exact match" : "table mismatch"};
}

CheckResult CooperationThreshold() {
  const StageGame pd = MakePd(5, 3, 1, 0);
  const CooperationAnalysis a = CooperationScan(pd, 0.01, kTol);
  const PureState phi(2, {std::sqrt(0.2), 0.0, 0.0, std::sqrt(0.8)});
  PureState state = phi;
  for (int k = 1; k < kRepPairs; ++k) state = state.Tensor(phi);
  const auto spe = SpePairProduct(RepGame(state, pd), kTol).equilibria;
  const bool spe_ok = spe.size() == 1 && spe[0].row == 0 && spe[0].col == 0 &&
                      std::abs(spe[0].payoff.first - 2.8) <= kTol &&
                      std::abs(spe[0].payoff.second - 2.8) <= kTol;
  return {6, "cooperation-threshold", a.bound_agrees && a.payoff_improves && spe_ok,
          "bound " + Fmt(a.closed_form_bound) + ", empirical " + Fmt(a.empirical_bound) +
              (spe_ok ? ", x=0.2 unique SPE all-0 with (2.8, 2.8)" : ", x=0.2 SPE mismatch")};
}

CheckResult Example45(bool perturb) {
  const StageGame pd = MakePd(5, perturb ? 4.5 : 4, 1, 0);
  const auto spe = SpePairProduct(RepGame(Example45State(), pd), kTol).equilibria;
  auto near = [](const Payoff& p, double v) {
    return std::abs(p.first - v) <= kTol && std::abs(p.second - v) <= kTol;
  };
  const bool ok = spe.size() == 2 &&
                  ((near(spe[0].payoff, 2) && near(spe[1].payoff, 6.2)) ||
                   (near(spe[0].payoff, 6.2) && near(spe[1].payoff, 2)));
  std::string detail = std::to_string(spe.size()) + " SPE:";
  for (const Equilibrium& e : spe) {
    detail += " (" + Fmt(e.payoff.first) + ", " + Fmt(e.payoff.second) + ")";
  }
  return {7, "example-two-spe", ok, detail};
}

CheckResult QubitCounts() {
  const bool ok = QubitCount(1) == 2 && QubitCount(2) == 10 && QubitCount(3) == 42;
  return {8, "qubit-count", ok,
          std::to_string(QubitCount(1)) + ", " + std::to_string(QubitCount(2)) + ", " +
              std::to_string(QubitCount(3))};
}

CheckResult Properties() {
  constexpr int kCases = 1000;
  std::mt19937_64 rng(kSeed + 9);
  std::uniform_int_distribution<int> qubits(1, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < kCases; ++i) {
    const int n = qubits(rng);
    const PureState s = RandomState(n, rng);
    const std::uint32_t mask =
        std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(rng);
    const PureState f = ApplyFlipMask(s, mask);
    for (std::uint32_t x = 0; x < s.dimension(); ++x) {
      if (f.amplitude(x) != s.amplitude(x ^ mask)) ++failures;
    }
    if (SortedNormSquared(f) != SortedNormSquared(s)) ++failures;
    if (!(ApplyFlipMask(f, mask) == s)) ++failures;

    if (n >= 2) {
      const int a = std::uniform_int_distribution<int>(1, n)(rng);
      int b = std::uniform_int_distribution<int>(1, n - 1)(rng);
      if (b >= a) ++b;
      double total = 0.0;
      for (const MeasurementBranch& br : MeasurePair(s, a, b)) {
        total += br.probability;
        worst = std::max(worst, std::abs(br.post_state.NormSquared() - 1.0));
      }
      worst = std::max(worst, std::abs(total - 1.0));
    }

    std::vector<double> w1(s.dimension()), w2(s.dimension());
    for (std::size_t x = 0; x < s.dimension(); ++x) {
      w1[x] = unit(rng);
      w2[x] = unit(rng);
    }
    const double p = unit(rng);
    const double c = unit(rng);
    std::vector<double> mixed(s.dimension());
    for (std::size_t x = 0; x < s.dimension(); ++x) mixed[x] = c * w1[x] + w2[x];
    const DiagonalObservable o1(n, w1), o2(n, w2), om(n, mixed);
    const Ensemble ens({{p, s}, {1.0 - p, f}});
    const double lhs = Expectation(ens, om);
    const double rhs = p * (c * Expectation(s, o1) + Expectation(s, o2)) +
                       (1.0 - p) * (c * Expectation(f, o1) + Expectation(f, o2));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {9, "property-suite", failures == 0 && worst <= kTol,
          std::to_string(kCases) + " cases per property, " + std::to_string(failures) +
              " exact failures, max deviation " + Fmt(worst)};
}

}  // namespace

std::vector<CheckResult> RunReproductionChecks(bool perturb) {
  return {ClassicalEmbedding(), BatchSequential(), SecondStageTable(),
          NoCooperation(),      FlippedTable(),    CooperationThreshold(),
          Example45(perturb),   QubitCounts(),     Properties()};
}

std::string FormatChecks(const std::vector<CheckResult>& checks) {
  std::string out;
  int failed = 0;
  for (const CheckResult& c : checks) {
    out += std::string(c.passed ? "PASS" : "FAIL") + " " + std::to_string(c.id) + " " +
           c.name + ": " + c.detail + "\n";
    if (!c.passed) ++failed;
  }
  out += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
         " checks passed\n";
  return out;
}

}  // namespace qrg
