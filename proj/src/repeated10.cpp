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

#include "qrepgame/repeated10.hpp"

#include <algorithm>
#include <cmath>

#include "qrepgame/error.hpp"

namespace qrg {
namespace {

// Bit offset (from the least significant end) of pair j, 0-based, in an
// n-qubit index.
int PairShift(int num_qubits, int pair) { return num_qubits - 2 * (pair + 1); }

int PairValue(std::uint32_t x, int num_qubits, int pair) {
  return static_cast<int>((x >> PairShift(num_qubits, pair)) & 3u);
}

std::uint32_t WithPair(std::uint32_t x, int num_qubits, int pair, int value) {
  const int shift = PairShift(num_qubits, pair);
  return (x & ~(3u << shift)) | (static_cast<std::uint32_t>(value) << shift);
}

void CheckPlayer(int player) {
  if (player != 1 && player != 2) {
    throw Error(ErrorCode::kInvalidArgument, "player must be 1 or 2");
  }
}

RepPayoffs Evaluate(const RepGame& game, const PureState& state) {
  RepPayoffs out;
  for (int player = 1; player <= 2; ++player) {
    for (int stage = 1; stage <= 2; ++stage) {
      out.e[player - 1][stage - 1] = Expectation(state, game.observable(player, stage));
    }
  }
  return out;
}

RepPayoffs Evaluate(const RepGame& game, const Ensemble& ensemble) {
  RepPayoffs out;
  for (int player = 1; player <= 2; ++player) {
    for (int stage = 1; stage <= 2; ++stage) {
      out.e[player - 1][stage - 1] =
          Expectation(ensemble, game.observable(player, stage));
    }
  }
  return out;
}

RepPayoffs Scaled(double w, const RepPayoffs& p) {
  RepPayoffs out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.e[i][j] = w * p.e[i][j];
  }
  return out;
}

}  // namespace

DiagonalObservable StageOneObservable(const StageGame& stage, int player) {
  CheckPlayer(player);
  std::vector<double> w(std::size_t{1} << kRepQubits);
  for (std::uint32_t x = 0; x < w.size(); ++x) {
    w[x] = stage.outcome(PairValue(x, kRepQubits, 0)).of(player);
  }
  return DiagonalObservable(kRepQubits, std::move(w));
}

DiagonalObservable StageTwoObservable(const StageGame& stage, int player) {
  CheckPlayer(player);
  std::vector<double> w(std::size_t{1} << kRepQubits);
  for (std::uint32_t x = 0; x < w.size(); ++x) {
    const int iota = PairValue(x, kRepQubits, 0);
    w[x] = stage.outcome(PairValue(x, kRepQubits, iota + 1)).of(player);
  }
  return DiagonalObservable(kRepQubits, std::move(w));
}

RepGame::RepGame(PureState initial, StageGame stage)
    : initial_(std::move(initial)), stage_(std::move(stage)) {
  if (initial_.num_qubits() != kRepQubits) {
    throw Error(ErrorCode::kInvalidArgument,
                "repeated game needs a 10-qubit state, got " +
                    std::to_string(initial_.num_qubits()));
  }
  for (int player = 1; player <= 2; ++player) {
    observables_.push_back(StageOneObservable(stage_, player));
    observables_.push_back(StageTwoObservable(stage_, player));
  }
}

const DiagonalObservable& RepGame::observable(int player, int stage) const {
  CheckPlayer(player);
  if (stage != 1 && stage != 2) {
    throw Error(ErrorCode::kInvalidArgument, "stage must be 1 or 2");
  }
  return observables_[2 * (player - 1) + (stage - 1)];
}

FlipLayer StrategyQubitMap(int player, const RepStrategy& strategy) {
  CheckPlayer(player);
  FlipLayer layer;
  layer.Set(player, strategy.stage1);
  for (int iota = 0; iota < 4; ++iota) {
    const auto [q1, q2] = ContingencyQubits(iota);
    layer.Set(player == 1 ? q1 : q2, strategy.after[iota]);
  }
  return layer;
}

std::pair<int, int> ContingencyQubits(int outcome) {
  if (outcome < 0 || outcome > 3) {
    throw Error(ErrorCode::kInvalidArgument, "outcome must be in 0..3");
  }
  return {2 * outcome + 3, 2 * outcome + 4};
}

double RepPayoffs::MaxAbsDifference(const RepPayoffs& other) const {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(e[i][j] - other.e[i][j]));
  }
  return worst;
}

RepPayoffs PlayBatch(const RepGame& game, const RepStrategy& s1, const RepStrategy& s2) {
  const FlipLayer layer = StrategyQubitMap(1, s1).Merged(StrategyQubitMap(2, s2));
  return Evaluate(game, ApplyFlips(game.initial(), layer));
}

PlayTranscript PlaySequential(const RepGame& game, const RepStrategy& s1,
                              const RepStrategy& s2) {
  PlayTranscript t;
  t.stage1_choice1 = s1.stage1;
  t.stage1_choice2 = s2.stage1;

  const PureState psi =
      ApplyFlips(game.initial(), FlipLayer{{1, s1.stage1}, {2, s2.stage1}});
  for (int iota = 0; iota < 4; ++iota) {
    t.branches[iota].outcome = iota;
    t.branches[iota].choice1 = s1.after[iota];
    t.branches[iota].choice2 = s2.after[iota];
  }

  std::vector<Ensemble::Member> members;
  for (MeasurementBranch& b : MeasurePair(psi, 1, 2)) {
    const auto [q1, q2] = ContingencyQubits(b.outcome);
    PureState fin = ApplyFlips(
        b.post_state, FlipLayer{{q1, s1.after[b.outcome]}, {q2, s2.after[b.outcome]}});
    TranscriptBranch& br = t.branches[b.outcome];
    br.probability = b.probability;
    br.reachable = true;
    br.contribution = Scaled(b.probability, Evaluate(game, fin));
    members.emplace_back(b.probability, std::move(fin));
  }
  t.payoffs = Evaluate(game, Ensemble(std::move(members)));
  return t;
}

MixedRepStrategy::MixedRepStrategy(std::vector<Entry> support)
    : support_(std::move(support)) {
  if (support_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mixed strategy needs a support");
  }
  double total = 0.0;
  for (const auto& [p, s] : support_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "mixing probability " + std::to_string(p) + " outside [0,1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kInvalidArgument,
                "mixing probabilities sum to " + std::to_string(total));
  }
}

RepPayoffs PlayMixed(const RepGame& game, const MixedRepStrategy& m1,
                     const MixedRepStrategy& m2) {
  RepPayoffs out;
  for (const auto& [p, s1] : m1.support()) {
    for (const auto& [q, s2] : m2.support()) {
      const RepPayoffs e = PlayBatch(game, s1, s2);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out.e[i][j] += p * q * e.e[i][j];
      }
    }
  }
  return out;
}

Bimatrix RepBimatrix(const RepGame& game) {
  std::vector<Payoff> cells(RepStrategy::kCount * RepStrategy::kCount);
  for (int r = 0; r < RepStrategy::kCount; ++r) {
    for (int c = 0; c < RepStrategy::kCount; ++c) {
      cells[r * RepStrategy::kCount + c] =
          PlayBatch(game, RepStrategy::FromIndex(r), RepStrategy::FromIndex(c)).totals();
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < RepStrategy::kCount; ++i) {
    labels.push_back(RepStrategy::FromIndex(i).ToBits());
  }
  return Bimatrix(RepStrategy::kCount, RepStrategy::kCount, std::move(cells), labels,
                  labels);
}

std::optional<std::vector<PureState>> FactorPairs(const PureState& state, double tol) {
  const int n = state.num_qubits();
  if (n % 2 != 0) return std::nullopt;
  const int pairs = n / 2;
  const auto amps = state.amplitudes();

  std::uint32_t pivot = 0;
  for (std::uint32_t x = 1; x < amps.size(); ++x) {
    if (std::abs(amps[x]) > std::abs(amps[pivot])) pivot = x;
  }
  const Complex a = amps[pivot];

  // f[j][y] = psi(pivot with pair j set to y) / psi(pivot).
  std::vector<std::array<Complex, 4>> f(pairs);
  for (int j = 0; j < pairs; ++j) {
    for (int y = 0; y < 4; ++y) f[j][y] = amps[WithPair(pivot, n, j, y)] / a;
  }
  for (std::uint32_t x = 0; x < amps.size(); ++x) {
    Complex predicted = a;
    for (int j = 0; j < pairs; ++j) predicted *= f[j][PairValue(x, n, j)];
    if (std::abs(predicted - amps[x]) > tol) return std::nullopt;
  }

  const Complex phase = a / std::abs(a);
  std::vector<PureState> factors;
  for (int j = 0; j < pairs; ++j) {
    std::vector<Complex> v(f[j].begin(), f[j].end());
    if (j == 0) {
      for (Complex& c : v) c *= phase;
    }
    factors.push_back(PureState::Normalized(2, std::move(v)));
  }
  return factors;
}

bool IsGhzFamily(const PureState& state, double tol) {
  const auto amps = state.amplitudes();
  const std::size_t last = amps.size() - 1;
  for (std::size_t x = 1; x < last; ++x) {
    if (std::norm(amps[x]) > tol) return false;
  }
  return true;
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const RepGame& game, std::optional<std::vector<PureState>> factors)
      : game_(game), factors_(std::move(factors)) {
    total_[0] = Plus(game.observable(1, 1), game.observable(1, 2));
    total_[1] = Plus(game.observable(2, 1), game.observable(2, 2));
  }

  ExtensiveTree Build() {
    tree_.family = factors_ ? "pair_product" : "ghz";
    const int root = AddDecision(1, "1.1", "", true);
    for (int k1 = 0; k1 < 2; ++k1) {
      const std::string h1 = std::to_string(k1);
      const int p2 = AddDecision(2, "2.1", h1, true);
      Link(root, p2);
      for (int k2 = 0; k2 < 2; ++k2) {
        Link(p2, BuildChance(k1, k2));
      }
    }
    return std::move(tree_);
  }

 private:
  static std::vector<double> Plus(const DiagonalObservable& a, const DiagonalObservable& b) {
    std::vector<double> w(a.weights().begin(), a.weights().end());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += b.weights()[i];
    return w;
  }

  int AddNode(TreeNode node) {
    node.id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back(std::move(node));
    return tree_.nodes.back().id;
  }

  int AddDecision(int owner, std::string infoset, std::string history, bool reachable) {
    TreeNode n;
    n.kind = NodeKind::kDecision;
    n.owner = owner;
    n.infoset = std::move(infoset);
    n.history = std::move(history);
    n.actions = {"0", "1"};
    n.reachable = reachable;
    return AddNode(std::move(n));
  }

  void Link(int parent, int child) { tree_.nodes[parent].children.push_back(child); }

  int BuildChance(int k1, int k2) {
    const std::string h = std::to_string(k1) + std::to_string(k2);
    const PureState psi = ApplyFlips(game_.initial(), FlipLayer{{1, k1}, {2, k2}});
    const std::array<double, 4> dist = PairDistribution(psi, 1, 2);
    std::array<std::optional<PureState>, 4> post;
    for (MeasurementBranch& b : MeasurePair(psi, 1, 2)) post[b.outcome] = std::move(b.post_state);

    TreeNode chance;
    chance.kind = NodeKind::kChance;
    chance.history = h;
    chance.actions = {"00", "01", "10", "11"};
    chance.probabilities.assign(dist.begin(), dist.end());
    const int id = AddNode(std::move(chance));

    for (int iota = 0; iota < 4; ++iota) {
      const bool reachable = dist[iota] > kPruneProbability;
      const std::string hist = h + "|" + tree_.nodes[id].actions[iota];
      std::optional<PureState> conditional = ConditionalState(iota, post[iota]);
      const int p1 = AddDecision(1, "1." + std::to_string(iota + 2), hist, reachable);
      Link(id, p1);
      for (int a = 0; a < 2; ++a) {
        const int p2 = AddDecision(2, "2." + std::to_string(iota + 2),
                                   hist + "|" + std::to_string(a), reachable);
        Link(p1, p2);
        for (int b = 0; b < 2; ++b) {
          TreeNode leaf;
          leaf.kind = NodeKind::kTerminal;
          leaf.history = hist + "|" + std::to_string(a) + std::to_string(b);
          leaf.reachable = reachable;
          if (conditional) {
            const auto [q1, q2] = ContingencyQubits(iota);
            const PureState fin = ApplyFlips(*conditional, FlipLayer{{q1, a}, {q2, b}});
            leaf.payoff = Payoff{Dot(fin, total_[0]), Dot(fin, total_[1])};
          }
          Link(p2, AddNode(std::move(leaf)));
        }
      }
    }
    return id;
  }

  // State of the register after outcome iota was observed. For pair
  // products the other pairs are untouched by the measurement, so the state
  // is defined even on pruned branches.
  std::optional<PureState> ConditionalState(int iota,
                                            const std::optional<PureState>& post) const {
    if (!factors_) return post;
    PureState s = PureState::Basis(2, static_cast<std::uint32_t>(iota));
    for (int j = 1; j < kRepPairs; ++j) s = s.Tensor((*factors_)[j]);
    return s;
  }

  static double Dot(const PureState& s, const std::vector<double>& w) {
    double total = 0.0;
    const auto amps = s.amplitudes();
    for (std::size_t x = 0; x < amps.size(); ++x) total += w[x] * std::norm(amps[x]);
    return total;
  }

  const RepGame& game_;
  std::optional<std::vector<PureState>> factors_;
  std::array<std::vector<double>, 2> total_;
  ExtensiveTree tree_;
};

}  // namespace

ExtensiveTree BuildExtensive(const RepGame& game) {
  auto factors = FactorPairs(game.initial());
  if (!factors && !IsGhzFamily(game.initial())) {
    throw Error(ErrorCode::kUnsupported,
                "extensive form is only defined for pair-product and GHZ-type "
                "initial states");
  }
  return TreeBuilder(game, std::move(factors)).Build();
}

}  // namespace qrg
