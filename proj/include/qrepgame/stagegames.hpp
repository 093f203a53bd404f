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

#ifndef QREPGAME_STAGEGAMES_HPP_
#define QREPGAME_STAGEGAMES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qrg {

struct Payoff {
  double first = 0.0;   // player 1
  double second = 0.0;  // player 2

  double of(int player) const { return player == 1 ? first : second; }

  friend Payoff operator+(Payoff a, Payoff b) {
    return {a.first + b.first, a.second + b.second};
  }
  friend Payoff operator*(double w, Payoff a) { return {w * a.first, w * a.second}; }
  friend bool operator==(const Payoff&, const Payoff&) = default;
};

struct PdParams {
  double T, R, P, S;
};

// A 2x2 stage game given by its outcomes O_{i1 i2}, where i1 is player 1's
// action bit and i2 is player 2's.
class StageGame {
 public:
  using Table = std::array<std::array<Payoff, 2>, 2>;

  explicit StageGame(Table outcomes,
                     std::array<std::string, 2> labels1 = {"0", "1"},
                     std::array<std::string, 2> labels2 = {"0", "1"});

  const Payoff& outcome(int a1, int a2) const { return outcomes_.at(a1).at(a2); }
  // Outcome by packed index 2 * a1 + a2.
  const Payoff& outcome(int packed) const { return outcome(packed >> 1, packed & 1); }
  const Table& outcomes() const { return outcomes_; }
  const std::array<std::string, 2>& labels(int player) const {
    return player == 1 ? labels1_ : labels2_;
  }

  // O00 = (R,R), O01 = (S,T), O10 = (T,S), O11 = (P,P) with T > R > P > S
  // and 2R > T + S, compared exactly.
  bool is_pd() const;
  // O00 = (a,b), O01 = O10 = (c,c), O11 = (b,a) with a > b > c.
  bool is_bos() const;

  // The (T,R,P,S) reading of the table when it has PD shape, regardless of
  // the inequalities.
  std::optional<PdParams> pd_params() const;

  double MinPayoff() const;
  double MaxPayoff() const;

  friend bool operator==(const StageGame& a, const StageGame& b) {
    return a.outcomes_ == b.outcomes_;
  }

 private:
  Table outcomes_;
  std::array<std::string, 2> labels1_;
  std::array<std::string, 2> labels2_;
};

StageGame MakePd(double T, double R, double P, double S);
StageGame MakeBos(double alpha, double beta, double gamma);

// A pure strategy of the twice-repeated game: the stage-1 action and one
// stage-2 action per stage-1 outcome (00, 01, 10, 11).
struct RepStrategy {
  int stage1 = 0;
  std::array<int, 4> after{};

  static constexpr int kCount = 32;

  // index = stage1*16 + after_00*8 + after_01*4 + after_10*2 + after_11.
  int Index() const;
  static RepStrategy FromIndex(int index);
  // Five bits in index order, e.g. "01111" for (0; 1,1,1,1).
  std::string ToBits() const;
  static RepStrategy FromBits(const std::string& bits);

  static RepStrategy Uniform(int bit) { return {bit, {bit, bit, bit, bit}}; }

  friend bool operator==(const RepStrategy&, const RepStrategy&) = default;
};

// Rectangular table of payoff pairs indexed by the players' pure strategies.
class Bimatrix {
 public:
  Bimatrix(int rows, int cols, std::vector<Payoff> cells,
           std::vector<std::string> row_labels = {},
           std::vector<std::string> col_labels = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Payoff& at(int r, int c) const { return cells_.at(static_cast<std::size_t>(r) * cols_ + c); }
  const std::vector<Payoff>& cells() const { return cells_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  double MaxAbsDifference(const Bimatrix& other) const;

 private:
  int rows_;
  int cols_;
  std::vector<Payoff> cells_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// The stage game itself as a 2x2 bimatrix.
Bimatrix StageBimatrix(const StageGame& stage);

// Normal form of the classical twice-repeated game: 32 x 32, payoffs summed
// over the two stages without discounting.
Bimatrix ClassicalTwiceRepeated(const StageGame& stage);

// Qubits needed to play a 2x2 game repeated `n_stages` times. Valid for
// 1 <= n_stages <= 31.
std::int64_t QubitCount(int n_stages);

}  // namespace qrg

#endif  // QREPGAME_STAGEGAMES_HPP_
