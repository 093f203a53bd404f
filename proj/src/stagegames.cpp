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

#include "qrepgame/stagegames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qrepgame/error.hpp"

namespace qrg {

StageGame::StageGame(Table outcomes, std::array<std::string, 2> labels1,
                     std::array<std::string, 2> labels2)
    : outcomes_(outcomes), labels1_(std::move(labels1)), labels2_(std::move(labels2)) {
  for (const auto& row : outcomes_) {
    for (const Payoff& p : row) {
      if (!std::isfinite(p.first) || !std::isfinite(p.second)) {
        throw Error(ErrorCode::kInvalidArgument, "stage payoffs must be finite");
      }
    }
  }
}

std::optional<PdParams> StageGame::pd_params() const {
  const Payoff& cc = outcomes_[0][0];
  const Payoff& cd = outcomes_[0][1];
  const Payoff& dc = outcomes_[1][0];
  const Payoff& dd = outcomes_[1][1];
  if (cc.first != cc.second || dd.first != dd.second || cd.first != dc.second ||
      cd.second != dc.first) {
    return std::nullopt;
  }
  return PdParams{dc.first, cc.first, dd.first, cd.first};
}

bool StageGame::is_pd() const {
  const auto p = pd_params();
  if (!p) return false;
  return p->T > p->R && p->R > p->P && p->P > p->S && 2 * p->R > p->T + p->S;
}

bool StageGame::is_bos() const {
  const Payoff& oo = outcomes_[0][0];
  const Payoff& of = outcomes_[0][1];
  const Payoff& fo = outcomes_[1][0];
  const Payoff& ff = outcomes_[1][1];
  const double alpha = oo.first;
  const double beta = oo.second;
  const double gamma = of.first;
  if (of.second != gamma || fo.first != gamma || fo.second != gamma ||
      ff.first != beta || ff.second != alpha) {
    return false;
  }
  return alpha > beta && beta > gamma;
}

double StageGame::MinPayoff() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& row : outcomes_) {
    for (const Payoff& p : row) m = std::min({m, p.first, p.second});
  }
  return m;
}

double StageGame::MaxPayoff() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& row : outcomes_) {
    for (const Payoff& p : row) m = std::max({m, p.first, p.second});
  }
  return m;
}

StageGame MakePd(double T, double R, double P, double S) {
  return StageGame({{{Payoff{R, R}, Payoff{S, T}}, {Payoff{T, S}, Payoff{P, P}}}},
                   {"C", "D"}, {"C", "D"});
}

StageGame MakeBos(double alpha, double beta, double gamma) {
  return StageGame({{{Payoff{alpha, beta}, Payoff{gamma, gamma}},
                     {Payoff{gamma, gamma}, Payoff{beta, alpha}}}},
                   {"O", "F"}, {"O", "F"});
}

int RepStrategy::Index() const {
  return stage1 * 16 + after[0] * 8 + after[1] * 4 + after[2] * 2 + after[3];
}

RepStrategy RepStrategy::FromIndex(int index) {
  if (index < 0 || index >= kCount) {
    throw Error(ErrorCode::kInvalidArgument,
                "strategy index " + std::to_string(index) + " outside 0..31");
  }
  return {(index >> 4) & 1,
          {(index >> 3) & 1, (index >> 2) & 1, (index >> 1) & 1, index & 1}};
}

std::string RepStrategy::ToBits() const {
  std::string s(5, '0');
  const int index = Index();
  for (int i = 0; i < 5; ++i) s[i] = ((index >> (4 - i)) & 1) ? '1' : '0';
  return s;
}

RepStrategy RepStrategy::FromBits(const std::string& bits) {
  if (bits.size() != 5 ||
      bits.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "strategy must be a 5-bit string, got '" + bits + "'");
  }
  return FromIndex(std::stoi(bits, nullptr, 2));
}

Bimatrix::Bimatrix(int rows, int cols, std::vector<Payoff> cells,
                   std::vector<std::string> row_labels,
                   std::vector<std::string> col_labels)
    : rows_(rows),
      cols_(cols),
      cells_(std::move(cells)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (rows_ < 0 || cols_ < 0 ||
      cells_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
    throw Error(ErrorCode::kInvalidArgument, "bimatrix dimensions do not match cells");
  }
  if (row_labels_.empty()) {
    for (int r = 0; r < rows_; ++r) row_labels_.push_back(std::to_string(r));
  }
  if (col_labels_.empty()) {
    for (int c = 0; c < cols_; ++c) col_labels_.push_back(std::to_string(c));
  }
  if (row_labels_.size() != static_cast<std::size_t>(rows_) ||
      col_labels_.size() != static_cast<std::size_t>(cols_)) {
    throw Error(ErrorCode::kInvalidArgument, "bimatrix label count mismatch");
  }
}

double Bimatrix::MaxAbsDifference(const Bimatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    worst = std::max({worst, std::abs(cells_[i].first - other.cells_[i].first),
                      std::abs(cells_[i].second - other.cells_[i].second)});
  }
  return worst;
}

Bimatrix StageBimatrix(const StageGame& stage) {
  std::vector<Payoff> cells;
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) cells.push_back(stage.outcome(a1, a2));
  }
  const auto& l1 = stage.labels(1);
  const auto& l2 = stage.labels(2);
  return Bimatrix(2, 2, std::move(cells), {l1[0], l1[1]}, {l2[0], l2[1]});
}

namespace {

std::vector<std::string> RepStrategyLabels() {
  std::vector<std::string> labels;
  for (int i = 0; i < RepStrategy::kCount; ++i) {
    labels.push_back(RepStrategy::FromIndex(i).ToBits());
  }
  return labels;
}

}  // namespace

Bimatrix ClassicalTwiceRepeated(const StageGame& stage) {
  std::vector<Payoff> cells;
  cells.reserve(RepStrategy::kCount * RepStrategy::kCount);
  for (int r = 0; r < RepStrategy::kCount; ++r) {
    const RepStrategy s1 = RepStrategy::FromIndex(r);
    for (int c = 0; c < RepStrategy::kCount; ++c) {
      const RepStrategy s2 = RepStrategy::FromIndex(c);
      const int first = 2 * s1.stage1 + s2.stage1;
      cells.push_back(stage.outcome(first) +
                      stage.outcome(s1.after[first], s2.after[first]));
    }
  }
  auto labels = RepStrategyLabels();
  return Bimatrix(RepStrategy::kCount, RepStrategy::kCount, std::move(cells), labels,
                  labels);
}

std::int64_t QubitCount(int n_stages) {
  if (n_stages < 1 || n_stages > 31) {
    throw Error(ErrorCode::kInvalidArgument,
                "number of stages must be in 1..31, got " + std::to_string(n_stages));
  }
  std::int64_t total = 0;
  for (int j = 1; j <= n_stages; ++j) total += std::int64_t{1} << (2 * j - 1);
  return total;
}

}  // namespace qrg
