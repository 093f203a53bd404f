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

#include "qrepgame/qstate.hpp"

#include <cmath>
#include <string>

#include "qrepgame/error.hpp"

namespace qrg {
namespace {

void CheckQubitCount(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw Error(ErrorCode::kInvalidArgument,
                "register size must be in 1.." + std::to_string(kMaxQubits) +
                    ", got " + std::to_string(num_qubits));
  }
}

void CheckDimension(int num_qubits, std::size_t size) {
  CheckQubitCount(num_qubits);
  if (size != (std::size_t{1} << num_qubits)) {
    throw Error(ErrorCode::kInvalidArgument,
                "amplitude list of length " + std::to_string(size) +
                    " does not match " + std::to_string(num_qubits) + " qubits");
  }
}

double SquaredNorm(const std::vector<Complex>& amps) {
  double total = 0.0;
  for (const Complex& a : amps) total += std::norm(a);
  return total;
}

}  // namespace

PureState::PureState(int num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
  CheckDimension(num_qubits_, amps_.size());
  const double norm = SquaredNorm(amps_);
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw Error(ErrorCode::kInvalidArgument,
                "state is not normalized: squared norm = " + std::to_string(norm));
  }
}

PureState PureState::Normalized(int num_qubits, std::vector<Complex> amps) {
  CheckDimension(num_qubits, amps.size());
  const double norm = SquaredNorm(amps);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (Complex& a : amps) a *= scale;
  return PureState(num_qubits, std::move(amps));
}

PureState PureState::Basis(int num_qubits, std::uint32_t index) {
  CheckQubitCount(num_qubits);
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  if (index >= amps.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "basis index " + std::to_string(index) + " out of range");
  }
  amps[index] = 1.0;
  return PureState(Unchecked{}, num_qubits, std::move(amps));
}

PureState PureState::Basis(const std::string& bits) {
  std::uint32_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kInvalidArgument, "invalid basis string '" + bits + "'");
    }
    index = (index << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return Basis(static_cast<int>(bits.size()), index);
}

double PureState::NormSquared() const { return SquaredNorm(amps_); }

PureState PureState::Tensor(const PureState& rhs) const {
  const int n = num_qubits_ + rhs.num_qubits_;
  CheckQubitCount(n);
  std::vector<Complex> amps;
  amps.reserve(amps_.size() * rhs.amps_.size());
  for (const Complex& a : amps_) {
    for (const Complex& b : rhs.amps_) amps.push_back(a * b);
  }
  return PureState(Unchecked{}, n, std::move(amps));
}

std::uint32_t QubitMask(int num_qubits, int qubit) {
  if (qubit < 1 || qubit > num_qubits) {
    throw Error(ErrorCode::kInvalidArgument,
                "qubit index " + std::to_string(qubit) + " outside 1.." +
                    std::to_string(num_qubits));
  }
  return std::uint32_t{1} << (num_qubits - qubit);
}

FlipLayer::FlipLayer(std::initializer_list<std::pair<const int, int>> flips) {
  for (const auto& [qubit, bit] : flips) Set(qubit, bit);
}

FlipLayer& FlipLayer::Set(int qubit, int bit) {
  if (bit != 0 && bit != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "operator choice must be 0 or 1, got " + std::to_string(bit));
  }
  if (qubit < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "qubit index must be positive, got " + std::to_string(qubit));
  }
  flips_[qubit] = bit;
  return *this;
}

std::uint32_t FlipLayer::Mask(int num_qubits) const {
  std::uint32_t mask = 0;
  for (const auto& [qubit, bit] : flips_) {
    const std::uint32_t m = QubitMask(num_qubits, qubit);
    if (bit) mask |= m;
  }
  return mask;
}

FlipLayer FlipLayer::Merged(const FlipLayer& other) const {
  FlipLayer out = *this;
  for (const auto& [qubit, bit] : other.flips_) out.Set(qubit, bit);
  return out;
}

PureState ApplyFlipMask(const PureState& state, std::uint32_t mask) {
  const auto& in = state.amps_;
  if (mask >= in.size()) {
    throw Error(ErrorCode::kInvalidArgument, "flip mask exceeds register");
  }
  std::vector<Complex> out(in.size());
  for (std::uint32_t x = 0; x < in.size(); ++x) out[x] = in[x ^ mask];
  return PureState(PureState::Unchecked{}, state.num_qubits_, std::move(out));
}

PureState ApplyFlips(const PureState& state, const FlipLayer& layer) {
  return ApplyFlipMask(state, layer.Mask(state.num_qubits()));
}

namespace {

struct PairMasks {
  std::uint32_t a;
  std::uint32_t b;
};

PairMasks ResolvePair(const PureState& state, int qubit_a, int qubit_b) {
  if (qubit_a == qubit_b) {
    throw Error(ErrorCode::kInvalidArgument, "measured qubits must differ");
  }
  return {QubitMask(state.num_qubits(), qubit_a),
          QubitMask(state.num_qubits(), qubit_b)};
}

int OutcomeOf(std::uint32_t x, PairMasks m) {
  return ((x & m.a) ? 2 : 0) | ((x & m.b) ? 1 : 0);
}

}  // namespace

std::array<double, 4> PairDistribution(const PureState& state, int qubit_a,
                                       int qubit_b) {
  const PairMasks masks = ResolvePair(state, qubit_a, qubit_b);
  std::array<double, 4> dist{};
  const auto amps = state.amplitudes();
  for (std::uint32_t x = 0; x < amps.size(); ++x) {
    dist[OutcomeOf(x, masks)] += std::norm(amps[x]);
  }
  return dist;
}

std::vector<MeasurementBranch> MeasurePair(const PureState& state, int qubit_a,
                                           int qubit_b) {
  const PairMasks masks = ResolvePair(state, qubit_a, qubit_b);
  const std::array<double, 4> dist = PairDistribution(state, qubit_a, qubit_b);
  const auto amps = state.amplitudes();

  std::vector<MeasurementBranch> branches;
  for (int outcome = 0; outcome < 4; ++outcome) {
    const double p = dist[outcome];
    if (p <= kPruneProbability) continue;
    const double scale = 1.0 / std::sqrt(p);
    std::vector<Complex> projected(amps.size());
    for (std::uint32_t x = 0; x < amps.size(); ++x) {
      if (OutcomeOf(x, masks) == outcome) projected[x] = amps[x] * scale;
    }
    branches.push_back(
        {outcome, p, PureState(state.num_qubits(), std::move(projected))});
  }
  return branches;
}

Ensemble::Ensemble(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ensemble must not be empty");
  }
  const int n = members_.front().second.num_qubits();
  double total = 0.0;
  for (const auto& [p, s] : members_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ensemble probability " + std::to_string(p) + " outside [0,1]");
    }
    if (s.num_qubits() != n) {
      throw Error(ErrorCode::kInvalidArgument, "ensemble members differ in register size");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kInvalidArgument,
                "ensemble probabilities sum to " + std::to_string(total));
  }
}

Ensemble Ensemble::Pure(PureState state) {
  std::vector<Member> members;
  members.emplace_back(1.0, std::move(state));
  return Ensemble(std::move(members));
}

DiagonalObservable::DiagonalObservable(int num_qubits,
                                       const std::map<std::uint32_t, double>& weights)
    : num_qubits_(num_qubits) {
  CheckQubitCount(num_qubits);
  weights_.assign(std::size_t{1} << num_qubits, 0.0);
  for (const auto& [index, w] : weights) {
    if (index >= weights_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "observable index " + std::to_string(index) + " out of range");
    }
    weights_[index] = w;
  }
}

DiagonalObservable::DiagonalObservable(int num_qubits, std::vector<double> dense_weights)
    : num_qubits_(num_qubits), weights_(std::move(dense_weights)) {
  CheckDimension(num_qubits, weights_.size());
}

double Expectation(const PureState& state, const DiagonalObservable& obs) {
  if (state.num_qubits() != obs.num_qubits()) {
    throw Error(ErrorCode::kInvalidArgument,
                "observable acts on " + std::to_string(obs.num_qubits()) +
                    " qubits, state has " + std::to_string(state.num_qubits()));
  }
  const auto amps = state.amplitudes();
  const auto w = obs.weights();
  double total = 0.0;
  for (std::size_t x = 0; x < amps.size(); ++x) total += w[x] * std::norm(amps[x]);
  return total;
}

double Expectation(const Ensemble& ensemble, const DiagonalObservable& obs) {
  double total = 0.0;
  for (const auto& [p, s] : ensemble.members()) total += p * Expectation(s, obs);
  return total;
}

}  // namespace qrg
