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

#ifndef QREPGAME_QSTATE_HPP_
#define QREPGAME_QSTATE_HPP_

// Minimal register core. Every strategy operator in the supported protocols
// is a tensor product of identities and bit flips, and every payoff operator
// is diagonal in the computational basis, so a state is a dense amplitude
// vector and an operator application is an index permutation.
//
// Basis convention: index x = (x_1 x_2 ... x_n)_2 with qubit 1 the most
// significant bit, so |x_1 x_2 ... x_n> reads left to right.

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qrg {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 10;
inline constexpr double kNormTolerance = 1e-12;
// Measurement branches at or below this probability are pruned.
inline constexpr double kPruneProbability = 1e-12;

class PureState {
 public:
  // Throws Error(kInvalidArgument) unless |amps| == 2^num_qubits and the
  // squared norm is 1 within kNormTolerance. No silent renormalization.
  PureState(int num_qubits, std::vector<Complex> amps);

  // Rescales |amps| to unit norm. Rejects the zero vector.
  static PureState Normalized(int num_qubits, std::vector<Complex> amps);
  static PureState Basis(int num_qubits, std::uint32_t index);
  // Parses a bit string such as "0011" into a basis state.
  static PureState Basis(const std::string& bits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::uint32_t index) const { return amps_.at(index); }
  double probability(std::uint32_t index) const { return std::norm(amps_.at(index)); }
  double NormSquared() const;

  // Kronecker product; `this` supplies the most significant qubits.
  PureState Tensor(const PureState& rhs) const;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  struct Unchecked {};
  PureState(Unchecked, int num_qubits, std::vector<Complex> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  friend PureState ApplyFlipMask(const PureState&, std::uint32_t);

  int num_qubits_;
  std::vector<Complex> amps_;
};

// Bit mask of qubit `q` (1-based) in an n-qubit register.
std::uint32_t QubitMask(int num_qubits, int qubit);

// Per-qubit choice between sigma_0 (identity) and sigma_1 (bit flip).
// Qubits that are not listed receive sigma_0.
class FlipLayer {
 public:
  FlipLayer() = default;
  FlipLayer(std::initializer_list<std::pair<const int, int>> flips);

  // `bit` must be 0 or 1; `qubit` is 1-based.
  FlipLayer& Set(int qubit, int bit);
  const std::map<int, int>& flips() const { return flips_; }

  // XOR mask for an n-qubit register; throws on out-of-range qubits.
  std::uint32_t Mask(int num_qubits) const;

  FlipLayer Merged(const FlipLayer& other) const;

  friend bool operator==(const FlipLayer&, const FlipLayer&) = default;

 private:
  std::map<int, int> flips_;
};

PureState ApplyFlips(const PureState& state, const FlipLayer& layer);
PureState ApplyFlipMask(const PureState& state, std::uint32_t mask);

struct MeasurementBranch {
  // Outcome bits (iota_1, iota_2) packed as 2 * iota_1 + iota_2.
  int outcome;
  double probability;
  PureState post_state;
};

// Projective computational-basis measurement of two qubits. Returns the
// branches with probability above kPruneProbability in outcome order, each
// with the renormalized post-measurement state.
std::vector<MeasurementBranch> MeasurePair(const PureState& state, int qubit_a,
                                           int qubit_b);

// Distribution of the pair outcome without building post states. Always four
// entries, indexed by 2 * iota_1 + iota_2.
std::array<double, 4> PairDistribution(const PureState& state, int qubit_a,
                                       int qubit_b);

class Ensemble {
 public:
  using Member = std::pair<double, PureState>;

  // Probabilities must lie in [0, 1] and sum to 1 within kNormTolerance;
  // all states must share a register size.
  explicit Ensemble(std::vector<Member> members);
  static Ensemble Pure(PureState state);

  int num_qubits() const { return members_.front().second.num_qubits(); }
  const std::vector<Member>& members() const { return members_; }

 private:
  std::vector<Member> members_;
};

// Observable diagonal in the computational basis, stored densely.
class DiagonalObservable {
 public:
  // Sparse construction; absent indices weigh 0.
  DiagonalObservable(int num_qubits, const std::map<std::uint32_t, double>& weights);
  DiagonalObservable(int num_qubits, std::vector<double> dense_weights);

  int num_qubits() const { return num_qubits_; }
  double weight(std::uint32_t index) const { return weights_.at(index); }
  std::span<const double> weights() const { return weights_; }

 private:
  int num_qubits_;
  std::vector<double> weights_;
};

// <psi| X |psi> for a diagonal X.
double Expectation(const PureState& state, const DiagonalObservable& obs);
// tr(X rho) for the ensemble's density operator.
double Expectation(const Ensemble& ensemble, const DiagonalObservable& obs);

}  // namespace qrg

#endif  // QREPGAME_QSTATE_HPP_
