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

#ifndef QREPGAME_ANALYSIS_HPP_
#define QREPGAME_ANALYSIS_HPP_

// Protocol-level entry points shared by the C API and the CLI.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrepgame/config.hpp"
#include "qrepgame/equilibria.hpp"
#include "qrepgame/repeated10.hpp"

namespace qrg {

// 32 x 32 for mw10 and classical, 4 x 4 for iqbal-toor.
Bimatrix ProtocolBimatrix(const GameConfig& config);

EquilibriumReport ProtocolNash(const GameConfig& config,
                               double tol = kDefaultEquilibriumTolerance);

// mw10 and classical only; classical uses |0>^10. Throws Error(kUnsupported)
// for iqbal-toor and for states entangled across pairs.
EquilibriumReport ProtocolSpe(const GameConfig& config,
                              double tol = kDefaultEquilibriumTolerance);

// Strict dominance pairs for both players; for iqbal-toor also the
// no-cooperation verdict, or the reason it does not apply.
nlohmann::json ProtocolDominance(const GameConfig& config,
                                 double tol = kDefaultEquilibriumTolerance);

// mw10 and classical only.
ExtensiveTree ProtocolExtensive(const GameConfig& config);

struct ComparisonReport {
  Protocol protocol = Protocol::kMw10;
  int samples = 0;
  std::uint64_t seed = 0;
  std::int64_t profiles = 0;   // profiles evaluated over all samples
  double max_deviation = 0.0;  // largest |E_batch - E_sequential|
};

// Batch against sequential evaluation on `samples` random states and every
// pure profile: 1024 per state for mw10, 16 for iqbal-toor. Throws
// Error(kInvalidArgument) for classical or negative `samples`.
ComparisonReport CompareProtocols(Protocol protocol, const StageGame& stage, int samples,
                                  std::uint64_t seed);
nlohmann::json ToJson(const ComparisonReport& report);

// Haar-like random state: i.i.d. complex Gaussian amplitudes, normalized.
PureState RandomState(int num_qubits, std::mt19937_64& rng);

// Random 4-qubit state whose stage-1 pattern under `stage` is
// PD-consistent. The qubit-1/2 marginal is kept symmetric and biased
// towards |00>; candidates are drawn until one qualifies.
PureState RandomPdConsistentState(const StageGame& stage, std::mt19937_64& rng);

// Random member of lambda_0000|0000> + lambda_0011|0011> + lambda_1100|1100>
// + lambda_1111|1111> with |lambda_0000|^2 + |lambda_1100|^2 = weight.
PureState RandomDiagonalPairState(double weight, std::mt19937_64& rng);

}  // namespace qrg

#endif  // QREPGAME_ANALYSIS_HPP_
