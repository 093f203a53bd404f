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

#include "qrepgame/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qrepgame/error.hpp"
#include "qrepgame/iqbaltoor.hpp"
#include "qrepgame/serialize.hpp"
#include "qrepgame/spe.hpp"

namespace qrg {
namespace {

using nlohmann::json;

void Require10(const GameConfig& config, const char* what) {
  if (config.protocol == Protocol::kIqbalToor) {
    throw Error(ErrorCode::kUnsupported,
                std::string(what) + " is defined for the mw10 and classical protocols only");
  }
}

RepGame ClassicalGame(const StageGame& stage) {
  return RepGame(PureState::Basis(kRepQubits, 0), stage);
}

Complex RandomPhase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

}  // namespace

Bimatrix ProtocolBimatrix(const GameConfig& config) {
  switch (config.protocol) {
    case Protocol::kMw10:
      return RepBimatrix(RepGame(config.initial, config.stage));
    case Protocol::kIqbalToor:
      return ITPureBimatrix(ITGame(config.initial, config.stage));
    case Protocol::kClassical:
      return ClassicalTwiceRepeated(config.stage);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown protocol");
}

EquilibriumReport ProtocolNash(const GameConfig& config, double tol) {
  return PureNash(ProtocolBimatrix(config), tol);
}

EquilibriumReport ProtocolSpe(const GameConfig& config, double tol) {
  Require10(config, "SPE");
  if (config.protocol == Protocol::kClassical) {
    return SpePairProduct(ClassicalGame(config.stage), tol);
  }
  return SpePairProduct(RepGame(config.initial, config.stage), tol);
}

json ProtocolDominance(const GameConfig& config, double tol) {
  const Bimatrix bm = ProtocolBimatrix(config);
  json out = DominanceJson(bm, tol);
  if (config.protocol == Protocol::kIqbalToor) {
    try {
      out["no_cooperation"] = ToJson(ITNoCooperationCheck(ITGame(config.initial, config.stage), tol));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPrecondition) throw;
      out["no_cooperation"] = {{"applicable", false}, {"reason", e.what()}};
    }
  }
  return out;
}

ExtensiveTree ProtocolExtensive(const GameConfig& config) {
  Require10(config, "the extensive form");
  if (config.protocol == Protocol::kClassical) return BuildExtensive(ClassicalGame(config.stage));
  return BuildExtensive(RepGame(config.initial, config.stage));
}

ComparisonReport CompareProtocols(Protocol protocol, const StageGame& stage, int samples,
                                  std::uint64_t seed) {
  if (protocol == Protocol::kClassical) {
    throw Error(ErrorCode::kInvalidArgument,
                "batch/sequential comparison needs the mw10 or iqbal-toor protocol");
  }
  if (samples < 0) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 0");

  ComparisonReport report{protocol, samples, seed, 0, 0.0};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    if (protocol == Protocol::kMw10) {
      const RepGame game(RandomState(kRepQubits, rng), stage);
      for (int r = 0; r < RepStrategy::kCount; ++r) {
        for (int c = 0; c < RepStrategy::kCount; ++c) {
          const RepStrategy s1 = RepStrategy::FromIndex(r);
          const RepStrategy s2 = RepStrategy::FromIndex(c);
          const double d =
              PlayBatch(game, s1, s2).MaxAbsDifference(PlaySequential(game, s1, s2).payoffs);
          report.max_deviation = std::max(report.max_deviation, d);
          ++report.profiles;
        }
      }
    } else {
      const ITGame game(RandomState(4, rng), stage);
      for (int r = 0; r < ITStrategy::kPureCount; ++r) {
        for (int c = 0; c < ITStrategy::kPureCount; ++c) {
          const ITPayoffs batch = ITBatch(game, r, c);
          const ITPayoffs seq =
              ITExpected(game, ITStrategy::FromPureIndex(r), ITStrategy::FromPureIndex(c));
          for (int i = 1; i <= 2; ++i) {
            for (int j = 1; j <= 2; ++j) {
              report.max_deviation =
                  std::max(report.max_deviation, std::abs(batch.at(i, j) - seq.at(i, j)));
            }
          }
          ++report.profiles;
        }
      }
    }
  }
  return report;
}

json ToJson(const ComparisonReport& r) {
  return {{"protocol", ProtocolName(r.protocol)},
          {"samples", r.samples},
          {"seed", r.seed},
          {"profiles", r.profiles},
          {"max_deviation", r.max_deviation},
          {"tolerance", 1e-9},
          {"passed", r.max_deviation <= 1e-9}};
}

PureState RandomState(int num_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  for (Complex& a : amps) {
    const double re = gauss(rng);
    a = {re, gauss(rng)};
  }
  return PureState::Normalized(num_qubits, std::move(amps));
}

PureState RandomPdConsistentState(const StageGame& stage, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> bias(1.0, 4.0);
  for (;;) {
    std::vector<Complex> amps(16);
    const double boost = bias(rng);
    for (std::uint32_t x = 0; x < 16; ++x) {
      const double re = gauss(rng);
      amps[x] = Complex(re, gauss(rng)) * ((x >> 2) == 0 ? boost : 1.0);
    }
    // Equal magnitudes on |01 z> and |10 z> keep the marginal symmetric.
    for (std::uint32_t z = 0; z < 4; ++z) {
      amps[0b1000 | z] = std::abs(amps[0b0100 | z]) * RandomPhase(rng);
    }
    PureState candidate = PureState::Normalized(4, std::move(amps));
    if (ITStageOnePattern(ITGame(candidate, stage)).pd_consistent) return candidate;
  }
}

PureState RandomDiagonalPairState(double weight, std::mt19937_64& rng) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "weight must lie in [0, 1]");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double a = weight * unit(rng);
  const double b = (1.0 - weight) * unit(rng);
  std::vector<Complex> amps(16);
  amps[0b0000] = std::sqrt(a) * RandomPhase(rng);
  amps[0b1100] = std::sqrt(weight - a) * RandomPhase(rng);
  amps[0b0011] = std::sqrt(b) * RandomPhase(rng);
  amps[0b1111] = std::sqrt(1.0 - weight - b) * RandomPhase(rng);
  return PureState::Normalized(4, std::move(amps));
}

}  // namespace qrg
