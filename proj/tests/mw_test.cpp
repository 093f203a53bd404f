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

#include "qrepgame/mw.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qrepgame/error.hpp"
#include "test_util.hpp"

namespace qrg {
namespace {

PureState Diagonal(Complex l0, Complex l1) {
  return PureState::Normalized(2, {l0, 0, 0, l1});
}

TEST_CASE("mw_bimatrix on |00> is the stage game") {
  const StageGame pd = MakePd(5, 3, 1, 0);
  const Bimatrix bm = MWBimatrix(MWGame(PureState::Basis("00"), pd));
  CHECK(bm.MaxAbsDifference(StageBimatrix(pd)) == 0.0);
}

TEST_CASE("mw_bimatrix on |11> swaps cooperation and defection") {
  const Bimatrix bm = MWBimatrix(MWGame(PureState::Basis("11"), MakePd(5, 3, 1, 0)));
  CHECK(bm.at(1, 1) == Payoff{3, 3});
  CHECK(bm.at(0, 0) == Payoff{1, 1});
  CHECK(bm.at(0, 1) == Payoff{5, 0});
  CHECK(bm.at(1, 0) == Payoff{0, 5});
}

TEST_CASE("mw_bimatrix on sqrt(0.6)|00> + sqrt(0.4)|11>") {
  const StageGame pd = MakePd(5, 4, 1, 0);
  const Bimatrix bm = MWBimatrix(MWGame(Diagonal(std::sqrt(0.6), std::sqrt(0.4)), pd));
  for (int k3 = 0; k3 < 2; ++k3) {
    for (int k4 = 0; k4 < 2; ++k4) {
      const Payoff want = 0.6 * pd.outcome(k3, k4) + 0.4 * pd.outcome(1 - k3, 1 - k4);
      CHECK(bm.at(k3, k4).first == doctest::Approx(want.first).epsilon(1e-12));
      CHECK(bm.at(k3, k4).second == doctest::Approx(want.second).epsilon(1e-12));
    }
  }
  CHECK(bm.at(1, 1).first == doctest::Approx(2.2).epsilon(1e-12));
  CHECK(bm.at(1, 1).second == doctest::Approx(2.2).epsilon(1e-12));
}

TEST_CASE("MWGame needs two qubits") {
  CHECK_THROWS_AS(MWGame(PureState::Basis("000"), MakePd(5, 3, 1, 0)), Error);
}

TEST_CASE("basis states give row/column permutations of the stage table") {
  const StageGame g = MakePd(6, 4, 2, 1);
  for (int x = 0; x < 4; ++x) {
    const Bimatrix bm = MWBimatrix(MWGame(PureState::Basis(2, x), g));
    for (int k1 = 0; k1 < 2; ++k1) {
      for (int k2 = 0; k2 < 2; ++k2) {
        CHECK(bm.at(k1, k2) == g.outcome(k1 ^ (x >> 1), k2 ^ (x & 1)));
      }
    }
  }
}

TEST_CASE("random states agree with the oracle; lambda swap complements choices") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1, 1);
  const StageGame g = MakePd(5, 3, 1, 0);
  const oracle::Table t = qrg_test::ToTable(g);
  for (int trial = 0; trial < 1000; ++trial) {
    const oracle::Amps a = oracle::Random(2, rng);
    const Bimatrix bm = MWBimatrix(MWGame(qrg_test::FromAmps(2, a), g));
    for (int k1 = 0; k1 < 2; ++k1) {
      for (int k2 = 0; k2 < 2; ++k2) {
        const auto want = oracle::MwCell(qrg_test::ToAmps(qrg_test::FromAmps(2, a)), t, k1, k2);
        REQUIRE(std::abs(bm.at(k1, k2).first - want[0]) <= 1e-12);
        REQUIRE(std::abs(bm.at(k1, k2).second - want[1]) <= 1e-12);
      }
    }

    const Complex l0(u(rng), u(rng)), l1(u(rng), u(rng));
    const PureState s = Diagonal(l0, l1);
    const Bimatrix d = MWBimatrix(MWGame(s, g));
    const Bimatrix swapped = MWBimatrix(MWGame(Diagonal(l1, l0), g));
    const double w0 = std::norm(s.amplitude(0));
    for (int k1 = 0; k1 < 2; ++k1) {
      for (int k2 = 0; k2 < 2; ++k2) {
        const Payoff want = w0 * g.outcome(k1, k2) + (1 - w0) * g.outcome(1 - k1, 1 - k2);
        REQUIRE(std::abs(d.at(k1, k2).first - want.first) <= 1e-12);
        REQUIRE(std::abs(d.at(k1, k2).second - want.second) <= 1e-12);
        REQUIRE(std::abs(swapped.at(1 - k1, 1 - k2).first - d.at(k1, k2).first) <= 1e-12);
        REQUIRE(std::abs(swapped.at(1 - k1, 1 - k2).second - d.at(k1, k2).second) <= 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace qrg
