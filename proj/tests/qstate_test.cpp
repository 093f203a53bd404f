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
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qrepgame/error.hpp"
#include "test_util.hpp"

namespace qrg {
namespace {

using qrg_test::FromAmps;
using qrg_test::ToAmps;

PureState Ghz10(double l0_sq) {
  std::vector<Complex> a(1024);
  a[0] = std::sqrt(l0_sq);
  a[1023] = std::sqrt(1.0 - l0_sq);
  return PureState::Normalized(10, a);
}

TEST_CASE("PureState validates size and norm") {
  CHECK_NOTHROW(PureState(2, {1, 0, 0, 0}));
  CHECK_THROWS_AS(PureState(2, {1, 0, 0}), Error);
  CHECK_THROWS_AS(PureState(2, {1, 1, 0, 0}), Error);
  CHECK_THROWS_AS(PureState(0, {1}), Error);
  CHECK_THROWS_AS(PureState::Basis(11, 0), Error);
  CHECK_THROWS_AS(PureState::Normalized(2, {0, 0, 0, 0}), Error);
  CHECK_THROWS_AS(PureState::Basis("01a"), Error);
  // Off by more than 1e-12 is rejected, not rescaled.
  CHECK_THROWS_AS(PureState(1, {std::sqrt(0.5), std::sqrt(0.5 + 1e-10)}), Error);
  try {
    PureState(2, {1, 1, 0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("Basis states use qubit 1 as the most significant bit") {
  const PureState s = PureState::Basis("0011");
  CHECK(s.num_qubits() == 4);
  CHECK(s.probability(3) == 1.0);
  CHECK(PureState::Basis("10").Tensor(PureState::Basis("1")) == PureState::Basis("101"));
}

TEST_CASE("apply_flips examples") {
  std::mt19937_64 rng(1);
  const PureState any = FromAmps(4, oracle::Random(4, rng));
  CHECK(ApplyFlips(any, FlipLayer{}) == any);
  CHECK(ApplyFlips(PureState::Basis("0000"), FlipLayer{{1, 1}, {2, 1}}) ==
        PureState::Basis("1100"));

  // GHZ: lambda0 |k1 k2 0^8> + lambda1 |~k1 ~k2 1^8>.
  const PureState ghz = Ghz10(0.3);
  for (int k1 = 0; k1 < 2; ++k1) {
    for (int k2 = 0; k2 < 2; ++k2) {
      const PureState out = ApplyFlips(ghz, FlipLayer{{1, k1}, {2, k2}});
      const std::uint32_t lo = static_cast<std::uint32_t>((k1 << 9) | (k2 << 8));
      const std::uint32_t hi = static_cast<std::uint32_t>(((1 - k1) << 9) | ((1 - k2) << 8) | 0xff);
      CHECK(out.amplitude(lo) == ghz.amplitude(0));
      CHECK(out.amplitude(hi) == ghz.amplitude(1023));
      CHECK(out.probability(lo) + out.probability(hi) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("FlipLayer rejects bad input") {
  FlipLayer layer;
  CHECK_THROWS_AS(layer.Set(1, 2), Error);
  CHECK_THROWS_AS(layer.Set(0, 1), Error);
  layer.Set(5, 1);
  CHECK_THROWS_AS(ApplyFlips(PureState::Basis("0000"), layer), Error);
  CHECK(layer.Mask(5) == 1u);
  CHECK(FlipLayer{{1, 1}}.Merged(FlipLayer{{2, 1}}).Mask(2) == 3u);
}

TEST_CASE("measure_pair examples") {
  SUBCASE("basis state") {
    const PureState s = PureState::Basis("0000011111");
    const auto b = MeasurePair(s, 1, 2);
    REQUIRE(b.size() == 1);
    CHECK(b[0].outcome == 0);
    CHECK(b[0].probability == 1.0);
    CHECK(b[0].post_state == s);
  }
  SUBCASE("GHZ family") {
    const auto b = MeasurePair(Ghz10(0.3), 1, 2);
    REQUIRE(b.size() == 2);
    CHECK(b[0].outcome == 0);
    CHECK(b[0].probability == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(b[0].post_state.probability(0) == doctest::Approx(1.0));
    CHECK(b[1].outcome == 3);
    CHECK(b[1].probability == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(b[1].post_state.probability(1023) == doctest::Approx(1.0));
  }
  SUBCASE("two-qubit state") {
    const PureState s(2, {std::sqrt(0.6), 0, 0, std::sqrt(0.4)});
    const auto b = MeasurePair(s, 1, 2);
    REQUIRE(b.size() == 2);
    CHECK(b[0].probability == doctest::Approx(0.6));
    CHECK(b[0].post_state.probability(0) == doctest::Approx(1.0));
    CHECK(b[1].probability == doctest::Approx(0.4));
    CHECK(b[1].post_state.probability(3) == doctest::Approx(1.0));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(MeasurePair(PureState::Basis("00"), 1, 1), Error);
    CHECK_THROWS_AS(MeasurePair(PureState::Basis("00"), 1, 3), Error);
  }
}

TEST_CASE("expectation examples") {
  const DiagonalObservable r(10, std::map<std::uint32_t, double>{{0, 3.0}});
  CHECK(Expectation(Ensemble::Pure(PureState::Basis(10, 0)), r) == 3.0);

  const DiagonalObservable obs(2, std::map<std::uint32_t, double>{{1, 2.0}, {2, 7.0}});
  const Ensemble e({{0.6, PureState::Basis("01")}, {0.4, PureState::Basis("10")}});
  CHECK(Expectation(e, obs) == doctest::Approx(0.6 * 2.0 + 0.4 * 7.0));

  CHECK_THROWS_AS(Expectation(PureState::Basis("000"), obs), Error);
  CHECK_THROWS_AS(DiagonalObservable(2, std::map<std::uint32_t, double>{{4, 1.0}}), Error);
}

TEST_CASE("Ensemble validates its members") {
  CHECK_THROWS_AS(Ensemble({{0.5, PureState::Basis("0")}}), Error);
  CHECK_THROWS_AS(Ensemble({{1.5, PureState::Basis("0")}, {-0.5, PureState::Basis("1")}}),
                  Error);
  CHECK_THROWS_AS(Ensemble({{0.5, PureState::Basis("0")}, {0.5, PureState::Basis("00")}}),
                  Error);
  CHECK_THROWS_AS(Ensemble({}), Error);
}

TEST_CASE("flips agree with the bit-string oracle on random states") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> nq(1, 10);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = nq(rng);
    const oracle::Amps a = oracle::Random(n, rng);
    const PureState s = FromAmps(n, a);
    FlipLayer layer;
    std::vector<int> qs, bs;
    for (int q = 1; q <= n; ++q) {
      const int b = bit(rng);
      layer.Set(q, b);
      qs.push_back(q);
      bs.push_back(b);
    }
    const PureState f = ApplyFlips(s, layer);
    const oracle::Amps want = oracle::Flip(ToAmps(s), n, qs, bs);
    for (std::size_t x = 0; x < want.size(); ++x) REQUIRE(f.amplitude(x) == want[x]);
    REQUIRE(ApplyFlips(f, layer) == s);
    REQUIRE(std::abs(f.NormSquared() - 1.0) <= 1e-12);
  }
}

TEST_CASE("measurement probabilities normalize on random states") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> nq(2, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = nq(rng);
    const PureState s = FromAmps(n, oracle::Random(n, rng));
    const int a = std::uniform_int_distribution<int>(1, n)(rng);
    int b = std::uniform_int_distribution<int>(1, n - 1)(rng);
    if (b >= a) ++b;
    double total = 0.0;
    const auto dist = PairDistribution(s, a, b);
    for (const auto& br : MeasurePair(s, a, b)) {
      total += br.probability;
      REQUIRE(std::abs(br.post_state.NormSquared() - 1.0) <= 1e-9);
      REQUIRE(br.probability == doctest::Approx(dist[br.outcome]).epsilon(1e-12));
      // Post state lives on the outcome's subspace.
      for (std::uint32_t x = 0; x < br.post_state.dimension(); ++x) {
        const std::vector<int> bits = oracle::Bits(x, n);
        if (2 * bits[a - 1] + bits[b - 1] != br.outcome) {
          REQUIRE(br.post_state.amplitude(x) == Complex(0, 0));
        }
      }
    }
    REQUIRE(std::abs(total - 1.0) <= 1e-9);
  }
}

TEST_CASE("expectation is linear in probabilities and weights") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-3.0, 3.0), p01(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const PureState s1 = FromAmps(n, oracle::Random(n, rng));
    const PureState s2 = FromAmps(n, oracle::Random(n, rng));
    std::vector<double> w1(s1.dimension()), w2(s1.dimension()), w(s1.dimension());
    const double c1 = u(rng), c2 = u(rng), p = p01(rng);
    for (std::size_t x = 0; x < w.size(); ++x) {
      w1[x] = u(rng);
      w2[x] = u(rng);
      w[x] = c1 * w1[x] + c2 * w2[x];
    }
    const Ensemble e({{p, s1}, {1.0 - p, s2}});
    const double lhs = Expectation(e, DiagonalObservable(n, w));
    double rhs = 0.0;
    for (const auto& [q, s] : e.members()) {
      rhs += q * (c1 * Expectation(s, DiagonalObservable(n, w1)) +
                  c2 * Expectation(s, DiagonalObservable(n, w2)));
    }
    REQUIRE(std::abs(lhs - rhs) <= 1e-9);
  }
}

}  // namespace
}  // namespace qrg
