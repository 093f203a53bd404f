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

#ifndef QREPGAME_CONFIG_HPP_
#define QREPGAME_CONFIG_HPP_

// JSON game configuration.
//
//   {
//     "protocol": "mw10" | "iqbal-toor" | "classical",
//     "payoffs": {"T": 5, "R": 3, "P": 1, "S": 0}
//              | {"outcomes": [[u1, u2], [u1, u2], [u1, u2], [u1, u2]]},
//     "initial_state":
//         {"terms": [{"basis": "0000000000", "re": 1, "im": 0}, ...]}
//       | {"pair_product": [[terms of pair 1], ..., [terms of pair n/2]]}
//       | {"preset": "all_zero" | "ghz" | "example_4_5", "lambda0_sq": 0.3}
//   }
//
// A term may give "prob" instead of "re"/"im" (real amplitude sqrt(prob)).
// Outcomes are listed in the order O00, O01, O10, O11. Every field is
// optional: the defaults are mw10, PD(5,3,1,0) (PD(5,4,1,0) for the
// example_4_5 preset) and all_zero. Amplitudes must normalize within 1e-9
// and are then rescaled exactly.

#include <filesystem>
#include <string>

#include "qrepgame/qstate.hpp"
#include "qrepgame/stagegames.hpp"

namespace qrg {

enum class Protocol { kMw10, kIqbalToor, kClassical };

// "mw10", "iqbal-toor", "classical".
const char* ProtocolName(Protocol protocol);
// Throws Error(kConfig) on an unknown name.
Protocol ParseProtocol(const std::string& name);
// Register size a protocol plays on: 10 or 4.
int ProtocolQubits(Protocol protocol);

struct GameConfig {
  Protocol protocol = Protocol::kMw10;
  StageGame stage = MakePd(5, 3, 1, 0);
  PureState initial = PureState::Basis(10, 0);

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

// Throws Error(kConfig) with a line/column for malformed JSON and a field
// path (e.g. "initial_state.terms[2].basis") for invalid content.
GameConfig ParseConfig(const std::string& json_text);
GameConfig LoadConfig(const std::filesystem::path& path);

// Canonical JSON: explicit payoff outcomes and nonzero amplitude terms.
// ParseConfig(SerializeConfig(c)) == c.
std::string SerializeConfig(const GameConfig& config);

// Switches protocol, resizing an all-zero initial state to the new register;
// any other state must already have the right size (Error(kConfig)).
GameConfig WithProtocol(GameConfig config, Protocol protocol);

// lambda0 |0...0> + lambda1 |1...1> with real amplitudes.
PureState GhzState(int num_qubits, double lambda0_sq);
// |00> (sqrt(0.6)|00> + sqrt(0.4)|11>) |000000>.
PureState Example45State();

}  // namespace qrg

#endif  // QREPGAME_CONFIG_HPP_
