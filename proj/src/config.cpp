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

#include "qrepgame/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "qrepgame/error.hpp"

namespace qrg {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::kConfig, path.empty() ? message : path + ": " + message);
}

double Number(const json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(path, "must be finite");
  return v;
}

void CheckKeys(const json& obj, const std::string& path,
               std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) Fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) Fail(path, "unknown field \"" + key + "\"");
  }
}

std::string Join(const std::string& path, const std::string& field) {
  return path.empty() ? field : path + "." + field;
}

StageGame ParsePayoffs(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("outcomes")) {
    CheckKeys(j, path, {"outcomes"});
    const json& o = j["outcomes"];
    const std::string opath = Join(path, "outcomes");
    if (!o.is_array() || o.size() != 4) Fail(opath, "expected four [u1, u2] pairs");
    StageGame::Table table;
    for (int k = 0; k < 4; ++k) {
      const std::string kpath = opath + "[" + std::to_string(k) + "]";
      if (!o[k].is_array() || o[k].size() != 2) Fail(kpath, "expected [u1, u2]");
      table[k >> 1][k & 1] = {Number(o[k][0], kpath + "[0]"), Number(o[k][1], kpath + "[1]")};
    }
    return StageGame(table);
  }
  CheckKeys(j, path, {"T", "R", "P", "S"});
  double v[4];
  const char* names[4] = {"T", "R", "P", "S"};
  for (int k = 0; k < 4; ++k) {
    if (!j.contains(names[k])) Fail(path, std::string("missing field \"") + names[k] + "\"");
    v[k] = Number(j[names[k]], Join(path, names[k]));
  }
  return MakePd(v[0], v[1], v[2], v[3]);
}

std::uint32_t ParseBasis(const json& j, int num_qubits, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a bit string");
  const std::string bits = j.get<std::string>();
  if (static_cast<int>(bits.size()) != num_qubits) {
    Fail(path, "\"" + bits + "\" has " + std::to_string(bits.size()) + " bits, expected " +
                   std::to_string(num_qubits));
  }
  std::uint32_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') Fail(path, "\"" + bits + "\" is not a bit string");
    index = (index << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return index;
}

PureState ParseTerms(const json& terms, int num_qubits, const std::string& path) {
  if (!terms.is_array() || terms.empty()) Fail(path, "expected a non-empty list of terms");
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  std::vector<bool> seen(amps.size());
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tpath = path + "[" + std::to_string(t) + "]";
    const json& term = terms[t];
    CheckKeys(term, tpath, {"basis", "re", "im", "prob"});
    if (!term.contains("basis")) Fail(tpath, "missing field \"basis\"");
    const std::uint32_t x = ParseBasis(term["basis"], num_qubits, tpath + ".basis");
    if (seen[x]) Fail(tpath + ".basis", "duplicate basis state");
    seen[x] = true;
    if (term.contains("prob")) {
      if (term.contains("re") || term.contains("im")) {
        Fail(tpath, "give either \"prob\" or \"re\"/\"im\", not both");
      }
      const double p = Number(term["prob"], tpath + ".prob");
      if (p < 0.0) Fail(tpath + ".prob", "must be non-negative");
      amps[x] = std::sqrt(p);
    } else {
      const double re = term.contains("re") ? Number(term["re"], tpath + ".re") : 0.0;
      const double im = term.contains("im") ? Number(term["im"], tpath + ".im") : 0.0;
      amps[x] = {re, im};
    }
  }
  double norm = 0.0;
  for (const Complex& a : amps) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "amplitudes have squared norm " << norm << ", expected 1 within 1e-9";
    Fail(path, msg.str());
  }
  if (std::abs(norm - 1.0) <= kNormTolerance) return PureState(num_qubits, std::move(amps));
  return PureState::Normalized(num_qubits, std::move(amps));
}

PureState ParsePreset(const json& j, int num_qubits, const std::string& path) {
  CheckKeys(j, path, {"preset", "lambda0_sq"});
  const std::string ppath = Join(path, "preset");
  if (!j["preset"].is_string()) Fail(ppath, "expected a preset name");
  const std::string name = j["preset"].get<std::string>();
  if (name != "ghz" && j.contains("lambda0_sq")) {
    Fail(Join(path, "lambda0_sq"), "only valid with the ghz preset");
  }
  if (name == "all_zero") return PureState::Basis(num_qubits, 0);
  if (name == "ghz") {
    if (!j.contains("lambda0_sq")) Fail(path, "ghz preset needs \"lambda0_sq\"");
    const double l = Number(j["lambda0_sq"], Join(path, "lambda0_sq"));
    if (l < 0.0 || l > 1.0) Fail(Join(path, "lambda0_sq"), "must lie in [0, 1]");
    return GhzState(num_qubits, l);
  }
  if (name == "example_4_5") {
    if (num_qubits != 10) Fail(ppath, "example_4_5 is a 10-qubit state");
    return Example45State();
  }
  Fail(ppath, "unknown preset \"" + name + "\"");
}

PureState ParseState(const json& j, int num_qubits, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
  if (j.contains("preset")) return ParsePreset(j, num_qubits, path);
  if (j.contains("terms")) {
    CheckKeys(j, path, {"terms"});
    return ParseTerms(j["terms"], num_qubits, Join(path, "terms"));
  }
  if (j.contains("pair_product")) {
    CheckKeys(j, path, {"pair_product"});
    const json& pairs = j["pair_product"];
    const std::string ppath = Join(path, "pair_product");
    const int count = num_qubits / 2;
    if (!pairs.is_array() || static_cast<int>(pairs.size()) != count) {
      Fail(ppath, "expected " + std::to_string(count) + " two-qubit states");
    }
    PureState state = ParseTerms(pairs[0], 2, ppath + "[0]");
    for (int k = 1; k < count; ++k) {
      state = state.Tensor(ParseTerms(pairs[k], 2, ppath + "[" + std::to_string(k) + "]"));
    }
    return state;
  }
  Fail(path, "expected one of \"terms\", \"pair_product\", \"preset\"");
}

std::string Location(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string BitString(std::uint32_t x, int num_qubits) {
  std::string bits(num_qubits, '0');
  for (int q = 0; q < num_qubits; ++q) {
    if (x & QubitMask(num_qubits, q + 1)) bits[q] = '1';
  }
  return bits;
}

}  // namespace

const char* ProtocolName(Protocol protocol) {
  switch (protocol) {
    case Protocol::kMw10:
      return "mw10";
    case Protocol::kIqbalToor:
      return "iqbal-toor";
    case Protocol::kClassical:
      return "classical";
  }
  return "";
}

Protocol ParseProtocol(const std::string& name) {
  for (Protocol p : {Protocol::kMw10, Protocol::kIqbalToor, Protocol::kClassical}) {
    if (name == ProtocolName(p)) return p;
  }
  throw Error(ErrorCode::kConfig,
              "unknown protocol \"" + name + "\" (expected mw10, iqbal-toor or classical)");
}

int ProtocolQubits(Protocol protocol) { return protocol == Protocol::kIqbalToor ? 4 : 10; }

PureState GhzState(int num_qubits, double lambda0_sq) {
  if (!(lambda0_sq >= 0.0 && lambda0_sq <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda0_sq must lie in [0, 1]");
  }
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  amps.front() = std::sqrt(lambda0_sq);
  amps.back() += std::sqrt(1.0 - lambda0_sq);
  return PureState::Normalized(num_qubits, std::move(amps));
}

PureState Example45State() {
  const PureState pair(2, {std::sqrt(0.6), 0.0, 0.0, std::sqrt(0.4)});
  return PureState::Basis(2, 0).Tensor(pair).Tensor(PureState::Basis(6, 0));
}

GameConfig ParseConfig(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    throw Error(ErrorCode::kConfig,
                "malformed JSON at " + Location(json_text, e.byte) + ": " +
                    (pos == std::string::npos ? what : what.substr(pos)));
  }
  CheckKeys(j, "", {"protocol", "payoffs", "initial_state"});

  GameConfig config;
  if (j.contains("protocol")) {
    if (!j["protocol"].is_string()) Fail("protocol", "expected a string");
    try {
      config.protocol = ParseProtocol(j["protocol"].get<std::string>());
    } catch (const Error& e) {
      Fail("protocol", e.what());
    }
  }
  const int n = ProtocolQubits(config.protocol);

  const bool example = j.contains("initial_state") && j["initial_state"].is_object() &&
                       j["initial_state"].value("preset", json()) == "example_4_5";
  if (j.contains("payoffs")) {
    config.stage = ParsePayoffs(j["payoffs"], "payoffs");
  } else if (example) {
    config.stage = MakePd(5, 4, 1, 0);
  }
  config.initial = j.contains("initial_state")
                       ? ParseState(j["initial_state"], n, "initial_state")
                       : PureState::Basis(n, 0);
  return config;
}

GameConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

std::string SerializeConfig(const GameConfig& config) {
  json j;
  j["protocol"] = ProtocolName(config.protocol);
  json outcomes = json::array();
  for (int k = 0; k < 4; ++k) {
    const Payoff& o = config.stage.outcome(k);
    outcomes.push_back({o.first, o.second});
  }
  j["payoffs"] = {{"outcomes", outcomes}};
  json terms = json::array();
  const auto amps = config.initial.amplitudes();
  for (std::uint32_t x = 0; x < amps.size(); ++x) {
    if (amps[x] == Complex(0.0, 0.0)) continue;
    terms.push_back({{"basis", BitString(x, config.initial.num_qubits())},
                     {"re", amps[x].real()},
                     {"im", amps[x].imag()}});
  }
  j["initial_state"] = {{"terms", terms}};
  return j.dump(2) + "\n";
}

GameConfig WithProtocol(GameConfig config, Protocol protocol) {
  const int n = ProtocolQubits(protocol);
  if (config.initial.num_qubits() != n) {
    if (config.initial != PureState::Basis(config.initial.num_qubits(), 0)) {
      throw Error(ErrorCode::kConfig,
                  std::string("initial state has ") +
                      std::to_string(config.initial.num_qubits()) + " qubits but " +
                      ProtocolName(protocol) + " needs " + std::to_string(n));
    }
    config.initial = PureState::Basis(n, 0);
  }
  config.protocol = protocol;
  return config;
}

}  // namespace qrg
