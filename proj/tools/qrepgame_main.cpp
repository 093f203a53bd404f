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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "qrepgame/qrepgame.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string config;
  std::string protocol;
  std::string out;
  std::string format;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  int samples = 20;
  double grid_step = 0.01;
  bool perturb = false;
  int stages = 2;
};

struct GameDeleter {
  void operator()(qrg_game* g) const { qrg_game_free(g); }
};
struct BufferDeleter {
  void operator()(qrg_buffer* b) const { qrg_buffer_free(b); }
};
using GamePtr = std::unique_ptr<qrg_game, GameDeleter>;
using BufferPtr = std::unique_ptr<qrg_buffer, BufferDeleter>;

int ExitFor(qrg_status status) {
  if (status == QRG_OK) return kExitOk;
  return status == QRG_ERR_CONFIG ? kExitConfig : kExitFailure;
}

int Report(qrg_status status) {
  std::cerr << "qrepgame: " << qrg_status_name(status) << ": " << qrg_last_error() << "\n";
  return ExitFor(status);
}

qrg_status LoadGame(const Options& opt, GamePtr& game) {
  qrg_game* raw = nullptr;
  const qrg_status st = opt.config.empty() ? qrg_game_from_json("{}", &raw)
                                           : qrg_game_from_file(opt.config.c_str(), &raw);
  if (st != QRG_OK) return st;
  game.reset(raw);
  if (!opt.protocol.empty()) return qrg_game_set_protocol(game.get(), opt.protocol.c_str());
  return QRG_OK;
}

int Write(const Options& opt, const qrg_buffer* buffer) {
  if (opt.out.empty()) {
    std::fwrite(qrg_buffer_data(buffer), 1, qrg_buffer_size(buffer), stdout);
    return kExitOk;
  }
  std::ofstream file(opt.out, std::ios::binary);
  file.write(qrg_buffer_data(buffer), static_cast<std::streamsize>(qrg_buffer_size(buffer)));
  if (!file) {
    std::cerr << "qrepgame: cannot write " << opt.out << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

qrg_format Format(const Options& opt, qrg_format fallback) {
  if (opt.format.empty()) return fallback;
  return opt.format == "csv" ? QRG_FORMAT_CSV : QRG_FORMAT_JSON;
}

// Loads the game, runs `call`, writes its buffer.
template <typename F>
int RunOnGame(const Options& opt, F&& call) {
  GamePtr game;
  if (qrg_status st = LoadGame(opt, game); st != QRG_OK) return Report(st);
  qrg_buffer* raw = nullptr;
  if (qrg_status st = call(game.get(), &raw); st != QRG_OK) return Report(st);
  BufferPtr buffer(raw);
  return Write(opt, buffer.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum twice-repeated 2x2 games: payoff tables and equilibria"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", qrg_version());

  Options opt;
  app.add_option("--config", opt.config, "Game configuration (JSON)");
  app.add_option("--protocol", opt.protocol, "Override the protocol")
      ->check(CLI::IsMember({"mw10", "iqbal-toor", "classical"}));
  app.add_option("--out", opt.out, "Write the result here instead of stdout");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", opt.tol, "Equilibrium tolerance")->capture_default_str();
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", opt.samples, "Random states for compare")->capture_default_str();
  app.add_option("--grid-step", opt.grid_step, "Grid step for scan")->capture_default_str();
  app.add_flag("--perturb", opt.perturb)->group("");

  auto* bimatrix = app.add_subcommand("bimatrix", "Full pure-strategy payoff table");
  auto* nash = app.add_subcommand("nash", "Pure Nash equilibria");
  auto* spe = app.add_subcommand("spe", "Subgame perfect equilibria (pair-product states)");
  auto* dominance = app.add_subcommand("dominance", "Strictly dominated strategies");
  auto* extensive = app.add_subcommand("extensive", "Game tree as JSON");
  auto* scan = app.add_subcommand("scan", "Cooperation threshold scan");
  auto* compare = app.add_subcommand("compare", "Batch vs sequential play on random states");
  auto* repro = app.add_subcommand("repro", "Run the reproduction checks");
  auto* qubits = app.add_subcommand("qubits", "Qubits needed for n stages");
  qubits->add_option("stages", opt.stages, "Number of stages")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (bimatrix->parsed()) {
    return RunOnGame(opt, [&](qrg_game* g, qrg_buffer** b) {
      return qrg_bimatrix(g, Format(opt, QRG_FORMAT_CSV), b);
    });
  }
  if (nash->parsed()) {
    return RunOnGame(opt, [&](qrg_game* g, qrg_buffer** b) { return qrg_nash(g, opt.tol, b); });
  }
  if (spe->parsed()) {
    return RunOnGame(opt, [&](qrg_game* g, qrg_buffer** b) { return qrg_spe(g, opt.tol, b); });
  }
  if (dominance->parsed()) {
    return RunOnGame(opt,
                     [&](qrg_game* g, qrg_buffer** b) { return qrg_dominance(g, opt.tol, b); });
  }
  if (extensive->parsed()) {
    return RunOnGame(opt, [&](qrg_game* g, qrg_buffer** b) { return qrg_extensive(g, b); });
  }
  if (scan->parsed()) {
    return RunOnGame(opt, [&](qrg_game* g, qrg_buffer** b) {
      return qrg_cooperation_scan(g, opt.grid_step, opt.tol, Format(opt, QRG_FORMAT_JSON), b);
    });
  }
  if (compare->parsed()) {
    double deviation = 0.0;
    const int code = RunOnGame(opt, [&](qrg_game* g, qrg_buffer** b) {
      return qrg_compare_protocols(g, opt.samples, opt.seed, b, &deviation);
    });
    if (code != kExitOk) return code;
    return deviation <= 1e-9 ? kExitOk : kExitFailure;
  }
  if (repro->parsed()) {
    qrg_buffer* raw = nullptr;
    int failures = 0;
    if (qrg_status st = qrg_paper_repro(opt.perturb, &raw, &failures); st != QRG_OK) {
      return Report(st);
    }
    BufferPtr buffer(raw);
    if (int code = Write(opt, buffer.get()); code != kExitOk) return code;
    return failures == 0 ? kExitOk : kExitFailure;
  }
  if (qubits->parsed()) {
    std::int64_t count = 0;
    if (qrg_status st = qrg_qubit_count(opt.stages, &count); st != QRG_OK) return Report(st);
    std::cout << count << "\n";
    return kExitOk;
  }
  return kExitConfig;
}
