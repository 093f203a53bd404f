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

#include "qrepgame/qrepgame.h"

#include <exception>
#include <new>
#include <string>

#include "qrepgame/analysis.hpp"
#include "qrepgame/config.hpp"
#include "qrepgame/error.hpp"
#include "qrepgame/iqbaltoor.hpp"
#include "qrepgame/repro.hpp"
#include "qrepgame/serialize.hpp"
#include "qrepgame/spe.hpp"

struct qrg_game {
  qrg::GameConfig config;
};

struct qrg_buffer {
  std::string data;
};

namespace {

thread_local std::string last_error;

qrg_status FromCode(qrg::ErrorCode code) {
  switch (code) {
    case qrg::ErrorCode::kInvalidArgument:
      return QRG_ERR_INVALID_ARGUMENT;
    case qrg::ErrorCode::kConfig:
      return QRG_ERR_CONFIG;
    case qrg::ErrorCode::kUnsupported:
      return QRG_ERR_UNSUPPORTED;
    case qrg::ErrorCode::kPrecondition:
      return QRG_ERR_PRECONDITION;
    case qrg::ErrorCode::kNoEquilibrium:
      return QRG_ERR_NO_EQUILIBRIUM;
  }
  return QRG_ERR_INTERNAL;
}

qrg_status Fail(qrg_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
qrg_status Guard(F&& body) {
  try {
    body();
    return QRG_OK;
  } catch (const qrg::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(QRG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(QRG_ERR_INTERNAL, e.what());
  }
}

void Emit(qrg_buffer** out, std::string text) {
  *out = new qrg_buffer{std::move(text)};
}

std::string Dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

#define QRG_REQUIRE(cond, what)                                   \
  do {                                                            \
    if (!(cond)) return Fail(QRG_ERR_INVALID_ARGUMENT, what);     \
  } while (0)

}  // namespace

extern "C" {

const char* qrg_version(void) { return "1.0.0"; }

const char* qrg_status_name(qrg_status status) {
  switch (status) {
    case QRG_OK:
      return "ok";
    case QRG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QRG_ERR_CONFIG:
      return "config error";
    case QRG_ERR_UNSUPPORTED:
      return "unsupported";
    case QRG_ERR_PRECONDITION:
      return "precondition failed";
    case QRG_ERR_NO_EQUILIBRIUM:
      return "no equilibrium";
    case QRG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* qrg_last_error(void) { return last_error.c_str(); }

const char* qrg_buffer_data(const qrg_buffer* buffer) {
  return buffer ? buffer->data.c_str() : nullptr;
}

size_t qrg_buffer_size(const qrg_buffer* buffer) { return buffer ? buffer->data.size() : 0; }

void qrg_buffer_free(qrg_buffer* buffer) { delete buffer; }

qrg_status qrg_game_from_json(const char* json_text, qrg_game** out) {
  QRG_REQUIRE(json_text && out, "null argument");
  return Guard([&] { *out = new qrg_game{qrg::ParseConfig(json_text)}; });
}

qrg_status qrg_game_from_file(const char* path, qrg_game** out) {
  QRG_REQUIRE(path && out, "null argument");
  return Guard([&] { *out = new qrg_game{qrg::LoadConfig(path)}; });
}

void qrg_game_free(qrg_game* game) { delete game; }

qrg_status qrg_game_set_protocol(qrg_game* game, const char* protocol) {
  QRG_REQUIRE(game && protocol, "null argument");
  return Guard([&] {
    game->config = qrg::WithProtocol(game->config, qrg::ParseProtocol(protocol));
  });
}

qrg_status qrg_game_to_json(const qrg_game* game, qrg_buffer** out) {
  QRG_REQUIRE(game && out, "null argument");
  return Guard([&] { Emit(out, qrg::SerializeConfig(game->config)); });
}

qrg_status qrg_bimatrix(const qrg_game* game, qrg_format format, qrg_buffer** out) {
  QRG_REQUIRE(game && out, "null argument");
  QRG_REQUIRE(format == QRG_FORMAT_JSON || format == QRG_FORMAT_CSV, "unknown format");
  return Guard([&] {
    const qrg::Bimatrix bm = qrg::ProtocolBimatrix(game->config);
    Emit(out, format == QRG_FORMAT_CSV ? qrg::ToCsv(bm) : Dump(qrg::ToJson(bm)));
  });
}

qrg_status qrg_nash(const qrg_game* game, double tol, qrg_buffer** out) {
  QRG_REQUIRE(game && out, "null argument");
  return Guard([&] { Emit(out, Dump(qrg::ToJson(qrg::ProtocolNash(game->config, tol)))); });
}

qrg_status qrg_spe(const qrg_game* game, double tol, qrg_buffer** out) {
  QRG_REQUIRE(game && out, "null argument");
  return Guard([&] { Emit(out, Dump(qrg::ToJson(qrg::ProtocolSpe(game->config, tol)))); });
}

qrg_status qrg_dominance(const qrg_game* game, double tol, qrg_buffer** out) {
  QRG_REQUIRE(game && out, "null argument");
  return Guard([&] { Emit(out, Dump(qrg::ProtocolDominance(game->config, tol))); });
}

qrg_status qrg_extensive(const qrg_game* game, qrg_buffer** out) {
  QRG_REQUIRE(game && out, "null argument");
  return Guard([&] { Emit(out, Dump(qrg::ToJson(qrg::ProtocolExtensive(game->config)))); });
}

qrg_status qrg_cooperation_scan(const qrg_game* game, double grid_step, double tol,
                                qrg_format format, qrg_buffer** out) {
  QRG_REQUIRE(game && out, "null argument");
  QRG_REQUIRE(format == QRG_FORMAT_JSON || format == QRG_FORMAT_CSV, "unknown format");
  return Guard([&] {
    const qrg::CooperationAnalysis a = qrg::CooperationScan(game->config.stage, grid_step, tol);
    Emit(out, format == QRG_FORMAT_CSV ? qrg::ToCsv(a) : Dump(qrg::ToJson(a)));
  });
}

qrg_status qrg_compare_protocols(const qrg_game* game, int samples, uint64_t seed,
                                 qrg_buffer** out, double* max_deviation) {
  QRG_REQUIRE(game && out, "null argument");
  return Guard([&] {
    const qrg::ComparisonReport r =
        qrg::CompareProtocols(game->config.protocol, game->config.stage, samples, seed);
    if (max_deviation) *max_deviation = r.max_deviation;
    Emit(out, Dump(qrg::ToJson(r)));
  });
}

qrg_status qrg_paper_repro(int perturb, qrg_buffer** out, int* failures) {
  QRG_REQUIRE(out, "null argument");
  return Guard([&] {
    const auto checks = qrg::RunReproductionChecks(perturb != 0);
    int failed = 0;
    for (const auto& c : checks) failed += c.passed ? 0 : 1;
    if (failures) *failures = failed;
    Emit(out, qrg::FormatChecks(checks));
  });
}

qrg_status qrg_play_profile(const qrg_game* game, int strategy1, int strategy2,
                            int sequential, double out[4]) {
  QRG_REQUIRE(game && out, "null argument");
  return Guard([&] {
    const qrg::GameConfig& c = game->config;
    double e[4];
    if (c.protocol == qrg::Protocol::kIqbalToor) {
      const qrg::ITGame g(c.initial, c.stage);
      const qrg::ITStrategy s1 = qrg::ITStrategy::FromPureIndex(strategy1);
      const qrg::ITStrategy s2 = qrg::ITStrategy::FromPureIndex(strategy2);
      const qrg::ITPayoffs p =
          sequential ? qrg::ITExpected(g, s1, s2) : qrg::ITBatch(g, strategy1, strategy2);
      e[0] = p.at(1, 1), e[1] = p.at(1, 2), e[2] = p.at(2, 1), e[3] = p.at(2, 2);
    } else {
      if (strategy1 < 0 || strategy1 >= qrg::RepStrategy::kCount || strategy2 < 0 ||
          strategy2 >= qrg::RepStrategy::kCount) {
        throw qrg::Error(qrg::ErrorCode::kInvalidArgument, "strategy index outside 0..31");
      }
      const qrg::PureState initial = c.protocol == qrg::Protocol::kClassical
                                         ? qrg::PureState::Basis(qrg::kRepQubits, 0)
                                         : c.initial;
      const qrg::RepGame g(initial, c.stage);
      const qrg::RepStrategy s1 = qrg::RepStrategy::FromIndex(strategy1);
      const qrg::RepStrategy s2 = qrg::RepStrategy::FromIndex(strategy2);
      const qrg::RepPayoffs p =
          sequential ? qrg::PlaySequential(g, s1, s2).payoffs : qrg::PlayBatch(g, s1, s2);
      e[0] = p.at(1, 1), e[1] = p.at(1, 2), e[2] = p.at(2, 1), e[3] = p.at(2, 2);
    }
    for (int i = 0; i < 4; ++i) out[i] = e[i];
  });
}

qrg_status qrg_qubit_count(int n_stages, int64_t* out) {
  QRG_REQUIRE(out, "null argument");
  return Guard([&] { *out = qrg::QubitCount(n_stages); });
}

}  // extern "C"
