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

#ifndef QREPGAME_QREPGAME_H_
#define QREPGAME_QREPGAME_H_

/* C interface to the qrepgame library.
 *
 * Every call returns a qrg_status. On failure qrg_last_error() describes the
 * problem; the message is per thread and valid until the next failing call
 * on that thread. Results are returned in qrg_buffer objects owned by the
 * caller and released with qrg_buffer_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QRG_API __declspec(dllexport)
#else
#define QRG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qrg_status {
  QRG_OK = 0,
  QRG_ERR_INVALID_ARGUMENT = 1,
  QRG_ERR_CONFIG = 2,
  QRG_ERR_UNSUPPORTED = 3,
  QRG_ERR_PRECONDITION = 4,
  QRG_ERR_NO_EQUILIBRIUM = 5,
  QRG_ERR_INTERNAL = 6
} qrg_status;

typedef enum qrg_format { QRG_FORMAT_JSON = 0, QRG_FORMAT_CSV = 1 } qrg_format;

typedef struct qrg_game qrg_game;
typedef struct qrg_buffer qrg_buffer;

QRG_API const char* qrg_version(void);
QRG_API const char* qrg_status_name(qrg_status status);
QRG_API const char* qrg_last_error(void);

/* NUL-terminated contents; size excludes the terminator. */
QRG_API const char* qrg_buffer_data(const qrg_buffer* buffer);
QRG_API size_t qrg_buffer_size(const qrg_buffer* buffer);
QRG_API void qrg_buffer_free(qrg_buffer* buffer);

/* Game configuration, see the JSON schema in the README. */
QRG_API qrg_status qrg_game_from_json(const char* json_text, qrg_game** out);
QRG_API qrg_status qrg_game_from_file(const char* path, qrg_game** out);
QRG_API void qrg_game_free(qrg_game* game);
/* "mw10", "iqbal-toor" or "classical". */
QRG_API qrg_status qrg_game_set_protocol(qrg_game* game, const char* protocol);
/* Canonical JSON of the parsed game. */
QRG_API qrg_status qrg_game_to_json(const qrg_game* game, qrg_buffer** out);

QRG_API qrg_status qrg_bimatrix(const qrg_game* game, qrg_format format, qrg_buffer** out);
QRG_API qrg_status qrg_nash(const qrg_game* game, double tol, qrg_buffer** out);
QRG_API qrg_status qrg_spe(const qrg_game* game, double tol, qrg_buffer** out);
QRG_API qrg_status qrg_dominance(const qrg_game* game, double tol, qrg_buffer** out);
QRG_API qrg_status qrg_extensive(const qrg_game* game, qrg_buffer** out);
QRG_API qrg_status qrg_cooperation_scan(const qrg_game* game, double grid_step, double tol,
                                        qrg_format format, qrg_buffer** out);

/* Batch against sequential play on random states. `max_deviation` may be
 * NULL. */
QRG_API qrg_status qrg_compare_protocols(const qrg_game* game, int samples, uint64_t seed,
                                         qrg_buffer** out, double* max_deviation);

/* The fixed reproduction checks. `failures` receives the failed count. */
QRG_API qrg_status qrg_paper_repro(int perturb, qrg_buffer** out, int* failures);

/* Expected payoffs of a pure profile: out[0..3] = E_{1.1}, E_{1.2}, E_{2.1},
 * E_{2.2}. Strategies are indices 0..31 (mw10, classical) or 0..3
 * (iqbal-toor). `sequential` selects the measurement-based procedure. */
QRG_API qrg_status qrg_play_profile(const qrg_game* game, int strategy1, int strategy2,
                                    int sequential, double out[4]);

QRG_API qrg_status qrg_qubit_count(int n_stages, int64_t* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* QREPGAME_QREPGAME_H_ */
