// Copyright 2026 The lcplearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to lcplearn. Every function returning lcpl_status leaves a
 * message retrievable with lcpl_last_error() on failure (per thread).
 * Strings returned through char** are owned by the caller and released with
 * lcpl_string_free; handles are released with their matching _free. */

#ifndef LCPL_LCPL_H_
#define LCPL_LCPL_H_

#include <stdint.h>

#if defined(_WIN32)
#  if defined(LCPL_BUILDING_LIBRARY)
#    define LCPL_API __declspec(dllexport)
#  else
#    define LCPL_API __declspec(dllimport)
#  endif
#else
#  define LCPL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcpl_status {
  LCPL_OK = 0,
  LCPL_ERR_INVALID_ARGUMENT = 1,
  LCPL_ERR_PARSE = 2,
  LCPL_ERR_IO = 3,
  /* The operation ran but a checked property failed (lcpl_verify). */
  LCPL_ERR_VERIFICATION = 4,
  LCPL_ERR_INTERNAL = 5
} lcpl_status;

typedef struct lcpl_circuit lcpl_circuit;
typedef struct lcpl_graph lcpl_graph;
typedef struct lcpl_noise lcpl_noise;

#define LCPL_SCHEMA_VERSION 1

LCPL_API const char* lcpl_version(void);
LCPL_API const char* lcpl_last_error(void);
LCPL_API const char* lcpl_status_name(lcpl_status status);
LCPL_API void lcpl_string_free(char* s);

/* mode is "classical" or "quantum". The report carries the recovered string
 * and query counts; with trace != 0 also per-step snapshots. */
LCPL_API lcpl_status lcpl_learn(const char* secret, const char* mode, int trace, char** report_json);

/* Full learner circuit for secret. t <= 0 selects the default q-register
 * width. */
LCPL_API lcpl_status lcpl_synth(const char* secret, int t, int gray_code, int decompose_h, lcpl_circuit** out,
                                char** report_json);

LCPL_API lcpl_status lcpl_circuit_parse_qasm(const char* text, lcpl_circuit** out);
LCPL_API lcpl_status lcpl_circuit_read_file(const char* path, lcpl_circuit** out);
LCPL_API lcpl_status lcpl_circuit_to_qasm(const lcpl_circuit* circuit, char** text);
LCPL_API lcpl_status lcpl_circuit_write_file(const lcpl_circuit* circuit, const char* path);
LCPL_API lcpl_status lcpl_circuit_stats(const lcpl_circuit* circuit, char** report_json);
LCPL_API int lcpl_circuit_width(const lcpl_circuit* circuit);
LCPL_API void lcpl_circuit_free(lcpl_circuit* circuit);

/* "quito" or "linearN"; JSON is {"qubits": n, "edges": [[a, b], ...]}. */
LCPL_API lcpl_status lcpl_graph_builtin(const char* name, lcpl_graph** out);
LCPL_API lcpl_status lcpl_graph_from_json(const char* json, lcpl_graph** out);
LCPL_API void lcpl_graph_free(lcpl_graph* graph);

/* opt_level 0 maps, routes and rewrites only; 1 also optimizes. */
LCPL_API lcpl_status lcpl_transpile(const lcpl_circuit* circuit, const lcpl_graph* graph, int opt_level,
                                    lcpl_circuit** out, char** report_json);

/* "default"/"zero", "quito", "quito-average". */
LCPL_API lcpl_status lcpl_noise_builtin(const char* name, lcpl_noise** out);
LCPL_API lcpl_status lcpl_noise_from_json(const char* json, lcpl_noise** out);
LCPL_API void lcpl_noise_free(lcpl_noise* noise);

LCPL_API lcpl_status lcpl_run_noisy(const lcpl_circuit* circuit, const lcpl_noise* noise, int shots, uint64_t seed,
                                    char** histogram_json);
LCPL_API lcpl_status lcpl_estimate_asp(const char* secret, const lcpl_noise* noise, int trials, int shots,
                                       uint64_t seed, char** report_json);

/* suite: all, classical, quantum, synth, transpile. Returns
 * LCPL_ERR_VERIFICATION, with the report filled in, when a check fails. */
LCPL_API lcpl_status lcpl_verify(const char* suite, int max_n, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* LCPL_LCPL_H_ */
