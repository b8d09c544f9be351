/* Copyright 2026 The effectdual Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the effectdual core. All payloads are JSON documents in
 * UTF-8 strings; every char** out parameter receives a heap string that the
 * caller releases with ed_string_free. A tol argument <= 0 selects the
 * built-in default (1e-9).
 */

#ifndef EFFECTDUAL_H
#define EFFECTDUAL_H

#include <stddef.h>
#include <stdint.h>

#ifndef ED_API
#if defined(_WIN32)
#define ED_API __declspec(dllexport)
#else
#define ED_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status doubles as a process exit code: 0 pass, 1 property violation,
 * 2 invalid input, 3 internal invariant breach. Calls that check something
 * return ED_FAIL on a clean negative verdict and still write their report.
 */
typedef enum ed_status {
  ED_OK = 0,
  ED_FAIL = 1,
  ED_INVALID_INPUT = 2,
  ED_INTERNAL = 3
} ed_status;

ED_API const char* ed_version(void);

/* Error class name ("not_affine", "parse", ...) and message of the last
 * failing call on this thread. Thread-local storage, valid until the next
 * call on the same thread; empty strings after a success. */
ED_API const char* ed_last_error_code(void);
ED_API const char* ed_last_error_message(void);

ED_API void ed_string_free(char* s);

/* Opaque handle to a positive operator-valued measure. */
typedef struct ed_povm ed_povm;

ED_API ed_status ed_povm_parse(const char* povm_json, double tol,
                               ed_povm** out);
ED_API ed_status ed_povm_random(uint64_t seed, size_t dim, size_t outcomes,
                                double tol, ed_povm** out);
ED_API void ed_povm_free(ed_povm* povm);
ED_API ed_status ed_povm_to_json(const ed_povm* povm, int pretty, char** out);

/* f |-> sum_x f(x) E_x; effect_json is a classical effect on the measure's
 * outcome space. */
ED_API ed_status ed_povm_quantize(const ed_povm* povm, const char* effect_json,
                                  double tol, char** out);
/* rho |-> (Tr[rho E_x])_x; state_json is a density matrix. */
ED_API ed_status ed_povm_measure(const ed_povm* povm, const char* state_json,
                                 double tol, char** out);
/* Checks Tr[rho Q(f)] = sum_x f(x) (M rho)(x) on seeded random (rho, f). */
ED_API ed_status ed_povm_verify_duality(const ed_povm* povm, int trials,
                                        uint64_t seed, double tol,
                                        char** report_out);

/* Reconstructs a measure from a recorded black-box transcript. ED_FAIL when
 * the box was dishonest (not a homomorphism, not affine, or the
 * reconstruction is no measure). */
ED_API ed_status ed_recover_povm(const char* transcript_json, double tol,
                                 char** povm_out);

/* Runs all three covariance checks on a system bundle and reports the
 * verdicts, which are required to agree; disagreement is ED_INTERNAL. */
ED_API ed_status ed_check_covariance(const char* system_json, int probes,
                                     uint64_t seed, double tol,
                                     char** report_out);

/* Group-averages a seed effect into a covariant measure for the bundle's
 * representation and action. */
ED_API ed_status ed_build_covariant(const char* system_json,
                                    const char* seed_effect_json, double tol,
                                    char** povm_out);

/* The measure a measurement scheme realises on the system. */
ED_API ed_status ed_model_induce(const char* model_json, double tol,
                                 char** povm_out);

/* Whether the scheme reproduces the target's statistics on seeded random
 * states; target NULL checks against the scheme's own induced measure. The
 * report also carries the cross-check that quantization through the channel
 * adjoint agrees with quantization through the induced measure. */
ED_API ed_status ed_model_check(const char* model_json,
                                const char* target_povm_json, int trials,
                                uint64_t seed, double tol, char** report_out);

/* Quantizes a pointer-space effect through the channel adjoint, verifying
 * agreement with the induced-measure route before returning. */
ED_API ed_status ed_dual_quantize(const char* model_json,
                                  const char* effect_json, double tol,
                                  char** effect_out);

/* Distance between two effects of the same kind (both classical or both
 * quantum, detected from the payloads), reported next to the matching norm
 * distance. */
ED_API ed_status ed_metric(const char* a_json, const char* b_json, double tol,
                           char** report_out);

/* Seeded property suite over every module invariant. fixtures_dir NULL or
 * empty uses built-in sources; otherwise fixture files are loaded from the
 * directory and a corrupted file is ED_INVALID_INPUT. */
ED_API ed_status ed_run_suite(uint64_t seed, int trials, double tol,
                              const char* fixtures_dir, char** report_out);

#ifdef __cplusplus
}
#endif

#endif
