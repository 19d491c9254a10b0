/**************************************************************************
 * mincode.h
 *
 * Copyright 2026 The mincode Authors
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
 **************************************************************************/

/*
 * C interface of libmincode.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns an mc_status; on failure mc_last_error() holds a
 * message for the calling thread. Strings returned through char** out
 * parameters are heap allocated and must be released with mc_string_free.
 * Structured results are JSON documents with sorted keys.
 */

#ifndef MINCODE_H
#define MINCODE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define MC_API __declspec(dllexport)
#else
#  define MC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mc_status {
    MC_OK = 0,
    MC_ERR_NOT_PRIME_POWER = 1,
    MC_ERR_CAP_EXCEEDED = 2,
    MC_ERR_DIVISION_BY_ZERO = 3,
    MC_ERR_INVALID_ELEMENT = 4,
    MC_ERR_DIMENSION_MISMATCH = 5,
    MC_ERR_EMPTY_SET = 6,
    MC_ERR_ORIGIN_PRESENT = 7,
    MC_ERR_DIMENSION_TOO_SMALL = 8,
    MC_ERR_NOT_BINARY = 9,
    MC_ERR_BAD_ANCHOR = 10,
    MC_ERR_PARAMETER_OUT_OF_RANGE = 11,
    MC_ERR_ZERO_CODE = 12,
    MC_ERR_HYPOTHESIS_VIOLATED = 13,
    MC_ERR_ODD_DIMENSION = 14,
    MC_ERR_INFEASIBLE = 15,
    MC_ERR_CAP_TOO_SMALL = 16,
    MC_ERR_DUPLICATE_POINT = 17,
    MC_ERR_PARSE = 18,
    MC_ERR_IO = 19,
    MC_ERR_USAGE = 20,
    MC_ERR_NULL_ARGUMENT = 100,
    MC_ERR_INTERNAL = 101
} mc_status;

typedef struct mc_field mc_field;
typedef struct mc_set mc_set;
typedef struct mc_code mc_code;

MC_API const char* mc_version(void);
MC_API const char* mc_status_name(mc_status status);
/* Message of the last failed call on this thread; "" if none. */
MC_API const char* mc_last_error(void);
MC_API void mc_string_free(char* s);

/* ---- finite fields ---------------------------------------------------- */

MC_API mc_status mc_field_new(unsigned q, mc_field** out);
MC_API void mc_field_free(mc_field* field);
MC_API mc_status mc_field_info(const mc_field* field, unsigned* q, unsigned* p, unsigned* m);
MC_API mc_status mc_field_add(const mc_field* field, unsigned a, unsigned b, unsigned* out);
MC_API mc_status mc_field_neg(const mc_field* field, unsigned a, unsigned* out);
MC_API mc_status mc_field_mul(const mc_field* field, unsigned a, unsigned b, unsigned* out);
MC_API mc_status mc_field_inv(const mc_field* field, unsigned a, unsigned* out);

/* ---- point sets ------------------------------------------------------- */

/* Points are canonical indices sum x_i q^i. Duplicates are merged. */
MC_API mc_status mc_set_from_indices(unsigned q, unsigned n, const uint32_t* indices, size_t count,
                                     int allows_origin, mc_set** out);
/* Set file text: "q n" header, one point per line, '#' comments. */
MC_API mc_status mc_set_parse(const char* text, int allows_origin, mc_set** out);
MC_API mc_status mc_set_read_file(const char* path, int allows_origin, mc_set** out);
MC_API mc_status mc_set_write_file(const mc_set* set, const char* path);
MC_API mc_status mc_set_format(const mc_set* set, char** text);
MC_API void mc_set_free(mc_set* set);
MC_API mc_status mc_set_info(const mc_set* set, unsigned* q, unsigned* n, size_t* size);
/* Copies up to capacity indices; *count receives the set size. */
MC_API mc_status mc_set_indices(const mc_set* set, uint32_t* indices, size_t capacity, size_t* count);

/* anchor holds n element encodings; NULL selects the least valid anchor. */
MC_API mc_status mc_construct_tight(unsigned q, unsigned n, const unsigned* anchor, mc_set** out);
MC_API mc_status mc_construct_spread_union(unsigned n, unsigned s, int* ab_window, mc_set** out);
MC_API mc_status mc_construct_hamming_ball(unsigned n, unsigned k, mc_set** out);

/* binary != 0 selects the q = 2 form (linear hyperplanes, bound 2^{n-2}). */
MC_API mc_status mc_check_conditions(const mc_set* set, int binary, int* all_hold, char** report_json);
MC_API mc_status mc_is_affine_blocking(const mc_set* set, int* blocking);

/* ---- codes ------------------------------------------------------------ */

MC_API mc_status mc_code_new(const mc_set* set, mc_code** out);
MC_API void mc_code_free(mc_code* code);
MC_API mc_status mc_code_params(const mc_code* code, size_t* length, size_t* dimension);
/* entries receives length() elements; may be NULL to get only the weight. */
MC_API mc_status mc_code_codeword(const mc_code* code, unsigned u, const unsigned* v, unsigned* entries,
                                  size_t* weight);
MC_API mc_status mc_code_is_linear(const mc_code* code, int* linear);
MC_API mc_status mc_code_weight_profile(const mc_code* code, unsigned workers, char** report_json);
MC_API mc_status mc_code_ab(const mc_code* code, unsigned workers, int* holds, char** report_json);
MC_API mc_status mc_code_minimality(const mc_code* code, unsigned workers, int* is_minimal, char** report_json);
/* spectrum receives 2^n values indexed by point index; may be NULL. */
MC_API mc_status mc_code_walsh(const mc_code* code, long long* spectrum, char** report_json);
MC_API mc_status mc_code_ding_minimality(const mc_code* code, int* is_minimal);
MC_API mc_status mc_set_is_bent(const mc_set* set, int* bent);
MC_API mc_status mc_ding_ab_inequality(unsigned n, unsigned k, int* holds, int* strict_holds, char** report_json);

/* ---- searches --------------------------------------------------------- */

/* Receives the checkpoint as JSON; the string is valid for the call only. */
typedef void (*mc_checkpoint_fn)(const char* checkpoint_json, void* user);

/* resume_json may be NULL. *status_out: 0 found, 1 infeasible, 2 cap reached. */
MC_API mc_status mc_search_min_blocking(unsigned q, unsigned n, size_t size_cap, unsigned workers,
                                        const char* resume_json, mc_checkpoint_fn on_checkpoint, void* user,
                                        int* status_out, char** report_json);
MC_API mc_status mc_search_min_theorem_set(unsigned q, unsigned n, unsigned workers, const char* resume_json,
                                           mc_checkpoint_fn on_checkpoint, void* user, int* status_out,
                                           char** report_json);
MC_API mc_status mc_verify_tightness(unsigned q, unsigned n, int* pass, char** report_json);

/* ---- command runner --------------------------------------------------- */

/*
 * Runs one command described by a JSON config object (keys: command, q, n,
 * kind, anchor, s, k, size_cap, binary, input, output, checkpoint, resume,
 * workers). Writes the schema-1 report and the process exit status
 * (0 pass/found, 1 fail/infeasible, 2 usage error). Returns MC_OK whenever
 * a report was produced, including for failed commands.
 */
MC_API mc_status mc_run(const char* config_json, char** report_json, int* exit_status);

/* Report serialized without its "run" section (timestamp, workers, timing). */
MC_API mc_status mc_report_deterministic(const char* report_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MINCODE_H */
