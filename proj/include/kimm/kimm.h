// Copyright 2026 The kimm Authors.
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


/* C interface to the kimm library. Every function returns a kimm_status;
 * on failure kimm_last_error() describes the problem. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * kimm_string_free. Rationals cross the boundary as "p/q" strings. */

#ifndef KIMM_H
#define KIMM_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(KIMM_BUILDING)
#define KIMM_API __attribute__((visibility("default")))
#else
#define KIMM_API
#endif

typedef enum kimm_status {
  KIMM_OK = 0,
  KIMM_E_INVALID_ARGUMENT = 1,
  KIMM_E_OUT_OF_RANGE = 2,
  KIMM_E_DOMAIN = 3,
  KIMM_E_ARITY_MISMATCH = 4,
  KIMM_E_NOT_A_DIASTASIS = 5,
  KIMM_E_NOT_RESOLVABLE = 6,
  KIMM_E_DIVERGENCE = 7,
  KIMM_E_PARSE = 8,
  KIMM_E_GAUGE = 9,
  KIMM_E_INTERNAL = 100
} kimm_status;

typedef struct kimm_series kimm_series;

KIMM_API const char* kimm_version(void);
/* Thread-local message for the most recent failure on this thread. */
KIMM_API const char* kimm_last_error(void);
KIMM_API void kimm_string_free(char* s);

/* spec_json: {"model": name, "parameters": {...}, "degree": d}. */
KIMM_API kimm_status kimm_series_from_model(const char* spec_json, kimm_series** out);
/* BiSeries text format. */
KIMM_API kimm_status kimm_series_parse(const char* text, kimm_series** out);
KIMM_API kimm_status kimm_series_to_text(const kimm_series* s, char** out);
KIMM_API unsigned kimm_series_arity(const kimm_series* s);
KIMM_API unsigned kimm_series_degree(const kimm_series* s);
KIMM_API void kimm_series_free(kimm_series* s);

/* Analysis envelope. *resolvable is 1 unless a negative witness was found. */
KIMM_API kimm_status kimm_analyze(const kimm_series* s, const char* b, unsigned degree,
                                  char** json_out, int* resolvable);

/* options_json may be NULL or {"indefinite": bool, "alpha": "p/q"}. When the
 * input is not resolvable the status is KIMM_E_NOT_RESOLVABLE and json_out
 * receives the analysis envelope carrying the witness. */
KIMM_API kimm_status kimm_emit_immersion(const kimm_series* s, const char* b, unsigned degree,
                                         const char* options_json, char** json_out);

KIMM_API kimm_status kimm_check_certificate(const char* certificate_json, char** report_json,
                                            int* valid);

KIMM_API kimm_status kimm_models_list(char** json_out);

KIMM_API kimm_status kimm_hartogs(const char* spec_json, const char* c, unsigned jmax,
                                  unsigned kmax, char** json_out);

/* request_json: {"domain": "omega1:2,3"} or {"r": 2, "a": "2", "gamma": 4},
 * plus "c" and optionally "mu" for Cartan-Hartogs decisions. */
KIMM_API kimm_status kimm_wallach(const char* request_json, char** json_out);

KIMM_API kimm_status kimm_cigar(const char* c, unsigned n_max, unsigned limit_terms,
                                char** json_out);

/* x_json: array of "p/q" strings, x_1 first. */
KIMM_API kimm_status kimm_bell(unsigned n_max, const char* x_json, char** json_out);

KIMM_API kimm_status kimm_einstein(const kimm_series* s, unsigned degree, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* KIMM_H */
