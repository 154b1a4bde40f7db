/* Copyright (C) 2026 The hyperquad authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

/* C interface to the hyperquad library.
 *
 * Objects are opaque handles created by *_new / *_create functions and released with the
 * matching *_free. Every fallible call returns an hq_status; on failure a message is kept
 * per thread and can be read with hq_last_error(). Strings returned through char** are
 * owned by the caller and must be released with hq_string_free().
 */
#ifndef HYPERQUAD_HYPERQUAD_H
#define HYPERQUAD_HYPERQUAD_H

#include <stddef.h>
#include <stdint.h>

#if defined(HQ_BUILDING_LIBRARY)
#define HQ_API __attribute__((visibility("default")))
#else
#define HQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hq_status {
  HQ_OK = 0,
  HQ_ERR_NULL_ARGUMENT = 1,
  HQ_ERR_PARAMETER = 2,
  HQ_ERR_FIELD = 3,
  HQ_ERR_FIELD_MISMATCH = 4,
  HQ_ERR_PARSE = 5,
  HQ_ERR_DIVISION_BY_ZERO = 6,
  HQ_ERR_PRECISION = 7,
  HQ_ERR_ADMISSIBILITY = 8,
  HQ_ERR_UNDEFINED_BRACKET = 9,
  HQ_ERR_NOT_PERFECT = 10,
  HQ_ERR_BUDGET = 11,
  HQ_ERR_INTERNAL = 12,
  HQ_ERR_OUT_OF_RANGE = 13
} hq_status;

typedef enum hq_engine { HQ_ENGINE_AUTO = 0, HQ_ENGINE_SERIES = 1, HQ_ENGINE_QUOTIENT = 2 } hq_engine;

typedef enum hq_verdict {
  HQ_VERDICT_MATCH = 0,
  HQ_VERDICT_MISMATCH = 1,
  HQ_VERDICT_INCONCLUSIVE = 2,
  HQ_VERDICT_CONTRADICTION = 3
} hq_verdict;

typedef enum hq_case { HQ_CASE_NONE = 0, HQ_CASE_III1 = 1, HQ_CASE_III2 = 2 } hq_case;

typedef struct hq_field hq_field;
typedef struct hq_spec hq_spec;
typedef struct hq_record hq_record;

HQ_API const char* hq_version(void);
HQ_API const char* hq_status_name(hq_status status);
/* Message of the last failed call on this thread; "" when none. */
HQ_API const char* hq_last_error(void);
HQ_API void hq_string_free(char* s);

/* Fields. modulus may be NULL (default modulus); otherwise s + 1 digits, low degree first. */
HQ_API hq_status hq_field_new(uint32_t p, unsigned s, const uint32_t* modulus, hq_field** out);
/* Named presets, e.g. "f27-paper". */
HQ_API hq_status hq_field_preset(const char* name, hq_field** out);
HQ_API void hq_field_free(hq_field* field);
HQ_API uint64_t hq_field_order(const hq_field* field);
HQ_API hq_status hq_field_parse(const hq_field* field, const char* text, uint32_t* out);
HQ_API hq_status hq_field_format(const hq_field* field, uint32_t element, char** out);
HQ_API hq_status hq_field_mul(const hq_field* field, uint32_t a, uint32_t b, uint32_t* out);
HQ_API hq_status hq_field_inv(const hq_field* field, uint32_t a, uint32_t* out);

/* Type specs. The field is copied by reference count; it may be freed afterwards. */
HQ_API hq_status hq_spec_new(const hq_field* field, unsigned t, unsigned k, const uint32_t* lambdas, size_t l,
                             uint32_t eps1, uint32_t eps2, hq_spec** out);
HQ_API hq_status hq_spec_corollary_c(hq_spec** out);
HQ_API void hq_spec_free(hq_spec* spec);
/* The algebraic equation of the spec; normalized != 0 divides by the leading unit. */
HQ_API hq_status hq_spec_equation(const hq_spec* spec, int normalized, char** out);
HQ_API hq_status hq_spec_case(const hq_spec* spec, hq_case* out_case, size_t* failing_index);

/* Expansions. */
HQ_API hq_status hq_expand(const hq_spec* spec, size_t n, hq_engine engine, hq_record** out);
HQ_API hq_status hq_predict(const hq_spec* spec, size_t n, hq_record** out);
HQ_API void hq_record_free(hq_record* record);
HQ_API size_t hq_record_length(const hq_record* record);
HQ_API hq_status hq_record_quotient(const hq_record* record, size_t index, char** out);
HQ_API long hq_record_degree(const hq_record* record, size_t index);
/* 1 if x_n y_{n-1} - x_{n-1} y_n = (-1)^n holds throughout, 0 otherwise. */
HQ_API int hq_record_determinant_ok(const hq_record* record);

typedef struct hq_match {
  hq_verdict verdict;
  int exit_code;
  size_t compared;
  size_t first_mismatch; /* 0 when there is none */
  hq_case case_tag;
} hq_match;

HQ_API hq_status hq_verify(const hq_spec* spec, size_t n, hq_engine engine, hq_match* out);

/* Front-end commands driven by a JSON config {"command": ..., flags...}. Produces the text
 * report, the versioned JSON document and the exit status the command line should use. */
HQ_API hq_status hq_run(const char* config_json, char** text_out, char** json_out, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* HYPERQUAD_HYPERQUAD_H */
