// Copyright 2026 The punctkit Authors.
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

// C interface of libpunctkit.
//
// Every function returns a pk_status. On failure a one-line message is
// available from pk_last_error() on the calling thread until the next call.
// Strings are UTF-8 and NUL-terminated. Objects returned through out
// parameters are owned by the caller and released with the matching
// *_free function. Optional out parameters may be NULL.

#ifndef PUNCTKIT_H_
#define PUNCTKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PK_API __declspec(dllexport)
#else
#define PK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
  PK_OK = 0,
  PK_INVALID_ARGUMENT = 1,
  PK_IO = 2,
  PK_PARSE = 3,
  PK_ALIGNMENT = 4,
  PK_VERSION = 5,
  PK_INSUFFICIENT_DATA = 6,
  PK_INTERNAL = 99
} pk_status;

// "OK", "INVALID_ARGUMENT", ...
PK_API const char *pk_status_name(pk_status status);
PK_API const char *pk_last_error(void);

PK_API const char *pk_version(void);
// e.g. {"tool":"1.0.0","model_format":1,"feature_template":1,"report_format":1}
PK_API const char *pk_format_versions(void);

typedef struct pk_string pk_string;
PK_API const char *pk_string_data(const pk_string *s);
PK_API size_t pk_string_size(const pk_string *s);
PK_API void pk_string_free(pk_string *s);

// Text transforms.
PK_API pk_status pk_normalize_punctuation(const char *text, pk_string **out);
PK_API pk_status pk_depunctuate(const char *target, pk_string **out);
// Labels record for one pair as a JSON object.
PK_API pk_status pk_derive_labels_json(const char *id, const char *source,
                                       const char *target, pk_string **out);
// Applies a labels record (JSON object) and returns the restored text.
PK_API pk_status pk_apply_labels_json(const char *labels_json, pk_string **out);

// Baseline model.
typedef struct pk_model pk_model;
PK_API pk_status pk_model_train(const char *pairs_path, int epochs,
                                uint64_t seed, pk_model **out,
                                pk_string **summary);
PK_API pk_status pk_model_load(const char *path, pk_model **out);
PK_API pk_status pk_model_save(const pk_model *model, const char *path);
PK_API pk_status pk_model_restore(const pk_model *model, const char *source,
                                  pk_string **out);
PK_API void pk_model_free(pk_model *model);

// File commands. Each validates its paths before doing any work, never
// leaves a partial output file behind and reports a JSON summary.
typedef struct pk_corpus_build_options {
  const char *input_path;
  const char *out_dir;
  int limit;
  int64_t dev_n;
  int64_t test_n;
  uint64_t seed;
} pk_corpus_build_options;

PK_API void pk_corpus_build_options_init(pk_corpus_build_options *options);
PK_API pk_status pk_corpus_build(const pk_corpus_build_options *options,
                                 pk_string **summary);

PK_API pk_status pk_labels_derive(const char *pairs_path, const char *out_path,
                                  pk_string **summary);

// source_path holds pairs or plain text, one source per line.
PK_API pk_status pk_baseline_restore(const pk_model *model,
                                     const char *source_path,
                                     const char *out_path, pk_string **summary);

// Row metadata shared by the scoring commands. NULL fields take defaults.
typedef struct pk_report_row {
  const char *task;
  const char *training_set;
  const char *evaluation_set;
  int in_distribution;
} pk_report_row;

PK_API pk_status pk_score_restoration(const char *gold_path,
                                      const char *hyp_path,
                                      const char *report_path,
                                      const pk_report_row *row,
                                      pk_string **summary);

// format: "conll03" or "conll00".
PK_API pk_status pk_task_ingest(const char *format, const char *in_path,
                                const char *out_path, pk_string **summary);
// kind: "ner", "openie", "tags" or "multitask". tag_column may be NULL.
PK_API pk_status pk_task_linearize(const char *kind, const char *in_path,
                                   const char *out_path, const char *tag_column,
                                   pk_string **summary);
PK_API pk_status pk_task_delinearize(const char *kind, const char *in_path,
                                     const char *out_path, pk_string **summary);

typedef struct pk_score_task_options {
  const char *kind;  // spans, tuples, tags, boundaries, labels
  const char *gold_path;
  const char *pred_path;
  const char *report_path;
  const char *negative_label;  // NULL: "no_relation"
  const char *tag_scheme;      // NULL: "accuracy"; or "bio"
  const char *output_kind;     // NULL, "ner", "openie" or "multitask"
  pk_report_row row;
} pk_score_task_options;

PK_API void pk_score_task_options_init(pk_score_task_options *options);
PK_API pk_status pk_score_task(const pk_score_task_options *options,
                               pk_string **summary);

// style: "tsv" or "markdown". out_path may be NULL; the text is returned
// through `rendered` either way.
PK_API pk_status pk_report_render(const char *const *report_paths,
                                  size_t count, const char *style,
                                  const char *out_path, pk_string **rendered);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // PUNCTKIT_H_
