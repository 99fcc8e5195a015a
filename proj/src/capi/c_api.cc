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

#include "punctkit.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/baseline.h"
#include "core/corpus.h"
#include "core/formats.h"
#include "core/labels.h"
#include "core/pipeline.h"
#include "core/report.h"
#include "core/status.h"

struct pk_string {
  std::string value;
};

struct pk_model {
  punctkit::BaselineModel model;
};

namespace {

using punctkit::Error;
using punctkit::ErrorCode;
using punctkit::Json;

thread_local std::string g_last_error;

pk_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return PK_INVALID_ARGUMENT;
    case ErrorCode::kIo:
      return PK_IO;
    case ErrorCode::kParse:
      return PK_PARSE;
    case ErrorCode::kAlignment:
      return PK_ALIGNMENT;
    case ErrorCode::kVersion:
      return PK_VERSION;
    case ErrorCode::kInsufficientData:
      return PK_INSUFFICIENT_DATA;
    case ErrorCode::kInternal:
      break;
  }
  return PK_INTERNAL;
}

void SetError(std::string message) {
  for (char &c : message) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  g_last_error = std::move(message);
}

template <typename Fn>
pk_status Guard(Fn &&fn) {
  g_last_error.clear();
  try {
    fn();
    return PK_OK;
  } catch (const Error &e) {
    SetError(e.what());
    return ToStatus(e.code());
  } catch (const Json::exception &e) {
    SetError(e.what());
    return PK_PARSE;
  } catch (const std::bad_alloc &) {
    SetError("out of memory");
    return PK_INTERNAL;
  } catch (const std::exception &e) {
    SetError(e.what());
    return PK_INTERNAL;
  } catch (...) {
    SetError("unknown error");
    return PK_INTERNAL;
  }
}

void Require(const void *p, const char *name) {
  if (!p) throw Error(ErrorCode::kInvalidArgument, std::string(name) + " is NULL");
}

std::string Str(const char *s, const char *name) {
  Require(s, name);
  return s;
}

void Emit(pk_string **out, std::string value) {
  if (out) *out = new pk_string{std::move(value)};
}

void EmitJson(pk_string **out, const Json &value) {
  if (out) *out = new pk_string{value.dump()};
}

punctkit::RowLabels Row(const pk_report_row *row) {
  punctkit::RowLabels labels;
  if (!row) return labels;
  if (row->task) labels.task = row->task;
  if (row->training_set) labels.training_set = row->training_set;
  if (row->evaluation_set) labels.evaluation_set = row->evaluation_set;
  labels.in_distribution = row->in_distribution != 0;
  return labels;
}

punctkit::LinearizeKind LinearizeKind(const char *name) {
  const std::string value = Str(name, "kind");
  auto kind = punctkit::LinearizeKindFromName(value);
  if (!kind) {
    throw Error(ErrorCode::kInvalidArgument, "unknown kind \"" + value + "\"");
  }
  return *kind;
}

}  // namespace

extern "C" {

const char *pk_status_name(pk_status status) {
  switch (status) {
    case PK_OK:
      return "OK";
    case PK_INVALID_ARGUMENT:
    case PK_IO:
    case PK_PARSE:
    case PK_ALIGNMENT:
    case PK_VERSION:
    case PK_INSUFFICIENT_DATA:
    case PK_INTERNAL:
      return punctkit::ErrorCodeName(static_cast<ErrorCode>(status));
  }
  return "UNKNOWN";
}

const char *pk_last_error(void) { return g_last_error.c_str(); }

const char *pk_version(void) { return punctkit::kToolVersion; }

const char *pk_format_versions(void) {
  static const std::string text =
      Json{{"tool", punctkit::kToolVersion},
           {"model_format", punctkit::kModelFormatVersion},
           {"feature_template", punctkit::kFeatureTemplateVersion},
           {"report_format", punctkit::kReportFormatVersion}}
          .dump();
  return text.c_str();
}

const char *pk_string_data(const pk_string *s) { return s ? s->value.c_str() : ""; }

size_t pk_string_size(const pk_string *s) { return s ? s->value.size() : 0; }

void pk_string_free(pk_string *s) { delete s; }

pk_status pk_normalize_punctuation(const char *text, pk_string **out) {
  return Guard([&] {
    Require(out, "out");
    Emit(out, punctkit::NormalizePunctuation(Str(text, "text")));
  });
}

pk_status pk_depunctuate(const char *target, pk_string **out) {
  return Guard([&] {
    Require(out, "out");
    Emit(out, punctkit::Depunctuate(Str(target, "target")));
  });
}

pk_status pk_derive_labels_json(const char *id, const char *source,
                                const char *target, pk_string **out) {
  return Guard([&] {
    Require(out, "out");
    punctkit::Pair pair{Str(id, "id"), Str(source, "source"), Str(target, "target")};
    EmitJson(out, punctkit::LabeledSequenceToJson(punctkit::DeriveLabels(pair)));
  });
}

pk_status pk_apply_labels_json(const char *labels_json, pk_string **out) {
  return Guard([&] {
    Require(out, "out");
    const punctkit::LabeledSequence seq = punctkit::LabeledSequenceFromJson(
        Json::parse(Str(labels_json, "labels_json")));
    Emit(out, punctkit::ApplyLabels(seq.tokens, seq.labels));
  });
}

pk_status pk_model_train(const char *pairs_path, int epochs, uint64_t seed,
                         pk_model **out, pk_string **summary) {
  return Guard([&] {
    Require(out, "out");
    Json info;
    auto model = std::make_unique<pk_model>(pk_model{punctkit::RunBaselineTrain(
        Str(pairs_path, "pairs_path"), epochs, seed, &info)});
    EmitJson(summary, info);
    *out = model.release();
  });
}

pk_status pk_model_load(const char *path, pk_model **out) {
  return Guard([&] {
    Require(out, "out");
    *out = new pk_model{punctkit::BaselineModel::Load(Str(path, "path"))};
  });
}

pk_status pk_model_save(const pk_model *model, const char *path) {
  return Guard([&] {
    Require(model, "model");
    model->model.Save(Str(path, "path"));
  });
}

pk_status pk_model_restore(const pk_model *model, const char *source,
                           pk_string **out) {
  return Guard([&] {
    Require(model, "model");
    Require(out, "out");
    Emit(out, model->model.Restore(Str(source, "source")));
  });
}

void pk_model_free(pk_model *model) { delete model; }

void pk_corpus_build_options_init(pk_corpus_build_options *options) {
  if (!options) return;
  options->input_path = nullptr;
  options->out_dir = nullptr;
  options->limit = punctkit::kDefaultExcerptLimit;
  options->dev_n = 1000;
  options->test_n = 1000;
  options->seed = 0;
}

pk_status pk_corpus_build(const pk_corpus_build_options *options,
                          pk_string **summary) {
  return Guard([&] {
    Require(options, "options");
    punctkit::CorpusBuildOptions o;
    o.input_path = Str(options->input_path, "input_path");
    o.out_dir = Str(options->out_dir, "out_dir");
    o.limit = options->limit;
    o.dev_n = options->dev_n;
    o.test_n = options->test_n;
    o.seed = options->seed;
    EmitJson(summary, punctkit::RunCorpusBuild(o));
  });
}

pk_status pk_labels_derive(const char *pairs_path, const char *out_path,
                           pk_string **summary) {
  return Guard([&] {
    EmitJson(summary, punctkit::RunLabelsDerive(Str(pairs_path, "pairs_path"),
                                                Str(out_path, "out_path")));
  });
}

pk_status pk_baseline_restore(const pk_model *model, const char *source_path,
                              const char *out_path, pk_string **summary) {
  return Guard([&] {
    Require(model, "model");
    EmitJson(summary, punctkit::RunBaselineRestore(model->model,
                                                   Str(source_path, "source_path"),
                                                   Str(out_path, "out_path")));
  });
}

pk_status pk_score_restoration(const char *gold_path, const char *hyp_path,
                               const char *report_path, const pk_report_row *row,
                               pk_string **summary) {
  return Guard([&] {
    punctkit::ScoreRestorationOptions o;
    o.gold_path = Str(gold_path, "gold_path");
    o.hyp_path = Str(hyp_path, "hyp_path");
    o.report_path = Str(report_path, "report_path");
    o.row = Row(row);
    EmitJson(summary, punctkit::RunScoreRestoration(o));
  });
}

pk_status pk_task_ingest(const char *format, const char *in_path,
                         const char *out_path, pk_string **summary) {
  return Guard([&] {
    const std::string name = Str(format, "format");
    punctkit::ConllSchema schema;
    if (name == "conll03") {
      schema = punctkit::ConllSchema::kConll03;
    } else if (name == "conll00") {
      schema = punctkit::ConllSchema::kConll00;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown format \"" + name + "\"");
    }
    EmitJson(summary, punctkit::RunTaskIngest(schema, Str(in_path, "in_path"),
                                              Str(out_path, "out_path")));
  });
}

pk_status pk_task_linearize(const char *kind, const char *in_path,
                            const char *out_path, const char *tag_column,
                            pk_string **summary) {
  return Guard([&] {
    EmitJson(summary, punctkit::RunTaskLinearize(
                          LinearizeKind(kind), Str(in_path, "in_path"),
                          Str(out_path, "out_path"), tag_column ? tag_column : "pos"));
  });
}

pk_status pk_task_delinearize(const char *kind, const char *in_path,
                              const char *out_path, pk_string **summary) {
  return Guard([&] {
    EmitJson(summary,
             punctkit::RunTaskDelinearize(LinearizeKind(kind), Str(in_path, "in_path"),
                                          Str(out_path, "out_path")));
  });
}

void pk_score_task_options_init(pk_score_task_options *options) {
  if (!options) return;
  *options = pk_score_task_options{};
}

pk_status pk_score_task(const pk_score_task_options *options,
                        pk_string **summary) {
  return Guard([&] {
    Require(options, "options");
    punctkit::ScoreTaskOptions o;
    const std::string kind = Str(options->kind, "kind");
    auto parsed = punctkit::TaskScoreKindFromName(kind);
    if (!parsed) {
      throw Error(ErrorCode::kInvalidArgument, "unknown kind \"" + kind + "\"");
    }
    o.kind = *parsed;
    o.gold_path = Str(options->gold_path, "gold_path");
    o.pred_path = Str(options->pred_path, "pred_path");
    o.report_path = Str(options->report_path, "report_path");
    if (options->negative_label) o.negative_label = options->negative_label;
    if (options->tag_scheme) o.tag_scheme = options->tag_scheme;
    if (options->output_kind) {
      auto output = punctkit::OutputKindFromName(options->output_kind);
      if (!output) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("unknown output kind \"") + options->output_kind +
                        "\"");
      }
      o.output_kind = output;
    }
    o.row = Row(&options->row);
    EmitJson(summary, punctkit::RunScoreTask(o));
  });
}

pk_status pk_report_render(const char *const *report_paths, size_t count,
                           const char *style, const char *out_path,
                           pk_string **rendered) {
  return Guard([&] {
    if (count > 0) Require(report_paths, "report_paths");
    std::vector<std::string> paths;
    for (size_t i = 0; i < count; ++i) paths.push_back(Str(report_paths[i], "report path"));
    const std::string style_name = Str(style, "style");
    auto parsed = punctkit::ReportStyleFromName(style_name);
    if (!parsed) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown style \"" + style_name + "\"");
    }
    Emit(rendered,
         punctkit::RunReportRender(paths, *parsed, out_path ? out_path : ""));
  });
}

}  // extern "C"
