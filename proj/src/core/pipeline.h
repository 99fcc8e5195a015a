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

// File-to-file commands behind the command line tool. Every command checks
// its input and output paths before doing any work, writes outputs through
// AtomicFileWriter and returns a JSON summary of what it did.

#ifndef PUNCTKIT_CORE_PIPELINE_H_
#define PUNCTKIT_CORE_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/baseline.h"
#include "core/io.h"
#include "core/linearize.h"
#include "core/report.h"
#include "core/tasks.h"

namespace punctkit {

struct CorpusBuildOptions {
  std::string input_path;
  // Directory receiving train.jsonl, dev.jsonl, test.jsonl and
  // manifest.json. Created if missing; its parent must exist.
  std::string out_dir;
  int limit = kDefaultExcerptLimit;
  int64_t dev_n = 1000;
  int64_t test_n = 1000;
  uint64_t seed = 0;
};

Json RunCorpusBuild(const CorpusBuildOptions &options);

// Pairs file in, labels file out. Pairs whose labels cannot be derived are
// skipped and counted.
Json RunLabelsDerive(const std::string &pairs_path, const std::string &out_path);

BaselineModel RunBaselineTrain(const std::string &pairs_path, int epochs,
                               uint64_t seed, Json *summary);

// Source is a pairs file (uses "source") or plain text, one source per line
// with ids "line-1", "line-2", ... Output is a hypotheses file.
Json RunBaselineRestore(const BaselineModel &model,
                        const std::string &source_path,
                        const std::string &out_path);

struct RowLabels {
  std::string task;
  std::string training_set;
  std::string evaluation_set;  // defaults to the gold file stem
  bool in_distribution = false;
};

struct ScoreRestorationOptions {
  std::string gold_path;  // labels file, or pairs file
  std::string hyp_path;   // hypotheses file, or labels file
  std::string report_path;
  RowLabels row;
};

// Writes the JSON report and a per-category TSV next to it
// (<report_path>.tsv).
Json RunScoreRestoration(const ScoreRestorationOptions &options);

Json RunTaskIngest(ConllSchema schema, const std::string &in_path,
                   const std::string &out_path);

enum class LinearizeKind { kNer, kOpenIe, kTags, kMultitask };
std::optional<LinearizeKind> LinearizeKindFromName(const std::string &name);

// Task records in, {"id", "input", "target"} lines out.
Json RunTaskLinearize(LinearizeKind kind, const std::string &in_path,
                      const std::string &out_path,
                      const std::string &tag_column = "pos");

// {"id", "output"} lines in, {"id", "spans", "tuples", "tags",
// "diagnostics"} lines out.
Json RunTaskDelinearize(LinearizeKind kind, const std::string &in_path,
                        const std::string &out_path);

enum class TaskScoreKind { kSpans, kTuples, kTags, kBoundaries, kLabels };
std::optional<TaskScoreKind> TaskScoreKindFromName(const std::string &name);

struct ScoreTaskOptions {
  TaskScoreKind kind = TaskScoreKind::kSpans;
  // Both files hold {"id", "target"} or {"id", "output"} lines.
  std::string gold_path;
  std::string pred_path;
  std::string report_path;
  std::string negative_label = "no_relation";
  std::string tag_scheme = "accuracy";
  // Parser used for span/tuple outputs; defaults to ner for spans and
  // openie for tuples.
  std::optional<OutputKind> output_kind;
  RowLabels row;
};

Json RunScoreTask(const ScoreTaskOptions &options);

// Renders the rows of one or more report files. Writes to out_path when it
// is non-empty and returns the rendered text either way.
std::string RunReportRender(const std::vector<std::string> &report_paths,
                            ReportStyle style, const std::string &out_path);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_PIPELINE_H_
