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

#include "core/pipeline.h"

#include <filesystem>
#include <map>
#include <memory>
#include <set>

#include "core/corpus.h"
#include "core/formats.h"
#include "core/labels.h"
#include "core/parallel.h"
#include "core/scorer.h"
#include "core/status.h"
#include "core/task_scorer.h"
#include "core/unicode_text.h"

namespace punctkit {

namespace fs = std::filesystem;

namespace {

std::string Stem(const std::string &path) {
  std::string stem = fs::path(path).filename().string();
  const size_t dot = stem.find('.');
  return dot == std::string::npos ? stem : stem.substr(0, dot);
}

ReportRow MakeRow(const RowLabels &labels, const std::string &default_task,
                  const std::string &gold_path) {
  ReportRow row;
  row.task = labels.task.empty() ? default_task : labels.task;
  row.training_set = labels.training_set;
  row.evaluation_set =
      labels.evaluation_set.empty() ? Stem(gold_path) : labels.evaluation_set;
  row.in_distribution = labels.in_distribution;
  return row;
}

Json RowLabelsToJson(const RowLabels &labels) {
  return Json{{"task", labels.task},
              {"training_set", labels.training_set},
              {"evaluation_set", labels.evaluation_set},
              {"in_distribution", labels.in_distribution}};
}

// Reads {"id", <field>} lines into an id-keyed map; duplicate ids are
// rejected.
std::map<std::string, std::string> ReadTextById(
    const std::string &path, std::initializer_list<const char *> fields) {
  std::map<std::string, std::string> out;
  ForEachJsonLine(path, [&](int, const Json &obj) {
    const std::string id = GetString(obj, "id");
    const char *field = nullptr;
    for (const char *f : fields) {
      if (obj.contains(f)) {
        field = f;
        break;
      }
    }
    if (!field) {
      std::string names;
      for (const char *f : fields) names += std::string(names.empty() ? "" : "/") + f;
      throw Error(ErrorCode::kParse, "record " + id + " has no " + names + " field");
    }
    if (!out.emplace(id, GetString(obj, field)).second) {
      throw Error(ErrorCode::kParse, "duplicate id " + id);
    }
  });
  return out;
}

bool LooksLikeJsonLines(const std::string &path, const char *field) {
  for (const std::string &line : ReadLines(path)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      const Json obj = Json::parse(line);
      return obj.is_object() && obj.contains(field);
    } catch (const Json::exception &) {
      return false;
    }
  }
  return false;
}

}  // namespace

Json RunCorpusBuild(const CorpusBuildOptions &options) {
  RequireReadable(options.input_path);
  if (options.out_dir.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty output directory");
  }
  const fs::path out_dir(options.out_dir);
  std::error_code ec;
  if (fs::exists(out_dir, ec) && !fs::is_directory(out_dir, ec)) {
    throw Error(ErrorCode::kIo, "output path is not a directory: " +
                                    options.out_dir);
  }
  const fs::path parent = fs::absolute(out_dir, ec).parent_path();
  if (!fs::is_directory(parent, ec)) {
    throw Error(ErrorCode::kIo, "parent of output directory does not exist: " +
                                    parent.string());
  }

  BuildResult built = BuildPairs(ReadDocuments(options.input_path), options.limit);
  const int64_t pair_count = static_cast<int64_t>(built.pairs.size());
  CorpusSplits splits = Partition(std::move(built.pairs), options.dev_n,
                                  options.test_n, options.seed);

  Json summary{{"documents_file", options.input_path},
               {"excerpts", built.excerpts},
               {"dropped", built.dropped},
               {"pairs", pair_count},
               {"train", splits.train.size()},
               {"dev", splits.dev.size()},
               {"test", splits.test.size()},
               {"limit", options.limit},
               {"seed", options.seed}};

  fs::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create " + options.out_dir + ": " +
                                    ec.message());
  }
  // All files are written before any is committed.
  std::vector<std::unique_ptr<AtomicFileWriter>> writers;
  auto add = [&](const char *name, const std::vector<Pair> &pairs) {
    writers.push_back(
        std::make_unique<AtomicFileWriter>((out_dir / name).string()));
    for (const Pair &pair : pairs) writers.back()->WriteJsonLine(PairToJson(pair));
  };
  add("train.jsonl", splits.train);
  add("dev.jsonl", splits.dev);
  add("test.jsonl", splits.test);
  writers.push_back(
      std::make_unique<AtomicFileWriter>((out_dir / "manifest.json").string()));
  writers.back()->stream() << summary.dump(2) << '\n';
  for (auto &writer : writers) writer->Commit();
  return summary;
}

Json RunLabelsDerive(const std::string &pairs_path, const std::string &out_path) {
  RequireReadable(pairs_path);
  RequireWritableTarget(out_path);
  const std::vector<Pair> pairs = ReadPairs(pairs_path);
  std::vector<std::optional<LabeledSequence>> derived(pairs.size());
  std::vector<std::string> errors(pairs.size());
  ParallelFor(pairs.size(), [&](size_t k) {
    try {
      derived[k] = DeriveLabels(pairs[k]);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kAlignment) throw;
      errors[k] = e.what();
    }
  });

  AtomicFileWriter writer(out_path);
  int64_t written = 0;
  Json skipped = Json::array();
  for (size_t k = 0; k < pairs.size(); ++k) {
    if (derived[k]) {
      writer.WriteJsonLine(LabeledSequenceToJson(*derived[k]));
      ++written;
    } else {
      skipped.push_back(pairs[k].id);
    }
  }
  writer.Commit();
  return Json{{"pairs", pairs.size()},
              {"labeled", written},
              {"skipped", skipped.size()},
              {"skipped_ids", std::move(skipped)}};
}

BaselineModel RunBaselineTrain(const std::string &pairs_path, int epochs,
                               uint64_t seed, Json *summary) {
  RequireReadable(pairs_path);
  BaselineModel model = BaselineModel::Train(ReadPairs(pairs_path), epochs, seed);
  if (summary) {
    *summary = Json{{"epochs", model.meta().epochs},
                    {"seed", model.meta().seed},
                    {"sentences", model.meta().sentences},
                    {"skipped", model.meta().skipped},
                    {"features", model.weights().size()},
                    {"feature_template", model.meta().feature_template}};
  }
  return model;
}

Json RunBaselineRestore(const BaselineModel &model,
                        const std::string &source_path,
                        const std::string &out_path) {
  RequireReadable(source_path);
  RequireWritableTarget(out_path);
  std::vector<std::pair<std::string, std::string>> sources;
  if (LooksLikeJsonLines(source_path, "source")) {
    for (Pair &pair : ReadPairs(source_path)) {
      sources.emplace_back(std::move(pair.id), std::move(pair.source));
    }
  } else {
    const std::vector<std::string> lines = ReadLines(source_path);
    for (size_t i = 0; i < lines.size(); ++i) {
      if (Tokenize(lines[i]).empty()) continue;
      sources.emplace_back("line-" + std::to_string(i + 1), lines[i]);
    }
  }
  std::vector<std::string> restored(sources.size());
  ParallelFor(sources.size(),
              [&](size_t k) { restored[k] = model.Restore(sources[k].second); });

  AtomicFileWriter writer(out_path);
  for (size_t k = 0; k < sources.size(); ++k) {
    writer.WriteJsonLine(Json{{"id", sources[k].first}, {"restored", restored[k]}});
  }
  writer.Commit();
  return Json{{"restored", sources.size()}};
}

Json RunScoreRestoration(const ScoreRestorationOptions &options) {
  RequireReadable(options.gold_path);
  RequireReadable(options.hyp_path);
  RequireWritableTarget(options.report_path);
  RequireWritableTarget(options.report_path + ".tsv");

  std::vector<LabeledSequence> golds;
  int64_t gold_skipped = 0;
  if (LooksLikeJsonLines(options.gold_path, "labels")) {
    golds = ReadLabeledSequences(options.gold_path);
  } else {
    for (const Pair &pair : ReadPairs(options.gold_path)) {
      try {
        golds.push_back(DeriveLabels(pair));
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kAlignment) throw;
        ++gold_skipped;
      }
    }
  }

  std::map<std::string, Hypothesis> hyps;
  if (LooksLikeJsonLines(options.hyp_path, "labels")) {
    for (LabeledSequence &seq : ReadLabeledSequences(options.hyp_path)) {
      std::string id = seq.pair_id;
      if (!hyps.emplace(id, std::move(seq)).second) {
        throw Error(ErrorCode::kParse, "duplicate hypothesis id " + id);
      }
    }
  } else {
    for (auto &[id, text] : ReadTextById(options.hyp_path, {"restored"})) {
      hyps.emplace(id, text);
    }
  }

  const CorpusScore corpus = ScoreCorpus(golds, hyps);

  Report report;
  report.config = Json{{"command", "score restoration"},
                       {"gold", options.gold_path},
                       {"hyp", options.hyp_path},
                       {"row", RowLabelsToJson(options.row)}};
  StampReport(&report);
  ReportRow row = MakeRow(options.row, "PR", options.gold_path);
  row.counts = corpus.score.total;
  row.diagnostics = {{"pairs", corpus.pairs},
                     {"missing_hypotheses", corpus.missing},
                     {"unknown_hypotheses", corpus.unknown},
                     {"inexact_alignments", corpus.inexact},
                     {"gold_skipped", gold_skipped}};
  report.rows.push_back(row);
  report.detail = RestorationScoreToJson(corpus.score);

  std::string tsv = "category\ttp\tfp\tfn\tP\tR\tF1\n";
  auto tsv_row = [&](const std::string &name, const Counts &c) {
    tsv += name + "\t" + std::to_string(c.tp) + "\t" + std::to_string(c.fp) +
           "\t" + std::to_string(c.fn) + "\t" + FormatMetric(c.precision()) +
           "\t" + FormatMetric(c.recall()) + "\t" + FormatMetric(c.f1()) + "\n";
  };
  for (size_t c = 0; c < kNumOpCategories; ++c) {
    tsv_row(CategoryName(static_cast<OpCategory>(c)), corpus.score.per_category[c]);
  }
  tsv_row("TOTAL", corpus.score.total);

  AtomicFileWriter json_writer(options.report_path);
  json_writer.stream() << ReportToJson(report).dump(2) << '\n';
  AtomicFileWriter tsv_writer(options.report_path + ".tsv");
  tsv_writer.stream() << tsv;
  json_writer.Commit();
  tsv_writer.Commit();

  Json summary = RestorationScoreToJson(corpus.score)["totals"];
  summary["pairs"] = corpus.pairs;
  summary["missing_hypotheses"] = corpus.missing;
  return summary;
}

Json RunTaskIngest(ConllSchema schema, const std::string &in_path,
                   const std::string &out_path) {
  RequireReadable(in_path);
  RequireWritableTarget(out_path);
  const std::vector<TaskRecord> records = ReadConll(in_path, schema);
  AtomicFileWriter writer(out_path);
  int64_t tokens = 0;
  for (const TaskRecord &record : records) {
    writer.WriteJsonLine(TaskRecordToJson(record));
    tokens += static_cast<int64_t>(record.tokens.size());
  }
  writer.Commit();
  return Json{{"records", records.size()}, {"tokens", tokens}};
}

std::optional<LinearizeKind> LinearizeKindFromName(const std::string &name) {
  if (name == "ner") return LinearizeKind::kNer;
  if (name == "openie") return LinearizeKind::kOpenIe;
  if (name == "tags") return LinearizeKind::kTags;
  if (name == "multitask") return LinearizeKind::kMultitask;
  return std::nullopt;
}

Json RunTaskLinearize(LinearizeKind kind, const std::string &in_path,
                      const std::string &out_path,
                      const std::string &tag_column) {
  RequireReadable(in_path);
  RequireWritableTarget(out_path);
  const std::vector<TaskRecord> records = ReadTaskRecords(in_path);
  AtomicFileWriter writer(out_path);
  for (const TaskRecord &record : records) {
    std::string target;
    switch (kind) {
      case LinearizeKind::kNer:
        target = LinearizeNer(RecordSpans(record));
        break;
      case LinearizeKind::kOpenIe:
        target = LinearizeOpenIe(record.tuples);
        break;
      case LinearizeKind::kMultitask:
        target = LinearizeMultitask(RecordSpans(record), record.tuples);
        break;
      case LinearizeKind::kTags: {
        auto it = record.columns.find(tag_column);
        if (it == record.columns.end()) {
          throw Error(ErrorCode::kInvalidArgument,
                      "record " + record.id + " has no \"" + tag_column +
                          "\" column");
        }
        target = LinearizeTags(it->second);
        break;
      }
    }
    writer.WriteJsonLine(
        Json{{"id", record.id}, {"input", record.raw_text}, {"target", target}});
  }
  writer.Commit();
  return Json{{"records", records.size()}};
}

Json RunTaskDelinearize(LinearizeKind kind, const std::string &in_path,
                        const std::string &out_path) {
  RequireReadable(in_path);
  RequireWritableTarget(out_path);
  std::vector<std::pair<std::string, std::string>> outputs;
  ForEachJsonLine(in_path, [&](int, const Json &obj) {
    outputs.emplace_back(GetString(obj, "id"), GetString(obj, "output"));
  });

  AtomicFileWriter writer(out_path);
  int64_t diagnostics = 0;
  for (const auto &[id, text] : outputs) {
    Json line{{"id", id}};
    if (kind == LinearizeKind::kTags) {
      line["tags"] = Tokenize(text);
      line["diagnostics"] = Json::array();
    } else {
      const OutputKind parse_kind = kind == LinearizeKind::kNer
                                        ? OutputKind::kNer
                                        : kind == LinearizeKind::kOpenIe
                                              ? OutputKind::kOpenIe
                                              : OutputKind::kMultitask;
      const Delinearized parsed = Delinearize(text, parse_kind);
      Json spans = Json::array();
      for (const Span &span : parsed.spans) {
        spans.push_back(Json{{"surface", span.surface}, {"type", span.type}});
      }
      Json tuples = Json::array();
      for (const Tuple &t : parsed.tuples) {
        tuples.push_back(Json::array({t.arg0, t.predicate, t.arg1}));
      }
      line["spans"] = std::move(spans);
      line["tuples"] = std::move(tuples);
      line["diagnostics"] = parsed.diagnostics;
      diagnostics += static_cast<int64_t>(parsed.diagnostics.size());
    }
    writer.WriteJsonLine(line);
  }
  writer.Commit();
  return Json{{"records", outputs.size()}, {"diagnostics", diagnostics}};
}

std::optional<TaskScoreKind> TaskScoreKindFromName(const std::string &name) {
  if (name == "spans") return TaskScoreKind::kSpans;
  if (name == "tuples") return TaskScoreKind::kTuples;
  if (name == "tags") return TaskScoreKind::kTags;
  if (name == "boundaries") return TaskScoreKind::kBoundaries;
  if (name == "labels") return TaskScoreKind::kLabels;
  return std::nullopt;
}

Json RunScoreTask(const ScoreTaskOptions &options) {
  RequireReadable(options.gold_path);
  RequireReadable(options.pred_path);
  RequireWritableTarget(options.report_path);
  std::optional<TagScheme> scheme = TagSchemeFromName(options.tag_scheme);
  if (!scheme) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown tag scheme \"" + options.tag_scheme + "\"");
  }

  const auto gold = ReadTextById(options.gold_path, {"target", "output"});
  const auto pred = ReadTextById(options.pred_path, {"output", "target"});

  Counts counts;
  std::map<std::string, int64_t> diagnostics = {{"instances", 0},
                                                {"missing_predictions", 0},
                                                {"unknown_predictions", 0},
                                                {"parse_diagnostics", 0}};
  const char *default_task = "";
  std::vector<std::string> gold_labels;
  std::vector<std::string> pred_labels;
  std::vector<std::vector<std::string>> gold_tags;
  std::vector<std::vector<std::string>> pred_tags;

  for (const auto &[id, gold_text] : gold) {
    ++diagnostics["instances"];
    auto it = pred.find(id);
    if (it == pred.end()) ++diagnostics["missing_predictions"];
    const std::string pred_text = it == pred.end() ? "" : it->second;
    switch (options.kind) {
      case TaskScoreKind::kSpans: {
        default_task = "NER";
        const OutputKind k = options.output_kind.value_or(OutputKind::kNer);
        const Delinearized g = Delinearize(gold_text, k);
        const Delinearized p = Delinearize(pred_text, k);
        diagnostics["parse_diagnostics"] +=
            static_cast<int64_t>(p.diagnostics.size());
        counts += ScoreSpans(g.spans, p.spans);
        break;
      }
      case TaskScoreKind::kTuples: {
        default_task = "OpenIE";
        const OutputKind k = options.output_kind.value_or(OutputKind::kOpenIe);
        const Delinearized g = Delinearize(gold_text, k);
        const Delinearized p = Delinearize(pred_text, k);
        diagnostics["parse_diagnostics"] +=
            static_cast<int64_t>(p.diagnostics.size());
        counts += ScoreTuples(g.tuples, p.tuples);
        break;
      }
      case TaskScoreKind::kTags:
        default_task = *scheme == TagScheme::kBio ? "Chunking" : "POS";
        gold_tags.push_back(Tokenize(gold_text));
        pred_tags.push_back(Tokenize(pred_text));
        break;
      case TaskScoreKind::kBoundaries:
        default_task = "SBD";
        counts += ScoreBoundaries(gold_text, pred_text);
        break;
      case TaskScoreKind::kLabels: {
        default_task = "RE";
        auto trim = [](const std::string &s) {
          const std::vector<std::string> parts = Tokenize(s);
          return Join(parts, " ");
        };
        gold_labels.push_back(trim(gold_text));
        pred_labels.push_back(it == pred.end() ? options.negative_label
                                               : trim(pred_text));
        break;
      }
    }
  }
  if (options.kind == TaskScoreKind::kTags) {
    const TagScore tags = ScoreTags(gold_tags, pred_tags, *scheme);
    counts = tags.counts;
    diagnostics["parse_diagnostics"] = tags.diagnostics;
  } else if (options.kind == TaskScoreKind::kLabels) {
    counts = ScoreLabels(gold_labels, pred_labels, options.negative_label);
  }
  for (const auto &entry : pred) {
    if (!gold.count(entry.first)) ++diagnostics["unknown_predictions"];
  }

  Report report;
  report.config = Json{{"command", "score task"},
                       {"kind", static_cast<int>(options.kind)},
                       {"gold", options.gold_path},
                       {"pred", options.pred_path},
                       {"negative_label", options.negative_label},
                       {"tag_scheme", options.tag_scheme},
                       {"output_kind", options.output_kind
                                           ? OutputKindName(*options.output_kind)
                                           : ""},
                       {"row", RowLabelsToJson(options.row)}};
  StampReport(&report);
  ReportRow row = MakeRow(options.row, default_task, options.gold_path);
  row.counts = counts;
  row.diagnostics = diagnostics;
  report.rows.push_back(row);
  if (options.kind == TaskScoreKind::kTuples) {
    report.detail["matcher"] = "exact";
  }
  WriteFileAtomically(options.report_path, ReportToJson(report).dump(2) + "\n");

  Json summary = CountsToJson(counts);
  for (const auto &[name, value] : diagnostics) summary[name] = value;
  return summary;
}

std::string RunReportRender(const std::vector<std::string> &report_paths,
                            ReportStyle style, const std::string &out_path) {
  for (const std::string &path : report_paths) RequireReadable(path);
  if (!out_path.empty()) RequireWritableTarget(out_path);
  std::vector<ReportRow> rows;
  for (const std::string &path : report_paths) {
    Json obj;
    try {
      obj = Json::parse(ReadFile(path));
    } catch (const Json::exception &e) {
      throw Error(ErrorCode::kParse, path + ": " + e.what());
    }
    for (ReportRow &row : ReportFromJson(obj).rows) rows.push_back(std::move(row));
  }
  std::string text = RenderReport(std::move(rows), style);
  if (!out_path.empty()) WriteFileAtomically(out_path, text);
  return text;
}

}  // namespace punctkit
