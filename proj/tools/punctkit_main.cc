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

// punctkit command line tool. Talks to the library through its C API only.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "punctkit.h"

namespace {

constexpr int kUsageExit = 2;

// Errors go to stderr as one line: "error <STATUS>: <message>".
int Fail(pk_status status) {
  std::fprintf(stderr, "error %s: %s\n", pk_status_name(status), pk_last_error());
  return static_cast<int>(status) == 0 ? 1 : static_cast<int>(status) + 2;
}

int Finish(pk_status status, pk_string *summary) {
  if (status != PK_OK) return Fail(status);
  if (summary) {
    std::printf("%s\n", pk_string_data(summary));
    pk_string_free(summary);
  }
  return 0;
}

struct RowFlags {
  std::string task;
  std::string training_set;
  std::string evaluation_set;
  bool in_distribution = false;

  void Add(CLI::App *cmd) {
    cmd->add_option("--task", task, "Task name shown in reports");
    cmd->add_option("--training-set", training_set, "Training set shown in reports");
    cmd->add_option("--eval-set", evaluation_set,
                    "Evaluation set shown in reports (default: gold file stem)");
    cmd->add_flag("--in-distribution", in_distribution,
                  "Mark the evaluation as in-distribution (rendered as ID)");
  }

  pk_report_row Row() const {
    pk_report_row row{};
    row.task = task.empty() ? nullptr : task.c_str();
    row.training_set = training_set.c_str();
    row.evaluation_set = evaluation_set.empty() ? nullptr : evaluation_set.c_str();
    row.in_distribution = in_distribution ? 1 : 0;
    return row;
  }
};

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"punctkit: punctuation restoration corpus, baseline and scoring tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("punctkit ") + pk_version() +
                                        " formats " + pk_format_versions());

  std::function<int()> action;

  // corpus build
  CLI::App *corpus = app.add_subcommand("corpus", "Build pair corpora");
  corpus->require_subcommand(1);
  pk_corpus_build_options build;
  pk_corpus_build_options_init(&build);
  std::string build_input;
  std::string build_out;
  CLI::App *corpus_build =
      corpus->add_subcommand("build", "Documents file to train/dev/test pair files");
  corpus_build->add_option("--input", build_input, "Documents JSON-lines file")
      ->required();
  corpus_build->add_option("--out", build_out, "Output directory")->required();
  corpus_build->add_option("--limit", build.limit, "Maximum words per excerpt")
      ->capture_default_str();
  corpus_build->add_option("--dev", build.dev_n, "Dev pairs")->capture_default_str();
  corpus_build->add_option("--test", build.test_n, "Test pairs")->capture_default_str();
  corpus_build->add_option("--seed", build.seed, "Shuffle seed")->required();
  corpus_build->callback([&] {
    action = [&] {
      build.input_path = build_input.c_str();
      build.out_dir = build_out.c_str();
      pk_string *summary = nullptr;
      pk_status status = pk_corpus_build(&build, &summary);
      return Finish(status, summary);
    };
  });

  // labels derive
  CLI::App *labels = app.add_subcommand("labels", "Restoration labels");
  labels->require_subcommand(1);
  std::string derive_pairs;
  std::string derive_out;
  CLI::App *derive = labels->add_subcommand("derive", "Pairs file to labels file");
  derive->add_option("--pairs", derive_pairs, "Pairs file")->required();
  derive->add_option("--out", derive_out, "Labels file")->required();
  derive->callback([&] {
    action = [&] {
      pk_string *summary = nullptr;
      pk_status status =
          pk_labels_derive(derive_pairs.c_str(), derive_out.c_str(), &summary);
      return Finish(status, summary);
    };
  });

  // baseline train|restore
  CLI::App *baseline = app.add_subcommand("baseline", "Averaged perceptron baseline");
  baseline->require_subcommand(1);
  std::string train_pairs;
  std::string train_out;
  int epochs = 10;
  uint64_t train_seed = 0;
  CLI::App *train = baseline->add_subcommand("train", "Train a model");
  train->add_option("--pairs", train_pairs, "Training pairs file")->required();
  train->add_option("--epochs", epochs, "Training epochs")->capture_default_str();
  train->add_option("--seed", train_seed, "Shuffle seed")->required();
  train->add_option("--out", train_out, "Model file")->required();
  train->callback([&] {
    action = [&] {
      pk_model *model = nullptr;
      pk_string *summary = nullptr;
      pk_status status =
          pk_model_train(train_pairs.c_str(), epochs, train_seed, &model, &summary);
      if (status != PK_OK) return Fail(status);
      status = pk_model_save(model, train_out.c_str());
      pk_model_free(model);
      if (status != PK_OK) {
        pk_string_free(summary);
        return Fail(status);
      }
      return Finish(status, summary);
    };
  });

  std::string restore_model;
  std::string restore_source;
  std::string restore_out;
  CLI::App *restore = baseline->add_subcommand("restore", "Restore sources");
  restore->add_option("--model", restore_model, "Model file")->required();
  restore->add_option("--source", restore_source, "Pairs file or plain text")
      ->required();
  restore->add_option("--out", restore_out, "Hypotheses file")->required();
  restore->callback([&] {
    action = [&] {
      pk_model *model = nullptr;
      pk_status status = pk_model_load(restore_model.c_str(), &model);
      if (status != PK_OK) return Fail(status);
      pk_string *summary = nullptr;
      status = pk_baseline_restore(model, restore_source.c_str(),
                                   restore_out.c_str(), &summary);
      pk_model_free(model);
      return Finish(status, summary);
    };
  });

  // score restoration|task
  CLI::App *score = app.add_subcommand("score", "Scoring");
  score->require_subcommand(1);
  std::string rs_gold;
  std::string rs_hyp;
  std::string rs_report;
  RowFlags rs_row;
  CLI::App *score_restoration =
      score->add_subcommand("restoration", "Operation-level restoration scores");
  score_restoration->add_option("--gold", rs_gold, "Labels or pairs file")->required();
  score_restoration->add_option("--hyp", rs_hyp, "Hypotheses or labels file")
      ->required();
  score_restoration->add_option("--report", rs_report, "Report JSON file")->required();
  rs_row.Add(score_restoration);
  score_restoration->callback([&] {
    action = [&] {
      const pk_report_row row = rs_row.Row();
      pk_string *summary = nullptr;
      pk_status status = pk_score_restoration(rs_gold.c_str(), rs_hyp.c_str(),
                                              rs_report.c_str(), &row, &summary);
      return Finish(status, summary);
    };
  });

  std::string st_kind;
  std::string st_gold;
  std::string st_pred;
  std::string st_report;
  std::string st_negative = "no_relation";
  std::string st_scheme = "accuracy";
  std::string st_output_kind;
  RowFlags st_row;
  CLI::App *score_task = score->add_subcommand("task", "Task-level scores");
  score_task->add_option("--kind", st_kind, "What to score")
      ->required()
      ->check(CLI::IsMember({"spans", "tuples", "tags", "boundaries", "labels"}));
  score_task->add_option("--gold", st_gold, "Gold file")->required();
  score_task->add_option("--pred", st_pred, "Predictions file")->required();
  score_task->add_option("--report", st_report, "Report JSON file")->required();
  score_task->add_option("--negative-label", st_negative, "Negative relation label")
      ->capture_default_str();
  score_task->add_option("--scheme", st_scheme, "Tag scheme for --kind tags")
      ->capture_default_str()
      ->check(CLI::IsMember({"accuracy", "pos", "bio", "chunk"}));
  score_task->add_option("--output-kind", st_output_kind,
                         "Parser for span/tuple outputs")
      ->check(CLI::IsMember({"ner", "openie", "multitask"}));
  st_row.Add(score_task);
  score_task->callback([&] {
    action = [&] {
      pk_score_task_options options;
      pk_score_task_options_init(&options);
      options.kind = st_kind.c_str();
      options.gold_path = st_gold.c_str();
      options.pred_path = st_pred.c_str();
      options.report_path = st_report.c_str();
      options.negative_label = st_negative.c_str();
      options.tag_scheme = st_scheme.c_str();
      options.output_kind = st_output_kind.empty() ? nullptr : st_output_kind.c_str();
      options.row = st_row.Row();
      pk_string *summary = nullptr;
      pk_status status = pk_score_task(&options, &summary);
      return Finish(status, summary);
    };
  });

  // task ingest|linearize|delinearize
  CLI::App *task = app.add_subcommand("task", "Downstream task data");
  task->require_subcommand(1);
  std::string ingest_format;
  std::string ingest_in;
  std::string ingest_out;
  CLI::App *ingest = task->add_subcommand("ingest", "CoNLL file to task records");
  ingest->add_option("--format", ingest_format, "Column layout")
      ->required()
      ->check(CLI::IsMember({"conll03", "conll00"}));
  ingest->add_option("--in", ingest_in, "CoNLL file")->required();
  ingest->add_option("--out", ingest_out, "Task records file")->required();
  ingest->callback([&] {
    action = [&] {
      pk_string *summary = nullptr;
      pk_status status = pk_task_ingest(ingest_format.c_str(), ingest_in.c_str(),
                                        ingest_out.c_str(), &summary);
      return Finish(status, summary);
    };
  });

  std::string lin_kind;
  std::string lin_in;
  std::string lin_out;
  std::string lin_column = "pos";
  CLI::App *linearize =
      task->add_subcommand("linearize", "Task records to input/target lines");
  linearize->add_option("--kind", lin_kind, "Output layout")
      ->required()
      ->check(CLI::IsMember({"ner", "openie", "tags", "multitask"}));
  linearize->add_option("--in", lin_in, "Task records file")->required();
  linearize->add_option("--out", lin_out, "Linearized file")->required();
  linearize->add_option("--column", lin_column, "Tag column for --kind tags")
      ->capture_default_str();
  linearize->callback([&] {
    action = [&] {
      pk_string *summary = nullptr;
      pk_status status = pk_task_linearize(lin_kind.c_str(), lin_in.c_str(),
                                           lin_out.c_str(), lin_column.c_str(),
                                           &summary);
      return Finish(status, summary);
    };
  });

  std::string delin_kind;
  std::string delin_in;
  std::string delin_out;
  CLI::App *delinearize =
      task->add_subcommand("delinearize", "Parse model outputs into structures");
  delinearize->add_option("--kind", delin_kind, "Output layout")
      ->required()
      ->check(CLI::IsMember({"ner", "openie", "tags", "multitask"}));
  delinearize->add_option("--in", delin_in, "Predictions file")->required();
  delinearize->add_option("--out", delin_out, "Parsed file")->required();
  delinearize->callback([&] {
    action = [&] {
      pk_string *summary = nullptr;
      pk_status status = pk_task_delinearize(delin_kind.c_str(), delin_in.c_str(),
                                             delin_out.c_str(), &summary);
      return Finish(status, summary);
    };
  });

  // report render
  CLI::App *report = app.add_subcommand("report", "Reports");
  report->require_subcommand(1);
  std::vector<std::string> render_paths;
  std::string render_style = "markdown";
  std::string render_out;
  CLI::App *render = report->add_subcommand("render", "Render report rows as a table");
  render->add_option("--report", render_paths, "Report JSON files")->required();
  render->add_option("--style", render_style, "Table style")
      ->capture_default_str()
      ->check(CLI::IsMember({"tsv", "markdown"}));
  render->add_option("--out", render_out, "Output file (default: stdout)");
  render->callback([&] {
    action = [&] {
      std::vector<const char *> paths;
      for (const std::string &p : render_paths) paths.push_back(p.c_str());
      pk_string *text = nullptr;
      pk_status status =
          pk_report_render(paths.data(), paths.size(), render_style.c_str(),
                           render_out.empty() ? nullptr : render_out.c_str(), &text);
      if (status != PK_OK) return Fail(status);
      if (render_out.empty()) std::fputs(pk_string_data(text), stdout);
      pk_string_free(text);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsageExit;
  }
  return action ? action() : kUsageExit;
}
