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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/baseline.h"
#include "core/corpus.h"
#include "core/formats.h"
#include "core/labels.h"
#include "core/linearize.h"
#include "core/scorer.h"
#include "core/task_scorer.h"
#include "core/unicode_text.h"
#include "punctkit.h"
#include "task_fixtures.h"
#include "test_util.h"

namespace punctkit {
namespace {

namespace fs = std::filesystem;
using testing::ReadText;
using testing::TempDir;
using testing::WriteText;

// Collects failures for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string &what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  void Note(const std::string &note) { notes_ += (notes_.empty() ? "" : "; ") + note; }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::string s = std::to_string(checks_) + " checks";
    if (!notes_.empty()) s += "; " + notes_;
    if (failed_ > 0) {
      s += "; " + std::to_string(failed_) + " failed:";
      for (const auto &f : failures_) s += " [" + f + "]";
    }
    return s;
  }

 private:
  int64_t checks_ = 0;
  int64_t failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::vector<std::string> SplitLines(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

double F1(int64_t tp, int64_t fp, int64_t fn) {
  if (tp + fp + fn == 0) return 1.0;
  const double p = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
  const double r = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
  return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
}

// ---------------------------------------------------------------------------

void WorkedExample(Check *c) {
  const std::string target =
      "Lee \"Faker\" Sang-hyeok (Hangul: 이상혁) is a League of Legends esports "
      "player, currently mid laner and part owner at T1.";
  const std::string source =
      "lee faker sang-hyeok (hangul: 이상혁) is a league of legends esports "
      "player currently mid laner and part owner at t1";
  c->Expect(Depunctuate(target) == source, "depunctuate");
  const LabeledSequence seq = DeriveLabels(Pair{"faker", source, target});
  c->Expect(ApplyLabels(seq.tokens, seq.labels) == target, "derive/apply");
  c->Expect(Join(seq.tokens, " ") == source, "token stream");
}

// Copies a trained model with every weight replaced by a random value and
// the label order shuffled.
BaselineModel RandomizeWeights(const BaselineModel &model, std::mt19937_64 *rng) {
  std::istringstream in(model.Serialize());
  std::ostringstream out;
  std::string line;
  std::uniform_int_distribution<int64_t> raw(-50, 50);
  std::uniform_real_distribution<double> avg(-5.0, 5.0);
  while (std::getline(in, line)) {
    if (line.rfind("labels ", 0) == 0) {
      std::vector<std::string> names = Tokenize(line.substr(7));
      std::shuffle(names.begin(), names.end(), *rng);
      line = "labels " + Join(names, " ");
    } else if (line.find('\t') != std::string::npos) {
      const std::string key = line.substr(0, line.find('\t'));
      std::string r, a;
      char buf[64];
      for (int k = 0; k < kNumBaselineLabels; ++k) {
        r += (k ? "," : "") + std::to_string(raw(*rng));
        std::snprintf(buf, sizeof buf, "%.17g", avg(*rng));
        a += (k ? "," : "") + std::string(buf);
      }
      line = key + "\t" + r + "\t" + a;
    }
    out << line << '\n';
  }
  return BaselineModel::Deserialize(out.str());
}

void RoundTrips(Check *c) {
  testing::TargetGenerator gen(2026);
  std::vector<Pair> pairs;
  int64_t identity = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::string target = gen.Next();
    const Pair pair{"f" + std::to_string(i), Depunctuate(target), target};
    bool ok = false;
    try {
      const LabeledSequence seq = DeriveLabels(pair);
      ok = ApplyLabels(seq.tokens, seq.labels) == target;
    } catch (const std::exception &e) {
      ok = false;
    }
    identity += ok;
    c->Expect(ok, "labels round trip: " + target);
    if (i < 1500) pairs.push_back(pair);
  }
  c->Note(std::to_string(identity) + "/10000 label round trips");

  testing::SyntheticCorpus synth(9);
  std::vector<Pair> synthetic;
  for (int i = 0; i < 800; ++i) {
    const std::string t = synth.NextTarget();
    synthetic.push_back(Pair{"s" + std::to_string(i), Depunctuate(t), t});
  }
  std::vector<BaselineModel> models;
  models.emplace_back();
  models.push_back(BaselineModel::Train(pairs, 3, 1));
  models.push_back(BaselineModel::Train(synthetic, 5, 2));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 4; ++k) models.push_back(RandomizeWeights(models[1 + k % 2], &rng));

  int64_t restores = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::string s = Depunctuate(i % 2 ? gen.Next() : synth.NextTarget());
    const BaselineModel &m = models[i % models.size()];
    const std::string restored = m.Restore(s);
    c->Expect(Depunctuate(restored) == s, "restore: " + s + " -> " + restored);
    ++restores;
  }
  c->Note(std::to_string(restores) + " restores over " + std::to_string(models.size()) +
          " models");
}

// Independent oracle: set intersection over ops.
std::vector<RestorationOp> RandomOps(std::mt19937_64 *rng, int tokens) {
  std::set<RestorationOp> ops;
  const int count = static_cast<int>((*rng)() % 7);
  for (int k = 0; k < count; ++k) {
    RestorationOp op;
    op.token_index = static_cast<int>((*rng)() % tokens);
    if ((*rng)() % 3 == 0) {
      op.kind = OpKind::kCap;
      op.cap.kind = static_cast<CapKind>(1 + (*rng)() % 2);
    } else {
      op.kind = OpKind::kInsert;
      op.insert.slot = static_cast<Slot>((*rng)() % 3);
      op.insert.mark = static_cast<Mark>((*rng)() % 4);
      op.insert.rank = static_cast<int>((*rng)() % 2);
      op.insert.offset = op.insert.slot == Slot::kInterior ? 1 : 0;
    }
    ops.insert(op);
  }
  return {ops.begin(), ops.end()};
}

void ScorerOracle(Check *c) {
  std::mt19937_64 rng(31);
  int empty_both = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const std::vector<std::string> tokens(n, "w");
    const auto gold = RandomOps(&rng, n);
    const auto pred = RandomOps(&rng, n);
    const RestorationScore s = ScoreRestoration(gold, pred, AlignTokens(tokens, tokens));
    std::vector<RestorationOp> both;
    std::set_intersection(gold.begin(), gold.end(), pred.begin(), pred.end(),
                          std::back_inserter(both));
    const int64_t tp = static_cast<int64_t>(both.size());
    const int64_t fp = static_cast<int64_t>(pred.size()) - tp;
    const int64_t fn = static_cast<int64_t>(gold.size()) - tp;
    const bool none = gold.empty() && pred.empty();
    empty_both += none;
    const double p = tp + fp == 0 ? (none ? 1.0 : 0.0) : static_cast<double>(tp) / (tp + fp);
    const double r = tp + fn == 0 ? (none ? 1.0 : 0.0) : static_cast<double>(tp) / (tp + fn);
    const std::string id = "trial " + std::to_string(trial);
    c->Expect(s.total.tp == tp && s.total.fp == fp && s.total.fn == fn, id + " counts");
    c->Expect(s.total.precision() == p && s.total.recall() == r, id + " P/R");
    c->Expect(std::abs(s.total.f1() - F1(tp, fp, fn)) < 1e-12, id + " F1");
  }
  c->Note(std::to_string(empty_both) + " trials with empty gold and pred");
}

std::vector<Pair> SyntheticPairs(int n, uint64_t seed) {
  testing::SyntheticCorpus corpus(seed);
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i) {
    const std::string t = corpus.NextTarget();
    pairs.push_back(Pair{"p" + std::to_string(i), Depunctuate(t), t});
  }
  return pairs;
}

double CorpusF1(const std::vector<LabeledSequence> &golds,
                const std::map<std::string, Hypothesis> &hyps) {
  return ScoreCorpus(golds, hyps).score.total.f1();
}

void Learnability(Check *c) {
  const std::vector<Pair> all = SyntheticPairs(5000, 77);
  const std::vector<Pair> train(all.begin(), all.begin() + 4000);
  const std::vector<Pair> test(all.begin() + 4000, all.end());
  const BaselineModel model = BaselineModel::Train(train, 10, 42);

  // Majority class counted from the training labels directly.
  std::map<int, int64_t> freq;
  for (const Pair &p : train) {
    for (const TokenLabel &l : DeriveLabels(p).labels) ++freq[ReduceLabel(l).index()];
  }
  const int majority = std::max_element(freq.begin(), freq.end(), [](auto &a, auto &b) {
                         return a.second < b.second;
                       })->first;
  const TokenLabel majority_label = ExpandLabel(BaselineLabel::FromIndex(majority));

  std::vector<LabeledSequence> golds;
  std::map<std::string, Hypothesis> trained, noop, major;
  for (const Pair &p : test) {
    golds.push_back(DeriveLabels(p));
    trained[p.id] = model.Restore(p.source);
    noop[p.id] = p.source;
    const std::vector<std::string> tokens = Tokenize(p.source);
    major[p.id] = ApplyLabels(tokens, std::vector<TokenLabel>(tokens.size(), majority_label));
  }
  const double f_trained = CorpusF1(golds, trained);
  const double f_noop = CorpusF1(golds, noop);
  const double f_major = CorpusF1(golds, major);
  c->Note("F1 trained " + Fmt(f_trained) + ", no-op " + Fmt(f_noop) + ", majority (" +
          BaselineLabel::FromIndex(majority).name() + ") " + Fmt(f_major));
  c->Expect(f_trained >= 0.90, "trained F1 >= 0.90");
  c->Expect(f_trained - f_noop >= 0.30, "margin over no-op");
  c->Expect(f_trained - f_major >= 0.30, "margin over majority");
}

// Runs a C API call and records failures with the last error message.
bool Ok(Check *c, pk_status st, const std::string &what) {
  c->Expect(st == PK_OK, what + ": " + pk_status_name(st) + " " + pk_last_error());
  return st == PK_OK;
}

std::string TakeString(pk_string *s) {
  std::string v = s ? pk_string_data(s) : "";
  pk_string_free(s);
  return v;
}

// corpus build -> labels derive -> train -> restore -> score -> render, all
// through the shared library. Returns false on the first failing step.
bool RunPipeline(Check *c, const std::string &docs, const std::string &dir, int limit,
                 int64_t dev_n, int64_t test_n, int epochs) {
  pk_corpus_build_options opts;
  pk_corpus_build_options_init(&opts);
  const std::string corpus_dir = dir + "/corpus";
  opts.input_path = docs.c_str();
  opts.out_dir = corpus_dir.c_str();
  opts.limit = limit;
  opts.dev_n = dev_n;
  opts.test_n = test_n;
  opts.seed = 7;
  if (!Ok(c, pk_corpus_build(&opts, nullptr), "corpus build")) return false;
  const std::string test_pairs = corpus_dir + "/test.jsonl";
  const std::string gold = dir + "/test.labels.jsonl";
  if (!Ok(c, pk_labels_derive(test_pairs.c_str(), gold.c_str(), nullptr), "labels")) {
    return false;
  }
  pk_model *model = nullptr;
  const std::string train = corpus_dir + "/train.jsonl";
  if (!Ok(c, pk_model_train(train.c_str(), epochs, 42, &model, nullptr), "train")) {
    return false;
  }
  const std::string model_path = dir + "/model.pk";
  const std::string hyp = dir + "/hyp.jsonl";
  bool ok = Ok(c, pk_model_save(model, model_path.c_str()), "save") &&
            Ok(c, pk_baseline_restore(model, test_pairs.c_str(), hyp.c_str(), nullptr),
               "restore");
  pk_model_free(model);
  if (!ok) return false;
  const std::string report = dir + "/report.json";
  pk_report_row row{"PR", "corpus", nullptr, 1};
  if (!Ok(c, pk_score_restoration(gold.c_str(), hyp.c_str(), report.c_str(), &row, nullptr),
          "score")) {
    return false;
  }
  const char *reports[] = {report.c_str()};
  const std::string table = dir + "/table.md";
  return Ok(c, pk_report_render(reports, 1, "markdown", table.c_str(), nullptr), "render");
}

void PublicText(Check *c) {
  const std::string docs = std::string(PUNCTKIT_DATA_DIR) + "/kjv_paragraphs.jsonl";
  TempDir dir("acc-kjv");
  if (!RunPipeline(c, docs, dir.path().string(), 150, 100, 300, 10)) return;

  // Independent re-scoring from the files on disk.
  std::vector<LabeledSequence> golds;
  for (const std::string &line : SplitLines(ReadText(dir.File("test.labels.jsonl")))) {
    golds.push_back(LabeledSequenceFromJson(Json::parse(line)));
  }
  std::map<std::string, std::string> restored;
  for (const std::string &line : SplitLines(ReadText(dir.File("hyp.jsonl")))) {
    const Json j = Json::parse(line);
    restored[j.at("id").get<std::string>()] = j.at("restored").get<std::string>();
  }
  auto period_cap_f1 = [&](bool use_model) {
    int64_t tp = 0, fp = 0, fn = 0;
    for (const LabeledSequence &g : golds) {
      const std::string text = use_model ? restored.at(g.pair_id) : Join(g.tokens, " ");
      const LabeledSequence h = LabelsFromText(text);
      std::set<RestorationOp> gs, hs;
      for (const RestorationOp &op : LabelsToOps(g)) {
        if (op.kind == OpKind::kCap || op.insert.mark == Mark::kPeriod) gs.insert(op);
      }
      if (h.tokens == g.tokens) {
        for (const RestorationOp &op : LabelsToOps(h)) {
          if (op.kind == OpKind::kCap || op.insert.mark == Mark::kPeriod) hs.insert(op);
        }
      }
      std::vector<RestorationOp> both;
      std::set_intersection(gs.begin(), gs.end(), hs.begin(), hs.end(),
                            std::back_inserter(both));
      tp += static_cast<int64_t>(both.size());
      fp += static_cast<int64_t>(hs.size() - both.size());
      fn += static_cast<int64_t>(gs.size() - both.size());
    }
    return F1(tp, fp, fn);
  };
  const double f_model = period_cap_f1(true);
  const double f_noop = period_cap_f1(false);

  int64_t initial_gold = 0, initial_hit = 0, aligned = 0;
  for (const LabeledSequence &g : golds) {
    const LabeledSequence h = LabelsFromText(restored.at(g.pair_id));
    if (h.tokens != g.tokens) continue;
    ++aligned;
    for (size_t i = 1; i < g.tokens.size(); ++i) {
      if (ReduceLabel(g.labels[i - 1]).trailing != TrailTag::kPeriod) continue;
      ++initial_gold;
      initial_hit += h.labels[i].cap.kind == CapKind::kInitial;
    }
  }
  const double initial_rate = initial_gold ? static_cast<double>(initial_hit) / initial_gold : 0;
  c->Note(std::to_string(golds.size()) + " test excerpts (" + std::to_string(aligned) +
          " aligned); PERIOD+CAP F1 model " + Fmt(f_model) + ", no-op " + Fmt(f_noop) +
          "; INITIAL on " + std::to_string(initial_hit) + "/" + std::to_string(initial_gold) +
          " sentence-initial tokens (" + Fmt(initial_rate) + ")");
  c->Expect(aligned == static_cast<int64_t>(golds.size()), "all hypotheses align");
  c->Expect(f_model > f_noop, "model beats no-op");
  c->Expect(initial_gold > 0 && initial_rate >= 0.80, "INITIAL rate >= 0.80");

  // The library's own report must agree with the re-scoring on CAP+PERIOD.
  const Json report = Json::parse(ReadText(dir.File("report.json")));
  const Json &cats = report.at("detail").at("per_category");
  const int64_t tp = cats.at("CAP").at("tp").get<int64_t>() + cats.at("PERIOD").at("tp").get<int64_t>();
  const int64_t fp = cats.at("CAP").at("fp").get<int64_t>() + cats.at("PERIOD").at("fp").get<int64_t>();
  const int64_t fn = cats.at("CAP").at("fn").get<int64_t>() + cats.at("PERIOD").at("fn").get<int64_t>();
  c->Expect(std::abs(F1(tp, fp, fn) - f_model) < 1e-12, "report agrees with re-scoring");
}

void ExampleStrings(Check *c) {
  const Span faker{"Faker", "PER", {}};
  const Span t1{"T1", "ORG", {}};
  const Tuple a{"Faker", "is", "a League of Legends esports player"};
  const Tuple b{"Faker", "is mid laner and part owner at", "T1"};
  const std::string openie =
      "(Faker, is, a League of Legends esports player) (Faker, is mid laner and part "
      "owner at, T1)";
  const std::string ner = "(Faker: PER) (T1: ORG)";
  const std::string multi =
      "(Faker: PER) (Faker, is, a League of Legends esports player) (Faker, is mid laner "
      "and part owner at, T1) (T1: ORG)";
  c->Expect(LinearizeOpenIe({a, b}) == openie, "openie string");
  c->Expect(LinearizeNer({faker, t1}) == ner, "ner string");
  c->Expect(LinearizeMultitask({faker, t1}, {a, b}) == multi, "multitask string");
  Delinearized d = Delinearize(ner, OutputKind::kNer);
  c->Expect(d.spans == std::vector<Span>{faker, t1} && d.diagnostics.empty(), "ner parse");
  d = Delinearize(openie, OutputKind::kOpenIe);
  c->Expect(d.tuples == std::vector<Tuple>{a, b} && d.diagnostics.empty(), "openie parse");
  d = Delinearize(multi, OutputKind::kMultitask);
  c->Expect(d.spans == std::vector<Span>{faker, t1} && d.tuples == std::vector<Tuple>{a, b} &&
                d.diagnostics.empty(),
            "multitask parse");
}

std::string Field(std::mt19937_64 *rng, bool allow_comma_space) {
  static const std::vector<std::string> words = {
      "Faker", "T1", "a", "League", "of", "Legends", "1,000", "x:y", "é", "이상혁",
      "mid-laner", "A.B.", "\"q\"", "(LCK)", "f(x)"};
  const int n = 1 + static_cast<int>((*rng)() % 4);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i > 0) out += allow_comma_space && (*rng)() % 3 == 0 ? ", " : " ";
    out += words[(*rng)() % words.size()];
  }
  return out;
}

// Number of top-level units a delinearizer must account for: stray text
// runs, unmatched ')', balanced groups and one unterminated tail.
int64_t CountUnits(const std::string &s) {
  int64_t units = 0;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    } else if (s[i] == ')') {
      ++units;
      ++i;
    } else if (s[i] != '(') {
      ++units;
      i = s.find_first_of("()", i);
      if (i == std::string::npos) break;
    } else {
      int depth = 0;
      size_t j = i;
      for (; j < s.size(); ++j) {
        depth += s[j] == '(' ? 1 : s[j] == ')' ? -1 : 0;
        if (depth == 0) break;
      }
      ++units;
      if (j == s.size()) break;
      i = j + 1;
    }
  }
  return units;
}

void LinearizationRoundTrip(Check *c) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<Span> spans(rng() % 5);
    for (Span &s : spans) {
      s = Span{Field(&rng, true), Field(&rng, false), {}};
      s.type.erase(std::remove(s.type.begin(), s.type.end(), ' '), s.type.end());
    }
    std::vector<Tuple> tuples(rng() % 5);
    for (Tuple &t : tuples) {
      t = Tuple{Field(&rng, false), Field(&rng, true), Field(&rng, false)};
      if (!spans.empty() && rng() % 2) {
        const std::string &surface = spans[rng() % spans.size()].surface;
        if (surface.find(", ") == std::string::npos) t.arg0 = surface;
      }
    }
    const std::string id = "trial " + std::to_string(trial);
    Delinearized d = Delinearize(LinearizeNer(spans), OutputKind::kNer);
    c->Expect(d.spans == spans && d.tuples.empty() && d.diagnostics.empty(), id + " ner");
    d = Delinearize(LinearizeOpenIe(tuples), OutputKind::kOpenIe);
    c->Expect(d.tuples == tuples && d.spans.empty() && d.diagnostics.empty(), id + " openie");
    d = Delinearize(LinearizeMultitask(spans, tuples), OutputKind::kMultitask);
    std::vector<Tuple> got = d.tuples, want = tuples;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    c->Expect(d.spans == spans && got == want && d.diagnostics.empty(), id + " multitask");
  }

  const std::string alphabet = "(),: abé\t";
  int64_t inputs = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::string s(rng() % 40, ' ');
    for (char &ch : s) ch = alphabet[rng() % alphabet.size()];
    const int64_t units = CountUnits(s);
    for (OutputKind k : {OutputKind::kNer, OutputKind::kOpenIe, OutputKind::kMultitask}) {
      ++inputs;
      try {
        const Delinearized d = Delinearize(s, k);
        const int64_t produced = static_cast<int64_t>(d.spans.size() + d.tuples.size() +
                                                      d.diagnostics.size());
        c->Expect(produced == units, "units for \"" + s + "\"");
        bool fields = true;
        for (const Span &sp : d.spans) fields &= !sp.surface.empty() && !sp.type.empty();
        for (const Tuple &t : d.tuples) {
          fields &= !t.arg0.empty() && !t.predicate.empty() && !t.arg1.empty();
        }
        c->Expect(fields, "empty field for \"" + s + "\"");
        if (k == OutputKind::kNer) c->Expect(d.tuples.empty(), "ner tuples");
        if (k == OutputKind::kOpenIe) c->Expect(d.spans.empty(), "openie spans");
      } catch (...) {
        c->Expect(false, "threw on \"" + s + "\"");
      }
    }
  }
  c->Note("10000 round trips x 3 formats, " + std::to_string(inputs) + " malformed inputs");
}

void TaskScorers(Check *c) {
  auto same = [](const Counts &a, const Counts &b) {
    return a.tp == b.tp && a.fp == b.fp && a.fn == b.fn;
  };
  int spans = 0, tuples = 0, tags = 0, bounds = 0, labels = 0;
  for (const auto &f : testing::SpanFixtures()) {
    c->Expect(same(ScoreSpans(f.gold, f.pred), f.expected), std::string("spans ") + f.name);
    ++spans;
  }
  for (const auto &f : testing::TupleFixtures()) {
    c->Expect(same(ScoreTuples(f.gold, f.pred), f.expected), std::string("tuples ") + f.name);
    ++tuples;
  }
  for (const auto &f : testing::TagFixtures()) {
    const TagScore s = ScoreTags(f.gold, f.pred, f.scheme);
    c->Expect(same(s.counts, f.expected) && s.diagnostics == f.diagnostics,
              std::string("tags ") + f.name);
    ++tags;
  }
  for (const auto &f : testing::BoundaryFixtures()) {
    c->Expect(same(ScoreBoundaries(f.gold, f.pred), f.expected),
              std::string("boundaries ") + f.name);
    ++bounds;
  }
  for (const auto &f : testing::LabelFixtures()) {
    c->Expect(same(ScoreLabels(f.gold, f.pred, f.negative), f.expected),
              std::string("labels ") + f.name);
    ++labels;
  }
  c->Expect(std::min({spans, tuples, tags, bounds, labels}) >= 10, "at least 10 fixtures each");
  c->Note("fixtures: spans " + std::to_string(spans) + ", tuples " + std::to_string(tuples) +
          ", tags " + std::to_string(tags) + ", boundaries " + std::to_string(bounds) +
          ", labels " + std::to_string(labels));
}

void Determinism(Check *c) {
  TempDir work("acc-det");
  const std::string docs = work.File("docs.jsonl");
  {
    testing::SyntheticCorpus corpus(12);
    std::string text;
    for (int i = 0; i < 400; ++i) {
      text += Json{{"id", "doc" + std::to_string(i)}, {"text", corpus.NextTarget()}}.dump() +
              "\n";
    }
    WriteText(docs, text);
  }
  const std::string a = work.File("a");
  const std::string b = work.File("b");
  fs::create_directory(a);
  fs::create_directory(b);
  // Same config, so the run directory must not leak into the outputs.
  const fs::path cwd = fs::current_path();
  bool ok = true;
  for (const std::string &run : {a, b}) {
    fs::current_path(run);
    ok = ok && RunPipeline(c, "../docs.jsonl", ".", 20, 30, 30, 5);
  }
  fs::current_path(cwd);
  if (!ok) return;
  int files = 0;
  for (const char *name : {"corpus/train.jsonl", "corpus/dev.jsonl", "corpus/test.jsonl",
                           "corpus/manifest.json", "test.labels.jsonl", "model.pk",
                           "hyp.jsonl", "report.json", "table.md"}) {
    const std::string x = ReadText(a + "/" + name);
    c->Expect(!x.empty() && x == ReadText(b + "/" + name), name);
    ++files;
  }
  c->Note(std::to_string(files) + " files compared byte for byte");
}

}  // namespace
}  // namespace punctkit

int main() {
  using Fn = void (*)(punctkit::Check *);
  const std::vector<std::pair<const char *, Fn>> criteria = {
      {"worked example", punctkit::WorkedExample},
      {"round-trip properties", punctkit::RoundTrips},
      {"scorer oracle", punctkit::ScorerOracle},
      {"learnability", punctkit::Learnability},
      {"public text", punctkit::PublicText},
      {"linearization strings", punctkit::ExampleStrings},
      {"linearization round trip", punctkit::LinearizationRoundTrip},
      {"task scorers", punctkit::TaskScorers},
      {"determinism", punctkit::Determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    punctkit::Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(&check);
    } catch (const std::exception &e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s: %s (%.1fs) %s\n", i + 1, check.ok() ? "PASS" : "FAIL",
                criteria[i].first, secs, check.Summary().c_str());
    std::fflush(stdout);
    failed += !check.ok();
  }
  return failed == 0 ? 0 : 1;
}
