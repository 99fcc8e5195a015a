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

#include "core/baseline.h"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "core/io.h"
#include "core/random.h"
#include "core/status.h"
#include "core/unicode_text.h"

namespace punctkit {

namespace {

constexpr const char *kMagic = "punctkit-baseline-model";
constexpr const char *kStart = "<S>";
constexpr const char *kEnd = "</S>";

const char *CapTagName(CapTag cap) {
  switch (cap) {
    case CapTag::kLower:
      return "LOWER";
    case CapTag::kInitial:
      return "INITIAL";
    case CapTag::kAllCaps:
      return "ALL_CAPS";
  }
  return "?";
}

const char *TrailTagName(TrailTag trailing) {
  switch (trailing) {
    case TrailTag::kNone:
      return "NONE";
    case TrailTag::kComma:
      return "COMMA";
    case TrailTag::kPeriod:
      return "PERIOD";
  }
  return "?";
}

std::vector<BaselineLabel> CanonicalLabels() {
  std::vector<BaselineLabel> labels;
  for (int k = 0; k < kNumBaselineLabels; ++k) {
    labels.push_back(BaselineLabel::FromIndex(k));
  }
  return labels;
}

std::string Affix(const std::vector<CodePoint> &chars, size_t len,
                  bool prefix) {
  len = std::min(len, chars.size());
  std::vector<CodePoint> part =
      prefix ? std::vector<CodePoint>(chars.begin(), chars.begin() + len)
             : std::vector<CodePoint>(chars.end() - len, chars.end());
  return EncodeUtf8(part);
}

struct TrainingSentence {
  std::vector<std::string> tokens;
  std::vector<BaselineLabel> labels;
};

// Weight cell with lazy averaging: `total` holds the sum of the weight over
// all completed sentences up to `stamp`.
struct Cell {
  int64_t weight = 0;
  int64_t total = 0;
  int64_t stamp = 0;
};

using CellRow = std::array<Cell, kNumBaselineLabels>;

int ArgMax(const std::array<int64_t, kNumBaselineLabels> &scores,
           const std::vector<BaselineLabel> &order) {
  int best = order.front().index();
  for (const BaselineLabel &label : order) {
    if (scores[label.index()] > scores[best]) best = label.index();
  }
  return best;
}

std::string FormatDouble(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Error Corrupt(const std::string &what) {
  return Error(ErrorCode::kParse, "corrupted model file: " + what);
}

std::vector<std::string_view> SplitOn(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

int64_t ParseInt(std::string_view text) {
  std::string s(text);
  char *end = nullptr;
  errno = 0;
  const long long value = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || errno != 0) {
    throw Corrupt("bad integer \"" + s + "\"");
  }
  return value;
}

double ParseDouble(std::string_view text) {
  std::string s(text);
  char *end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw Corrupt("bad number \"" + s + "\"");
  return value;
}

// Reads "<key> <value>" header lines.
std::string_view ExpectHeader(std::string_view line, std::string_view key) {
  if (line.size() <= key.size() || line.substr(0, key.size()) != key ||
      line[key.size()] != ' ') {
    throw Corrupt("expected \"" + std::string(key) + "\" header");
  }
  return line.substr(key.size() + 1);
}

}  // namespace

BaselineLabel BaselineLabel::FromIndex(int index) {
  return BaselineLabel{static_cast<CapTag>(index / 3),
                       static_cast<TrailTag>(index % 3)};
}

std::string BaselineLabel::name() const {
  return std::string(CapTagName(cap)) + "|" + TrailTagName(trailing);
}

std::optional<BaselineLabel> BaselineLabel::FromName(std::string_view name) {
  for (int k = 0; k < kNumBaselineLabels; ++k) {
    BaselineLabel label = FromIndex(k);
    if (label.name() == name) return label;
  }
  return std::nullopt;
}

BaselineLabel ReduceLabel(const TokenLabel &label) {
  BaselineLabel out;
  switch (label.cap.kind) {
    case CapKind::kInitial:
      out.cap = CapTag::kInitial;
      break;
    case CapKind::kAllCaps:
      out.cap = CapTag::kAllCaps;
      break;
    default:
      out.cap = CapTag::kLower;
      break;
  }
  for (const MarkInsert &insert : label.inserts) {
    if (insert.slot != Slot::kTrailing || insert.detached) continue;
    if (insert.mark == Mark::kComma) {
      out.trailing = TrailTag::kComma;
      break;
    }
    if (insert.mark == Mark::kPeriod) {
      out.trailing = TrailTag::kPeriod;
      break;
    }
  }
  return out;
}

TokenLabel ExpandLabel(BaselineLabel label) {
  TokenLabel out;
  switch (label.cap) {
    case CapTag::kLower:
      out.cap.kind = CapKind::kLower;
      break;
    case CapTag::kInitial:
      out.cap.kind = CapKind::kInitial;
      break;
    case CapTag::kAllCaps:
      out.cap.kind = CapKind::kAllCaps;
      break;
  }
  if (label.trailing != TrailTag::kNone) {
    MarkInsert insert;
    insert.slot = Slot::kTrailing;
    insert.mark =
        label.trailing == TrailTag::kComma ? Mark::kComma : Mark::kPeriod;
    out.inserts.push_back(insert);
  }
  return out;
}

std::vector<std::string> ExtractFeatures(const std::vector<std::string> &tokens,
                                         size_t i,
                                         std::optional<BaselineLabel> prev) {
  const size_t n = tokens.size();
  auto at = [&](long k) -> const std::string & {
    static const std::string start = kStart;
    static const std::string end = kEnd;
    if (k < 0) return start;
    if (k >= static_cast<long>(n)) return end;
    return tokens[k];
  };
  const long pos = static_cast<long>(i);
  const std::string &w = tokens[i];
  const std::string prev_name = prev ? prev->name() : kStart;
  const std::vector<CodePoint> chars = DecodeUtf8(w);

  std::vector<std::string> f;
  f.reserve(24);
  f.push_back("bias");
  f.push_back("w=" + w);
  for (size_t len = 1; len <= 3; ++len) {
    f.push_back("p" + std::to_string(len) + "=" + Affix(chars, len, true));
    f.push_back("s" + std::to_string(len) + "=" + Affix(chars, len, false));
  }
  if (i == 0) f.push_back("first=1");
  if (i + 1 == n) f.push_back("last=1");
  f.push_back("w-1=" + at(pos - 1));
  f.push_back("w+1=" + at(pos + 1));
  f.push_back("w-2=" + at(pos - 2));
  f.push_back("w+2=" + at(pos + 2));
  f.push_back("w-1+w=" + at(pos - 1) + " " + w);
  f.push_back("w+w+1=" + w + " " + at(pos + 1));
  f.push_back("s3+w+1=" + Affix(chars, 3, false) + " " + at(pos + 1));
  if (std::any_of(chars.begin(), chars.end(),
                  [](CodePoint c) { return c >= U'0' && c <= U'9'; })) {
    f.push_back("digit=1");
  }
  f.push_back("prev_lab=" + prev_name);
  f.push_back("prev_lab+w=" + prev_name + " " + w);
  return f;
}

BaselineModel::BaselineModel() : label_set_(CanonicalLabels()) {}

BaselineModel BaselineModel::Train(const std::vector<Pair> &pairs, int epochs,
                                   uint64_t seed) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kInsufficientData, "empty training set");
  }
  if (epochs < 0) {
    throw Error(ErrorCode::kInvalidArgument, "epochs must be non-negative");
  }

  BaselineModel model;
  model.meta_.epochs = epochs;
  model.meta_.seed = seed;

  std::vector<TrainingSentence> data;
  std::array<int64_t, kNumBaselineLabels> frequency{};
  for (const Pair &pair : pairs) {
    LabeledSequence seq;
    try {
      seq = DeriveLabels(pair);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kAlignment) throw;
      ++model.meta_.skipped;
      continue;
    }
    TrainingSentence sentence;
    sentence.tokens = std::move(seq.tokens);
    for (const TokenLabel &label : seq.labels) {
      sentence.labels.push_back(ReduceLabel(label));
      ++frequency[sentence.labels.back().index()];
    }
    if (!sentence.tokens.empty()) data.push_back(std::move(sentence));
  }
  if (data.empty()) {
    throw Error(ErrorCode::kInsufficientData,
                "no training pair has derivable labels");
  }

  // Most frequent label first, so an untrained model predicts the majority
  // class through the tie-break rule.
  std::stable_sort(model.label_set_.begin(), model.label_set_.end(),
                   [&](const BaselineLabel &a, const BaselineLabel &b) {
                     return frequency[a.index()] > frequency[b.index()];
                   });

  std::unordered_map<std::string, CellRow> cells;
  int64_t clock = 0;
  std::mt19937_64 rng(seed);
  std::vector<size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 0; epoch < epochs; ++epoch) {
    DeterministicShuffle(&order, &rng);
    for (size_t idx : order) {
      const TrainingSentence &sentence = data[idx];
      std::optional<BaselineLabel> prev;
      for (size_t i = 0; i < sentence.tokens.size(); ++i) {
        const std::vector<std::string> features =
            ExtractFeatures(sentence.tokens, i, prev);
        std::array<int64_t, kNumBaselineLabels> scores{};
        for (const std::string &key : features) {
          auto it = cells.find(key);
          if (it == cells.end()) continue;
          for (int k = 0; k < kNumBaselineLabels; ++k) {
            scores[k] += it->second[k].weight;
          }
        }
        const int guess = ArgMax(scores, model.label_set_);
        const int truth = sentence.labels[i].index();
        if (guess != truth) {
          for (const std::string &key : features) {
            CellRow &row = cells[key];
            for (int k : {truth, guess}) {
              Cell &cell = row[k];
              cell.total += cell.weight * (clock - cell.stamp);
              cell.stamp = clock;
              cell.weight += k == truth ? 1 : -1;
            }
          }
        }
        prev = BaselineLabel::FromIndex(guess);
      }
      ++clock;
    }
  }
  model.meta_.sentences = clock;

  for (auto &[key, row] : cells) {
    RawWeights raw{};
    AveragedWeights avg{};
    bool nonzero = false;
    for (int k = 0; k < kNumBaselineLabels; ++k) {
      Cell &cell = row[k];
      cell.total += cell.weight * (clock - cell.stamp);
      raw[k] = cell.weight;
      avg[k] = clock > 0 ? static_cast<double>(cell.total) /
                               static_cast<double>(clock)
                         : 0.0;
      nonzero = nonzero || raw[k] != 0 || avg[k] != 0.0;
    }
    if (!nonzero) continue;
    model.weights_.emplace(key, raw);
    model.averaged_.emplace(key, avg);
  }
  return model;
}

std::vector<BaselineLabel> BaselineModel::PredictLabels(
    const std::vector<std::string> &tokens) const {
  std::vector<BaselineLabel> out;
  out.reserve(tokens.size());
  std::optional<BaselineLabel> prev;
  for (size_t i = 0; i < tokens.size(); ++i) {
    AveragedWeights scores{};
    for (const std::string &key : ExtractFeatures(tokens, i, prev)) {
      auto it = averaged_.find(key);
      if (it == averaged_.end()) continue;
      for (int k = 0; k < kNumBaselineLabels; ++k) scores[k] += it->second[k];
    }
    BaselineLabel best = label_set_.front();
    for (const BaselineLabel &label : label_set_) {
      if (scores[label.index()] > scores[best.index()]) best = label;
    }
    out.push_back(best);
    prev = best;
  }
  return out;
}

LabeledSequence BaselineModel::Predict(std::string_view source) const {
  LabeledSequence seq;
  seq.tokens = Tokenize(Depunctuate(source));
  for (BaselineLabel label : PredictLabels(seq.tokens)) {
    seq.labels.push_back(ExpandLabel(label));
  }
  return seq;
}

std::string BaselineModel::Restore(std::string_view source) const {
  const LabeledSequence seq = Predict(source);
  return ApplyLabels(seq.tokens, seq.labels);
}

std::string BaselineModel::Serialize() const {
  std::ostringstream out;
  out << kMagic << ' ' << kModelFormatVersion << '\n';
  out << "feature-template " << meta_.feature_template << '\n';
  out << "epochs " << meta_.epochs << '\n';
  out << "seed " << meta_.seed << '\n';
  out << "sentences " << meta_.sentences << '\n';
  out << "skipped " << meta_.skipped << '\n';
  out << "labels";
  for (const BaselineLabel &label : label_set_) out << ' ' << label.name();
  out << '\n';

  std::vector<std::string> keys;
  keys.reserve(weights_.size());
  for (const auto &entry : weights_) keys.push_back(entry.first);
  std::sort(keys.begin(), keys.end());
  out << "features " << keys.size() << '\n';
  for (const std::string &key : keys) {
    const RawWeights &raw = weights_.at(key);
    const AveragedWeights &avg = averaged_.at(key);
    out << key << '\t';
    for (int k = 0; k < kNumBaselineLabels; ++k) {
      if (k > 0) out << ',';
      out << raw[k];
    }
    out << '\t';
    for (int k = 0; k < kNumBaselineLabels; ++k) {
      if (k > 0) out << ',';
      out << FormatDouble(avg[k]);
    }
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

BaselineModel BaselineModel::Deserialize(std::string_view text,
                                         int expected_template) {
  std::vector<std::string_view> lines = SplitOn(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  size_t next = 0;
  auto line = [&]() -> std::string_view {
    if (next >= lines.size()) throw Corrupt("unexpected end of file");
    return lines[next++];
  };

  const int64_t format = ParseInt(ExpectHeader(line(), kMagic));
  if (format != kModelFormatVersion) {
    throw Error(ErrorCode::kVersion,
                "model format version " + std::to_string(format) +
                    " is not supported (expected " +
                    std::to_string(kModelFormatVersion) + ")");
  }
  BaselineModel model;
  model.meta_.feature_template =
      static_cast<int>(ParseInt(ExpectHeader(line(), "feature-template")));
  if (model.meta_.feature_template != expected_template) {
    throw Error(ErrorCode::kVersion,
                "model uses feature template v" +
                    std::to_string(model.meta_.feature_template) +
                    " but this build extracts v" +
                    std::to_string(expected_template));
  }
  model.meta_.epochs = static_cast<int>(ParseInt(ExpectHeader(line(), "epochs")));
  {
    std::string seed(ExpectHeader(line(), "seed"));
    char *end = nullptr;
    errno = 0;
    model.meta_.seed = std::strtoull(seed.c_str(), &end, 10);
    if (seed.empty() || *end != '\0' || errno != 0) throw Corrupt("bad seed");
  }
  model.meta_.sentences = ParseInt(ExpectHeader(line(), "sentences"));
  model.meta_.skipped = ParseInt(ExpectHeader(line(), "skipped"));

  std::vector<std::string_view> names = SplitOn(ExpectHeader(line(), "labels"), ' ');
  if (names.size() != kNumBaselineLabels) throw Corrupt("label set size");
  model.label_set_.clear();
  std::array<bool, kNumBaselineLabels> seen{};
  for (std::string_view name : names) {
    auto label = BaselineLabel::FromName(name);
    if (!label || seen[label->index()]) {
      throw Corrupt("bad label \"" + std::string(name) + "\"");
    }
    seen[label->index()] = true;
    model.label_set_.push_back(*label);
  }

  const int64_t count = ParseInt(ExpectHeader(line(), "features"));
  if (count < 0) throw Corrupt("negative feature count");
  for (int64_t f = 0; f < count; ++f) {
    std::vector<std::string_view> fields = SplitOn(line(), '\t');
    if (fields.size() != 3) throw Corrupt("bad feature line");
    std::vector<std::string_view> raw_parts = SplitOn(fields[1], ',');
    std::vector<std::string_view> avg_parts = SplitOn(fields[2], ',');
    if (raw_parts.size() != kNumBaselineLabels ||
        avg_parts.size() != kNumBaselineLabels) {
      throw Corrupt("bad weight vector");
    }
    RawWeights raw{};
    AveragedWeights avg{};
    for (int k = 0; k < kNumBaselineLabels; ++k) {
      raw[k] = ParseInt(raw_parts[k]);
      avg[k] = ParseDouble(avg_parts[k]);
    }
    std::string key(fields[0]);
    if (!model.weights_.emplace(key, raw).second) {
      throw Corrupt("duplicate feature \"" + key + "\"");
    }
    model.averaged_.emplace(std::move(key), avg);
  }
  if (line() != "end") throw Corrupt("missing end marker");
  if (next != lines.size()) throw Corrupt("trailing data");
  return model;
}

void BaselineModel::Save(const std::string &path) const {
  WriteFileAtomically(path, Serialize());
}

BaselineModel BaselineModel::Load(const std::string &path) {
  return Deserialize(ReadFile(path));
}

}  // namespace punctkit
