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

// Averaged-perceptron restorer.
//
// Each source token receives one of nine joint labels (capitalization x
// trailing mark) from a greedy left-to-right tagger over sparse string
// features. Quotes and interior marks are never predicted.
//
// Model file format (text, one record per line):
//
//   punctkit-baseline-model <format version>
//   feature-template <template version>
//   epochs <n>
//   seed <n>
//   sentences <n>            training sentences seen, summed over epochs
//   skipped <n>              pairs skipped because labels were not derivable
//   labels <name> x 9        label-set order, used for tie-breaking
//   features <n>
//   <key> TAB <9 raw weights, comma-separated> TAB <9 averaged weights>
//   ...
//   end
//
// Feature lines are sorted by key, averaged weights are printed with 17
// significant digits, and weights are indexed by canonical label index
// (LOWER|NONE, LOWER|COMMA, ..., ALL_CAPS|PERIOD).

#ifndef PUNCTKIT_CORE_BASELINE_H_
#define PUNCTKIT_CORE_BASELINE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/corpus.h"
#include "core/labels.h"

namespace punctkit {

inline constexpr int kModelFormatVersion = 1;
inline constexpr int kFeatureTemplateVersion = 1;
inline constexpr int kNumBaselineLabels = 9;

enum class CapTag : uint8_t { kLower, kInitial, kAllCaps };
enum class TrailTag : uint8_t { kNone, kComma, kPeriod };

struct BaselineLabel {
  CapTag cap = CapTag::kLower;
  TrailTag trailing = TrailTag::kNone;

  int index() const {
    return static_cast<int>(cap) * 3 + static_cast<int>(trailing);
  }
  static BaselineLabel FromIndex(int index);
  std::string name() const;
  static std::optional<BaselineLabel> FromName(std::string_view name);

  bool operator==(const BaselineLabel &) const = default;
};

// Projects a full token label onto the baseline label space. OTHER casing
// maps to LOWER; the trailing mark is the first attached COMMA or PERIOD.
BaselineLabel ReduceLabel(const TokenLabel &label);
TokenLabel ExpandLabel(BaselineLabel label);

// Feature keys for token i given the previously predicted label (nullopt at
// the start of a sentence).
std::vector<std::string> ExtractFeatures(const std::vector<std::string> &tokens,
                                         size_t i,
                                         std::optional<BaselineLabel> prev);

struct TrainMeta {
  int epochs = 0;
  uint64_t seed = 0;
  int feature_template = kFeatureTemplateVersion;
  int64_t sentences = 0;
  int64_t skipped = 0;

  bool operator==(const TrainMeta &) const = default;
};

using RawWeights = std::array<int64_t, kNumBaselineLabels>;
using AveragedWeights = std::array<double, kNumBaselineLabels>;

class BaselineModel {
 public:
  // Zero model with the canonical label order.
  BaselineModel();

  // Throws Error(kInsufficientData) when `pairs` is empty or no pair yields
  // derivable labels. Training is single-threaded and fully determined by
  // (pairs, epochs, seed).
  static BaselineModel Train(const std::vector<Pair> &pairs, int epochs,
                             uint64_t seed);

  std::vector<BaselineLabel> PredictLabels(
      const std::vector<std::string> &tokens) const;

  // The source is canonicalized with Depunctuate before tagging.
  LabeledSequence Predict(std::string_view source) const;
  std::string Restore(std::string_view source) const;

  std::string Serialize() const;
  static BaselineModel Deserialize(
      std::string_view text, int expected_template = kFeatureTemplateVersion);
  void Save(const std::string &path) const;
  static BaselineModel Load(const std::string &path);

  const std::vector<BaselineLabel> &label_set() const { return label_set_; }
  const TrainMeta &meta() const { return meta_; }
  const std::unordered_map<std::string, RawWeights> &weights() const {
    return weights_;
  }
  const std::unordered_map<std::string, AveragedWeights> &averaged() const {
    return averaged_;
  }

  bool operator==(const BaselineModel &) const = default;

 private:
  std::vector<BaselineLabel> label_set_;
  std::unordered_map<std::string, RawWeights> weights_;
  std::unordered_map<std::string, AveragedWeights> averaged_;
  TrainMeta meta_;
};

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_BASELINE_H_
