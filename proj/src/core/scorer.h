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

// Operation-level scoring of restored text.
//
// Gold and predicted restorations are both reduced to RestorationOp sets.
// Predicted ops live on hypothesis tokens, so the hypothesis is first aligned
// to the source: a 1:1 map when its stripped tokens equal the source tokens,
// otherwise a minimum edit alignment. Ops on hypothesis tokens that do not
// align to an identical source token are always false positives, and gold
// ops on source tokens without an identical partner are false negatives.

#ifndef PUNCTKIT_CORE_SCORER_H_
#define PUNCTKIT_CORE_SCORER_H_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core/labels.h"
#include "core/metrics.h"

namespace punctkit {

inline constexpr int kNoToken = -1;

struct AlignmentLink {
  int source = 0;
  int hyp = kNoToken;
  // True when the linked tokens are identical; false for a substitution.
  bool same = false;

  bool operator==(const AlignmentLink &) const = default;
};

struct AlignmentOutcome {
  // One link per source token, in source order.
  std::vector<AlignmentLink> links;
  // Hypothesis tokens not linked to any source token.
  std::vector<int> unmatched_hyp;
  bool exact = false;

  // Number of insertions, deletions and substitutions.
  int EditCost() const;
};

// Minimum edit alignment (match 0, substitution/insertion/deletion 1). Among
// alignments of equal cost the one with the most identical pairs is chosen;
// remaining ties prefer substitution, then deletion, then insertion.
AlignmentOutcome AlignTokens(const std::vector<std::string> &source,
                             const std::vector<std::string> &hyp);

// Aligns a restored hypothesis to its source through the stripped,
// lowercased forms of the hypothesis tokens.
AlignmentOutcome AlignHypothesis(std::string_view source,
                                 std::string_view hypothesis);

enum class OpCategory : uint8_t { kCap, kComma, kPeriod, kSingleQuote, kDoubleQuote };
inline constexpr size_t kNumOpCategories = 5;

OpCategory CategoryOf(const RestorationOp &op);
const char *CategoryName(OpCategory category);

struct RestorationScore {
  Counts total;
  std::array<Counts, kNumOpCategories> per_category{};

  RestorationScore &operator+=(const RestorationScore &other);
  bool operator==(const RestorationScore &) const = default;
  const Counts &category(OpCategory c) const {
    return per_category[static_cast<size_t>(c)];
  }
};

// `gold` is indexed by source tokens and `pred` by hypothesis tokens.
RestorationScore ScoreRestoration(const std::vector<RestorationOp> &gold,
                                  const std::vector<RestorationOp> &pred,
                                  const AlignmentOutcome &alignment);

// A hypothesis is either restored free text or a label sequence.
using Hypothesis = std::variant<std::string, LabeledSequence>;

// Scores one gold sequence against one hypothesis.
RestorationScore ScorePair(const LabeledSequence &gold, const Hypothesis &hyp,
                           bool *exact = nullptr);

struct CorpusScore {
  RestorationScore score;
  int64_t pairs = 0;
  // Gold ids without a hypothesis; all their gold ops count as misses.
  int64_t missing = 0;
  // Hypothesis ids absent from the gold set; ignored.
  int64_t unknown = 0;
  // Pairs scored through an inexact (edit) alignment.
  int64_t inexact = 0;
};

// Micro-average: counts are summed over all pairs before any ratio.
CorpusScore ScoreCorpus(const std::vector<LabeledSequence> &golds,
                        const std::map<std::string, Hypothesis> &hyps);

Json RestorationScoreToJson(const RestorationScore &score);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_SCORER_H_
