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

// Scorers for structure tasks. All return tp/fp/fn counts with the same
// zero-denominator convention as restoration scoring; dataset scores are
// obtained by summing per-instance counts.

#ifndef PUNCTKIT_CORE_TASK_SCORER_H_
#define PUNCTKIT_CORE_TASK_SCORER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/metrics.h"
#include "core/tasks.h"

namespace punctkit {

inline constexpr const char *kDefaultNegativeLabel = "no_relation";

// Multiset matching on (surface, type) after whitespace trimming.
Counts ScoreSpans(const std::vector<Span> &gold, const std::vector<Span> &pred);

// Multiset matching on (arg0, predicate, arg1) after whitespace trimming.
Counts ScoreTuples(const std::vector<Tuple> &gold,
                   const std::vector<Tuple> &pred);

enum class TagScheme {
  // Position-wise accuracy (POS). Mismatches count as both fp and fn;
  // missing positions are fn and surplus positions fp.
  kAccuracy,
  // BIO chunks on both sides, matched by (type, start, end).
  kBio,
};

std::optional<TagScheme> TagSchemeFromName(std::string_view name);

struct TagScore {
  Counts counts;
  // Predicted tags that are not valid BIO (scored as O) plus BIO repairs.
  int64_t diagnostics = 0;
};

TagScore ScoreTagSequence(const std::vector<std::string> &gold,
                          const std::vector<std::string> &pred,
                          TagScheme scheme);

// Throws Error(kInvalidArgument) when the sentence counts differ.
TagScore ScoreTags(const std::vector<std::vector<std::string>> &gold,
                   const std::vector<std::vector<std::string>> &pred,
                   TagScheme scheme);

// Text with one sentence per line. A boundary is the index of a token after
// which a sentence ends; the end of the text is not counted. Differing token
// streams are aligned like restoration hypotheses, and boundaries on tokens
// without an identical partner are errors.
Counts ScoreBoundaries(std::string_view gold_text, std::string_view pred_text);

// Micro-F1 over per-instance labels that ignores the negative label for
// true positives. Throws Error(kInvalidArgument) on a length mismatch.
Counts ScoreLabels(const std::vector<std::string> &gold,
                   const std::vector<std::string> &pred,
                   std::string_view negative = kDefaultNegativeLabel);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_TASK_SCORER_H_
