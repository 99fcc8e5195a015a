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

#include "core/task_scorer.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "core/corpus.h"
#include "core/scorer.h"
#include "core/status.h"
#include "core/unicode_text.h"

namespace punctkit {

namespace {

std::string Trimmed(const std::string &s) {
  const size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename Key>
Counts MultisetMatch(const std::vector<Key> &gold, const std::vector<Key> &pred) {
  std::map<Key, int64_t> remaining;
  for (const Key &k : gold) ++remaining[k];
  Counts counts;
  for (const Key &k : pred) {
    auto it = remaining.find(k);
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      ++counts.tp;
    } else {
      ++counts.fp;
    }
  }
  counts.fn = static_cast<int64_t>(gold.size()) - counts.tp;
  return counts;
}

using SpanKey = std::pair<std::string, std::string>;

std::vector<SpanKey> SpanKeys(const std::vector<Span> &spans) {
  std::vector<SpanKey> keys;
  for (const Span &s : spans) keys.emplace_back(Trimmed(s.surface), Trimmed(s.type));
  return keys;
}

using TupleKey = std::tuple<std::string, std::string, std::string>;

std::vector<TupleKey> TupleKeys(const std::vector<Tuple> &tuples) {
  std::vector<TupleKey> keys;
  for (const Tuple &t : tuples) {
    keys.emplace_back(Trimmed(t.arg0), Trimmed(t.predicate), Trimmed(t.arg1));
  }
  return keys;
}

bool IsBioTag(const std::string &tag) {
  if (tag == "O") return true;
  return tag.size() >= 3 && tag[1] == '-' && (tag[0] == 'B' || tag[0] == 'I');
}

using ChunkKey = std::tuple<std::string, int, int>;

std::vector<ChunkKey> Chunks(const std::vector<std::string> &tags,
                             int64_t *diagnostics) {
  std::vector<std::string> clean;
  for (const std::string &tag : tags) {
    if (IsBioTag(tag)) {
      clean.push_back(tag);
    } else {
      clean.push_back("O");
      if (diagnostics) ++*diagnostics;
    }
  }
  std::vector<std::string> positions(clean.size());
  for (size_t i = 0; i < positions.size(); ++i) positions[i] = std::to_string(i);
  BioSpans bio = SpansFromBio(positions, clean);
  if (diagnostics) *diagnostics += bio.repairs;
  std::vector<ChunkKey> keys;
  for (const Span &s : bio.spans) {
    keys.emplace_back(s.type, s.range->first, s.range->second);
  }
  return keys;
}

// Sentence-final token indices, excluding the last token of the text.
std::set<int> Boundaries(std::string_view text, std::vector<std::string> *tokens) {
  std::set<int> breaks;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::vector<std::string> line = Tokenize(text.substr(pos, end - pos));
    if (!line.empty()) {
      for (const std::string &t : line) tokens->push_back(StripToken(t));
      breaks.insert(static_cast<int>(tokens->size()) - 1);
    }
    pos = end + 1;
  }
  if (!tokens->empty()) breaks.erase(static_cast<int>(tokens->size()) - 1);
  return breaks;
}

}  // namespace

Counts ScoreSpans(const std::vector<Span> &gold, const std::vector<Span> &pred) {
  return MultisetMatch(SpanKeys(gold), SpanKeys(pred));
}

Counts ScoreTuples(const std::vector<Tuple> &gold,
                   const std::vector<Tuple> &pred) {
  return MultisetMatch(TupleKeys(gold), TupleKeys(pred));
}

std::optional<TagScheme> TagSchemeFromName(std::string_view name) {
  if (name == "accuracy" || name == "pos") return TagScheme::kAccuracy;
  if (name == "bio" || name == "chunk") return TagScheme::kBio;
  return std::nullopt;
}

TagScore ScoreTagSequence(const std::vector<std::string> &gold,
                          const std::vector<std::string> &pred,
                          TagScheme scheme) {
  TagScore score;
  if (scheme == TagScheme::kAccuracy) {
    const size_t overlap = std::min(gold.size(), pred.size());
    for (size_t i = 0; i < overlap; ++i) {
      if (gold[i] == pred[i]) {
        ++score.counts.tp;
      } else {
        ++score.counts.fp;
        ++score.counts.fn;
      }
    }
    score.counts.fn += static_cast<int64_t>(gold.size() - overlap);
    score.counts.fp += static_cast<int64_t>(pred.size() - overlap);
    return score;
  }
  // Gold tags are trusted; repairs on the gold side are not diagnostics.
  const std::vector<ChunkKey> gold_chunks = Chunks(gold, nullptr);
  const std::vector<ChunkKey> pred_chunks = Chunks(pred, &score.diagnostics);
  score.counts = MultisetMatch(gold_chunks, pred_chunks);
  return score;
}

TagScore ScoreTags(const std::vector<std::vector<std::string>> &gold,
                   const std::vector<std::vector<std::string>> &pred,
                   TagScheme scheme) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sentence count mismatch: " + std::to_string(gold.size()) +
                    " gold vs " + std::to_string(pred.size()) + " predicted");
  }
  TagScore total;
  for (size_t s = 0; s < gold.size(); ++s) {
    TagScore one = ScoreTagSequence(gold[s], pred[s], scheme);
    total.counts += one.counts;
    total.diagnostics += one.diagnostics;
  }
  return total;
}

Counts ScoreBoundaries(std::string_view gold_text, std::string_view pred_text) {
  std::vector<std::string> gold_tokens;
  std::vector<std::string> pred_tokens;
  const std::set<int> gold = Boundaries(gold_text, &gold_tokens);
  const std::set<int> pred = Boundaries(pred_text, &pred_tokens);
  const AlignmentOutcome alignment = AlignTokens(gold_tokens, pred_tokens);

  std::map<int, int> pred_to_gold;
  for (const AlignmentLink &link : alignment.links) {
    if (link.same) pred_to_gold[link.hyp] = link.source;
  }
  Counts counts;
  std::set<int> mapped;
  for (int b : pred) {
    auto it = pred_to_gold.find(b);
    if (it == pred_to_gold.end()) {
      ++counts.fp;
    } else {
      mapped.insert(it->second);
    }
  }
  for (int b : mapped) {
    if (gold.count(b)) {
      ++counts.tp;
    } else {
      ++counts.fp;
    }
  }
  for (int b : gold) {
    if (!mapped.count(b)) ++counts.fn;
  }
  return counts;
}

Counts ScoreLabels(const std::vector<std::string> &gold,
                   const std::vector<std::string> &pred,
                   std::string_view negative) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "label count mismatch: " + std::to_string(gold.size()) +
                    " gold vs " + std::to_string(pred.size()) + " predicted");
  }
  Counts counts;
  for (size_t i = 0; i < gold.size(); ++i) {
    const bool gold_pos = gold[i] != negative;
    const bool pred_pos = pred[i] != negative;
    if (gold_pos && pred[i] == gold[i]) {
      ++counts.tp;
      continue;
    }
    if (pred_pos) ++counts.fp;
    if (gold_pos) ++counts.fn;
  }
  return counts;
}

}  // namespace punctkit
