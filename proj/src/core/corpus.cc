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

#include "core/corpus.h"

#include <random>
#include <set>
#include <utility>

#include "core/parallel.h"
#include "core/random.h"
#include "core/status.h"
#include "core/unicode_text.h"

namespace punctkit {

namespace {

struct Replacement {
  std::string_view from;
  std::string_view to;
};

// UTF-8 encodings of the normalized code points.
constexpr Replacement kNormalization[] = {
    {"‘", "'"},  {"’", "'"},  {"ʼ", "'"},
    {"“", "\""}, {"”", "\""}, {"«", "\""},
    {"»", "\""}, {"…", "..."},
};

}  // namespace

bool IsRestorableMark(char32_t c) {
  return c == U',' || c == U'.' || c == U'\'' || c == U'"';
}

std::string NormalizePunctuation(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    bool replaced = false;
    // All sources are multi-byte sequences starting with a non-ASCII lead.
    if (static_cast<unsigned char>(text[i]) >= 0x80) {
      for (const auto &r : kNormalization) {
        if (text.compare(i, r.from.size(), r.from) == 0) {
          out.append(r.to);
          i += r.from.size();
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) out.push_back(text[i++]);
  }
  return out;
}

std::vector<Excerpt> SplitExcerpts(const Document &doc, int limit) {
  if (limit < 1) {
    throw Error(ErrorCode::kInvalidArgument, "excerpt limit must be >= 1");
  }
  const std::vector<std::string> tokens = SplitWhitespace(doc.text);
  std::vector<Excerpt> excerpts;
  for (size_t start = 0; start < tokens.size(); start += limit) {
    const size_t end = std::min(tokens.size(), start + limit);
    std::vector<std::string> part(tokens.begin() + start, tokens.begin() + end);
    Excerpt excerpt;
    excerpt.id = doc.id + "-" + std::to_string(excerpts.size());
    excerpt.target = Join(part, " ");
    excerpt.word_count = static_cast<int>(part.size());
    excerpts.push_back(std::move(excerpt));
  }
  return excerpts;
}

std::string StripToken(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (CodePoint c : DecodeUtf8(token)) {
    if (IsRestorableMark(c)) continue;
    AppendUtf8(ToLower(c), &out);
  }
  return out;
}

std::string Depunctuate(std::string_view target) {
  std::string out;
  out.reserve(target.size());
  for (const std::string &token : SplitWhitespace(target)) {
    std::string stripped = StripToken(token);
    if (stripped.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(stripped);
  }
  return out;
}

BuildResult BuildPairs(const std::vector<Document> &docs, int limit) {
  std::set<std::string_view> seen;
  for (const Document &doc : docs) {
    if (!seen.insert(doc.id).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate document id: " + doc.id);
    }
  }

  std::vector<std::vector<Pair>> per_doc(docs.size());
  std::vector<int64_t> dropped(docs.size(), 0);
  std::vector<int64_t> excerpt_counts(docs.size(), 0);
  ParallelFor(docs.size(), [&](size_t d) {
    for (Excerpt &excerpt : SplitExcerpts(docs[d], limit)) {
      ++excerpt_counts[d];
      Pair pair;
      pair.id = std::move(excerpt.id);
      pair.target = NormalizePunctuation(excerpt.target);
      pair.source = Depunctuate(pair.target);
      if (pair.source.empty()) {
        ++dropped[d];
        continue;
      }
      per_doc[d].push_back(std::move(pair));
    }
  });

  BuildResult result;
  for (size_t d = 0; d < docs.size(); ++d) {
    result.excerpts += excerpt_counts[d];
    result.dropped += dropped[d];
    for (Pair &pair : per_doc[d]) result.pairs.push_back(std::move(pair));
  }
  return result;
}

CorpusSplits Partition(std::vector<Pair> pairs, int64_t dev_n, int64_t test_n,
                       uint64_t seed) {
  if (dev_n < 0 || test_n < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "dev and test sizes must be non-negative");
  }
  if (static_cast<int64_t>(pairs.size()) <= dev_n + test_n) {
    throw Error(ErrorCode::kInsufficientData,
                "need more than " + std::to_string(dev_n + test_n) +
                    " pairs to partition, got " +
                    std::to_string(pairs.size()));
  }
  std::set<std::string_view> ids;
  for (const Pair &pair : pairs) {
    if (!ids.insert(pair.id).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate pair id: " + pair.id);
    }
  }

  std::mt19937_64 rng(seed);
  DeterministicShuffle(&pairs, &rng);

  CorpusSplits splits;
  splits.seed = seed;
  auto dev_end = pairs.begin() + dev_n;
  auto test_end = dev_end + test_n;
  splits.dev.assign(std::make_move_iterator(pairs.begin()),
                    std::make_move_iterator(dev_end));
  splits.test.assign(std::make_move_iterator(dev_end),
                     std::make_move_iterator(test_end));
  splits.train.assign(std::make_move_iterator(test_end),
                      std::make_move_iterator(pairs.end()));
  return splits;
}

}  // namespace punctkit
