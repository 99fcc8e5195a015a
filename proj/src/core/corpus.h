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

// Construction of the punctuation restoration corpus. Raw documents are cut
// into fixed word-count excerpts; each excerpt becomes a (source, target)
// pair where the target is the punctuation-normalized excerpt and the source
// is the same text with the four restorable marks removed and lowercased.

#ifndef PUNCTKIT_CORE_CORPUS_H_
#define PUNCTKIT_CORE_CORPUS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace punctkit {

inline constexpr int kDefaultExcerptLimit = 150;

struct Document {
  std::string id;
  std::string text;
};

struct Excerpt {
  std::string id;
  std::string target;
  int word_count = 0;
};

struct Pair {
  std::string id;
  std::string source;
  std::string target;

  bool operator==(const Pair &) const = default;
};

struct CorpusSplits {
  std::vector<Pair> train;
  std::vector<Pair> dev;
  std::vector<Pair> test;
  uint64_t seed = 0;
};

struct BuildResult {
  std::vector<Pair> pairs;
  int64_t excerpts = 0;
  // Excerpts whose source came out empty (e.g. punctuation-only text).
  int64_t dropped = 0;
};

// True for the four restorable marks: comma, period, apostrophe and double
// quote (ASCII forms only; run NormalizePunctuation first).
bool IsRestorableMark(char32_t c);

// Maps typographic quote variants onto ASCII ' and ", and the horizontal
// ellipsis onto "...". Every other byte is copied through unchanged.
std::string NormalizePunctuation(std::string_view text);

// Non-overlapping excerpts of at most `limit` whitespace tokens each. The
// excerpt target is its tokens joined by single spaces.
std::vector<Excerpt> SplitExcerpts(const Document &doc,
                                   int limit = kDefaultExcerptLimit);

// Removes every restorable mark, lowercases, drops tokens that become empty
// and joins the remaining tokens with single spaces.
std::string Depunctuate(std::string_view target);

// Lowercased, mark-free form of a single whitespace token.
std::string StripToken(std::string_view token);

BuildResult BuildPairs(const std::vector<Document> &docs,
                       int limit = kDefaultExcerptLimit);

// Seeded shuffle, then the first dev_n pairs go to dev, the next test_n to
// test and the rest to train. Requires more pairs than dev_n + test_n.
CorpusSplits Partition(std::vector<Pair> pairs, int64_t dev_n, int64_t test_n,
                       uint64_t seed);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_CORPUS_H_
