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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "core/labels.h"
#include "core/status.h"
#include "core/unicode_text.h"
#include "test_util.h"

namespace punctkit {
namespace {

std::string Words(int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i > 0) out.push_back(' ');
    out += "w" + std::to_string(i);
  }
  return out;
}

std::vector<Pair> MakePairs(int n) {
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i) {
    pairs.push_back(Pair{"p" + std::to_string(i), "x" + std::to_string(i),
                         "X" + std::to_string(i) + "."});
  }
  return pairs;
}

TEST(NormalizePunctuationTest, Examples) {
  EXPECT_EQ(NormalizePunctuation("“Faker”"), "\"Faker\"");
  EXPECT_EQ(NormalizePunctuation("don’t"), "don't");
  EXPECT_EQ(NormalizePunctuation("abc"), "abc");
  EXPECT_EQ(NormalizePunctuation("‘aʼ «b» wait…"),
            "'a' \"b\" wait...");
}

TEST(NormalizePunctuationTest, Idempotent) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> pieces = {"a", "’", "“", "…",
                                           "»", " ", "\xE2\x80", "\xFF"};
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (int k = 0; k < 10; ++k) s += pieces[rng() % pieces.size()];
    const std::string once = NormalizePunctuation(s);
    EXPECT_EQ(NormalizePunctuation(once), once);
  }
}

TEST(SplitExcerptsTest, Partitioning) {
  const std::vector<Excerpt> ex = SplitExcerpts(Document{"d", Words(437)}, 150);
  ASSERT_EQ(ex.size(), 3u);
  EXPECT_EQ(ex[0].word_count, 150);
  EXPECT_EQ(ex[1].word_count, 150);
  EXPECT_EQ(ex[2].word_count, 137);
  EXPECT_EQ(ex[0].id, "d-0");
  EXPECT_EQ(ex[2].id, "d-2");
  EXPECT_EQ(SplitExcerpts(Document{"d", Words(150)}, 150).size(), 1u);
  EXPECT_TRUE(SplitExcerpts(Document{"d", ""}, 150).empty());
  EXPECT_THROW(SplitExcerpts(Document{"d", "a"}, 0), Error);
}

TEST(SplitExcerptsTest, TokenConservation) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng() % 400);
    const int limit = 1 + static_cast<int>(rng() % 60);
    const std::string text = Words(n);
    std::vector<std::string> joined;
    for (const Excerpt &e : SplitExcerpts(Document{"d", text}, limit)) {
      EXPECT_GE(e.word_count, 1);
      EXPECT_LE(e.word_count, limit);
      EXPECT_EQ(static_cast<int>(Tokenize(e.target).size()), e.word_count);
      for (std::string &t : Tokenize(e.target)) joined.push_back(std::move(t));
    }
    EXPECT_EQ(joined, Tokenize(text));
  }
}

TEST(DepunctuateTest, Examples) {
  EXPECT_EQ(Depunctuate("Lee \"Faker\" Sang-hyeok (Hangul: 이상혁) is a League of "
                        "Legends esports player, currently mid laner and part "
                        "owner at T1."),
            "lee faker sang-hyeok (hangul: 이상혁) is a league of legends esports "
            "player currently mid laner and part owner at t1");
  EXPECT_EQ(Depunctuate("hello"), "hello");
  EXPECT_EQ(Depunctuate("He said, \"Don't.\""), "he said dont");
  EXPECT_EQ(Depunctuate("a , b"), "a b");
  EXPECT_EQ(Depunctuate("  ...  "), "");
  EXPECT_EQ(Depunctuate("ÉCOLE Straße ΣΟΦΙΑ"), "école straße σοφια");
}

TEST(DepunctuateTest, FuzzCharacterSetAndIdempotence) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 10000; ++i) {
    std::string s;
    const int len = static_cast<int>(rng() % 24);
    for (int k = 0; k < len; ++k) {
      const int pick = static_cast<int>(rng() % 10);
      if (pick < 3) {
        s.push_back(" ,.'\"\t"[rng() % 6]);
      } else if (pick < 5) {
        s.push_back(static_cast<char>(rng() % 256));  // may be invalid UTF-8
      } else {
        char32_t c = static_cast<char32_t>(rng() % 0x3000);
        if (c >= 0xD800 && c <= 0xDFFF) c = 'x';
        testing::PutUtf8(c, &s);
      }
    }
    const std::string out = Depunctuate(s);
    EXPECT_EQ(Depunctuate(out), out);
    for (CodePoint c : DecodeUtf8(out)) {
      ASSERT_FALSE(c == ',' || c == '.' || c == '\'' || c == '"');
      ASSERT_EQ(ToLower(c), c);
    }
    EXPECT_EQ(out, Join(Tokenize(out), " "));
  }
}

TEST(BuildPairsTest, Basics) {
  BuildResult r = BuildPairs({Document{"a", "Hello, World."},
                              Document{"b", "“Quote” here."}},
                             150);
  ASSERT_EQ(r.pairs.size(), 2u);
  EXPECT_EQ(r.pairs[0], (Pair{"a-0", "hello world", "Hello, World."}));
  EXPECT_EQ(r.pairs[1].target, "\"Quote\" here.");
  EXPECT_EQ(r.pairs[1].source, "quote here");

  r = BuildPairs({Document{"dots", "..."}}, 150);
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_EQ(r.dropped, 1);

  EXPECT_THROW(BuildPairs({Document{"a", "x"}, Document{"a", "y"}}, 150), Error);
}

TEST(BuildPairsTest, PairInvariantHolds) {
  testing::TargetGenerator gen(31);
  std::vector<Document> docs;
  for (int i = 0; i < 200; ++i) docs.push_back(Document{std::to_string(i), gen.Next()});
  for (const Pair &p : BuildPairs(docs, 5).pairs) {
    EXPECT_EQ(Depunctuate(p.target), p.source);
    EXPECT_FALSE(p.source.empty());
  }
}

TEST(PartitionTest, SizesAndDeterminism) {
  const CorpusSplits a = Partition(MakePairs(10), 2, 3, 77);
  EXPECT_EQ(a.dev.size(), 2u);
  EXPECT_EQ(a.test.size(), 3u);
  EXPECT_EQ(a.train.size(), 5u);
  const CorpusSplits b = Partition(MakePairs(10), 2, 3, 77);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.dev, b.dev);
  EXPECT_EQ(a.test, b.test);
  std::set<std::string> ids;
  for (const auto *split : {&a.train, &a.dev, &a.test}) {
    for (const Pair &p : *split) ids.insert(p.id);
  }
  EXPECT_EQ(ids.size(), 10u);
  const CorpusSplits c = Partition(MakePairs(10), 2, 3, 78);
  EXPECT_FALSE(a.train == c.train && a.dev == c.dev);
}

TEST(PartitionTest, InsufficientPairs) {
  try {
    Partition(MakePairs(5), 3, 3, 1);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientData);
  }
  EXPECT_THROW(Partition(MakePairs(6), 3, 3, 1), Error);
  EXPECT_NO_THROW(Partition(MakePairs(7), 3, 3, 1));
}

TEST(PartitionTest, LargeSplitArithmetic) {
  std::vector<Pair> pairs(437031);
  for (size_t i = 0; i < pairs.size(); ++i) pairs[i].id = std::to_string(i);
  const CorpusSplits s = Partition(std::move(pairs), 1000, 1000, 1);
  EXPECT_EQ(s.train.size(), 435031u);
}

}  // namespace
}  // namespace punctkit
