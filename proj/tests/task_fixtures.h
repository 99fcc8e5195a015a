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

// Hand-built scoring fixtures. Expected counts were worked out by hand and
// are shared by the unit tests and the acceptance suite.

#ifndef PUNCTKIT_TESTS_TASK_FIXTURES_H_
#define PUNCTKIT_TESTS_TASK_FIXTURES_H_

#include <ostream>
#include <string>
#include <vector>

#include "core/metrics.h"
#include "core/task_scorer.h"
#include "core/tasks.h"

namespace punctkit {

inline void PrintTo(const Span &s, std::ostream *os) {
  *os << "(" << s.surface << ": " << s.type << ")";
}

inline void PrintTo(const Tuple &t, std::ostream *os) {
  *os << "(" << t.arg0 << " | " << t.predicate << " | " << t.arg1 << ")";
}

}  // namespace punctkit

namespace punctkit::testing {

struct SpanFixture {
  const char *name;
  std::vector<Span> gold;
  std::vector<Span> pred;
  Counts expected;
};

inline Span S(const char *surface, const char *type) { return Span{surface, type, {}}; }

inline std::vector<SpanFixture> SpanFixtures() {
  return {
      {"identical", {S("Faker", "PER"), S("T1", "ORG")},
       {S("Faker", "PER"), S("T1", "ORG")}, {2, 0, 0}},
      {"one missing", {S("Faker", "PER"), S("T1", "ORG")}, {S("Faker", "PER")},
       {1, 0, 1}},
      {"duplicate prediction", {S("T1", "ORG")}, {S("T1", "ORG"), S("T1", "ORG")},
       {1, 1, 0}},
      {"duplicate gold", {S("T1", "ORG"), S("T1", "ORG")}, {S("T1", "ORG")},
       {1, 0, 1}},
      {"duplicates both sides", {S("A", "X"), S("A", "X")}, {S("A", "X"), S("A", "X")},
       {2, 0, 0}},
      {"type mismatch", {S("Faker", "PER")}, {S("Faker", "ORG")}, {0, 1, 1}},
      {"whitespace trimmed", {S("Faker", "PER")}, {S(" Faker ", "PER ")}, {1, 0, 0}},
      {"both empty", {}, {}, {0, 0, 0}},
      {"empty prediction", {S("a", "X"), S("b", "X"), S("c", "Y")}, {}, {0, 0, 3}},
      {"empty gold", {}, {S("a", "X"), S("b", "X")}, {0, 2, 0}},
      {"case sensitive", {S("Faker", "PER")}, {S("faker", "PER")}, {0, 1, 1}},
      {"mixed", {S("A", "PER"), S("B", "ORG"), S("C", "LOC")},
       {S("A", "PER"), S("B", "PER"), S("C", "LOC"), S("D", "MISC")}, {2, 2, 1}},
  };
}

struct TupleFixture {
  const char *name;
  std::vector<Tuple> gold;
  std::vector<Tuple> pred;
  Counts expected;
};

inline std::vector<TupleFixture> TupleFixtures() {
  const Tuple t1{"Faker", "is", "a League of Legends esports player"};
  const Tuple t2{"Faker", "is mid laner and part owner at", "T1"};
  return {
      {"identical", {t1, t2}, {t1, t2}, {2, 0, 0}},
      {"predicate differs", {t1}, {Tuple{"Faker", "was", t1.arg1}}, {0, 1, 1}},
      {"duplicate prediction", {t1}, {t1, t1}, {1, 1, 0}},
      {"arguments swapped", {Tuple{"a", "p", "b"}}, {Tuple{"b", "p", "a"}}, {0, 1, 1}},
      {"whitespace trimmed", {t2}, {Tuple{" Faker", "is mid laner and part owner at ", "T1 "}},
       {1, 0, 0}},
      {"both empty", {}, {}, {0, 0, 0}},
      {"one missing", {t1, t2}, {t2}, {1, 0, 1}},
      {"one extra", {t1, t2}, {t1, t2, Tuple{"T1", "is", "a team"}}, {2, 1, 0}},
      {"gold duplicate, pred triplicate", {t1, t1}, {t1, t1, t1}, {2, 1, 0}},
      {"comma inside predicate", {Tuple{"a", "is, mostly", "b"}},
       {Tuple{"a", "is, mostly", "b"}}, {1, 0, 0}},
      {"all wrong", {t1, t2}, {Tuple{"x", "y", "z"}, Tuple{"u", "v", "w"}}, {0, 2, 2}},
  };
}

struct TagFixture {
  const char *name;
  TagScheme scheme;
  std::vector<std::vector<std::string>> gold;
  std::vector<std::vector<std::string>> pred;
  Counts expected;
  int64_t diagnostics;
};

inline std::vector<TagFixture> TagFixtures() {
  using V = std::vector<std::vector<std::string>>;
  const TagScheme A = TagScheme::kAccuracy;
  const TagScheme B = TagScheme::kBio;
  return {
      {"pos identical", A, V{{"NNP", "VBZ", "DT", "NN"}}, V{{"NNP", "VBZ", "DT", "NN"}},
       {4, 0, 0}, 0},
      {"pos truncated by two", A, V{{"A", "B", "C", "D", "E"}}, V{{"A", "B", "C"}},
       {3, 0, 2}, 0},
      {"pos one mismatch", A, V{{"A", "B", "C", "D"}}, V{{"A", "X", "C", "D"}},
       {3, 1, 1}, 0},
      {"pos surplus", A, V{{"A", "B", "C"}}, V{{"A", "B", "C", "D"}}, {3, 1, 0}, 0},
      {"pos empty prediction", A, V{{"A", "B", "C"}}, V{{}}, {0, 0, 3}, 0},
      {"pos two sentences", A, V{{"A", "B"}, {"C"}}, V{{"A", "X"}, {"C"}}, {2, 1, 1}, 0},
      {"chunk identical", B, V{{"B-NP", "I-NP", "O", "B-VP"}},
       V{{"B-NP", "I-NP", "O", "B-VP"}}, {2, 0, 0}, 0},
      // gold NP[0,3) VP[4,5) NP[5,6); pred NP[0,2) NP[2,3) VP[4,5) NP[5,6)
      {"chunk boundary error", B, V{{"B-NP", "I-NP", "I-NP", "O", "B-VP", "B-NP"}},
       V{{"B-NP", "I-NP", "B-NP", "O", "B-VP", "B-NP"}}, {2, 2, 1}, 0},
      {"chunk type error", B, V{{"B-NP", "I-NP"}}, V{{"B-VP", "I-VP"}}, {0, 1, 1}, 0},
      {"chunk invalid tag", B, V{{"B-NP"}}, V{{"XYZ"}}, {0, 0, 1}, 1},
      {"chunk lenient repair", B, V{{"O", "B-NP", "I-NP"}}, V{{"O", "I-NP", "I-NP"}},
       {1, 0, 0}, 1},
      {"chunk truncated", B, V{{"B-NP", "I-NP", "B-VP"}}, V{{"B-NP", "I-NP"}},
       {1, 0, 1}, 0},
  };
}

struct BoundaryFixture {
  const char *name;
  std::string gold;
  std::string pred;
  Counts expected;
};

inline std::vector<BoundaryFixture> BoundaryFixtures() {
  return {
      {"identical", "a b\nc d", "a b\nc d", {1, 0, 0}},
      {"merged sentences", "a b\nc d\ne f", "a b c d\ne f", {1, 0, 1}},
      {"split sentence", "a b c d", "a b\nc d", {0, 1, 0}},
      {"single sentence", "a b c", "a b c", {0, 0, 0}},
      {"case and marks ignored", "A b.\nC d.", "a b\nc d", {1, 0, 0}},
      {"dropped token", "a b\nc d", "a\nc d", {0, 1, 1}},
      {"inserted token at break", "a b\nc", "a b x\nc", {0, 1, 1}},
      {"three sentences", "a\nb\nc", "a\nb\nc", {2, 0, 0}},
      {"blank lines ignored", "a\n\nb", "a\nb\n", {1, 0, 0}},
      {"empty prediction", "a\nb", "", {0, 0, 1}},
      {"both empty", "", "", {0, 0, 0}},
  };
}

struct LabelFixture {
  const char *name;
  std::vector<std::string> gold;
  std::vector<std::string> pred;
  std::string negative;
  Counts expected;
};

inline std::vector<LabelFixture> LabelFixtures() {
  const std::string nr = "no_relation";
  return {
      {"all correct", {"a", "b"}, {"a", "b"}, nr, {2, 0, 0}},
      {"negative excluded", {"rel_a", nr}, {"rel_a", "rel_a"}, nr, {1, 1, 0}},
      {"all predicted negative", {"a", "b"}, {nr, nr}, nr, {0, 0, 2}},
      {"wrong positive", {"a"}, {"b"}, nr, {0, 1, 1}},
      {"both negative", {nr, nr}, {nr, nr}, nr, {0, 0, 0}},
      {"false alarm", {nr}, {"a"}, nr, {0, 1, 0}},
      {"custom negative", {"NA", "x"}, {nr, "x"}, "NA", {1, 1, 0}},
      {"mixed", {"a", "b", nr, nr, "c"}, {"a", nr, "b", nr, "d"}, nr, {1, 2, 2}},
      {"empty", {}, {}, nr, {0, 0, 0}},
      {"repeated labels", {"a", "a", "a"}, {"a", "a", "b"}, nr, {2, 1, 1}},
  };
}

}  // namespace punctkit::testing

#endif  // PUNCTKIT_TESTS_TASK_FIXTURES_H_
