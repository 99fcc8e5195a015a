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

// Downstream task records: CoNLL column readers, BIO span extraction and the
// task JSON-lines schema
//
//   {"id", "tokens": [...], "columns": {"pos": [...], ...},
//    "spans": [{"surface", "type", "start", "end"}],     (optional)
//    "tuples": [[arg0, predicate, arg1], ...],          (optional)
//    "label": "..."}                                    (optional)

#ifndef PUNCTKIT_CORE_TASKS_H_
#define PUNCTKIT_CORE_TASKS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/io.h"

namespace punctkit {

enum class ConllSchema { kConll03, kConll00 };

struct Span {
  std::string surface;
  std::string type;
  // Half-open token range, when known.
  std::optional<std::pair<int, int>> range;

  bool operator==(const Span &) const = default;
};

struct Tuple {
  std::string arg0;
  std::string predicate;
  std::string arg1;

  bool operator==(const Tuple &) const = default;
  auto operator<=>(const Tuple &) const = default;
};

struct TaskRecord {
  std::string id;
  std::vector<std::string> tokens;
  std::map<std::string, std::vector<std::string>> columns;
  std::string raw_text;
  std::vector<Span> spans;
  std::vector<Tuple> tuples;
  std::optional<std::string> label;

  bool operator==(const TaskRecord &) const = default;
};

// Column names for a schema, after the token column.
std::vector<std::string> ConllColumns(ConllSchema schema);

// Parses CoNLL column text. Sentences are separated by blank lines and
// -DOCSTART- sentences are dropped. Rows with the wrong number of columns
// throw Error(kParse) naming the line. Record ids are "0", "1", ...
std::vector<TaskRecord> ParseConll(std::string_view text, ConllSchema schema,
                                   const std::string &source_name = "<input>");
std::vector<TaskRecord> ReadConll(const std::string &path, ConllSchema schema);

// Inverse of ParseConll for content rows (no -DOCSTART- lines).
std::string SerializeConll(const std::vector<TaskRecord> &records,
                           ConllSchema schema);

struct BioSpans {
  std::vector<Span> spans;
  // I- tags that did not continue a span of the same type and were treated
  // as B- tags.
  int64_t repairs = 0;
};

// Maximal B-/I- runs of one type become spans. Tags other than O, B-X and
// I-X throw Error(kInvalidArgument).
BioSpans SpansFromBio(const std::vector<std::string> &tokens,
                      const std::vector<std::string> &tags);

// Spans of a record: the explicit "spans" field when present, otherwise
// BIO extraction over the "ner" column.
std::vector<Span> RecordSpans(const TaskRecord &record);

Json TaskRecordToJson(const TaskRecord &record);
TaskRecord TaskRecordFromJson(const Json &obj);
std::vector<TaskRecord> ReadTaskRecords(const std::string &path);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_TASKS_H_
