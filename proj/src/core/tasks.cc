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

#include "core/tasks.h"

#include "core/status.h"
#include "core/unicode_text.h"

namespace punctkit {

namespace {

constexpr std::string_view kDocStart = "-DOCSTART-";

std::vector<std::string> SplitColumns(std::string_view line) {
  std::vector<std::string> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.emplace_back(line.substr(start, i - start));
  }
  return fields;
}

Error ParseError(const std::string &message) {
  return Error(ErrorCode::kParse, message);
}

std::vector<std::string> StringArray(const Json &value, const char *what) {
  if (!value.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json &item : value) {
    if (!item.is_string()) {
      throw ParseError(std::string(what) + " must contain strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

std::vector<std::string> ConllColumns(ConllSchema schema) {
  if (schema == ConllSchema::kConll03) return {"pos", "chunk", "ner"};
  return {"pos", "chunk"};
}

std::vector<TaskRecord> ParseConll(std::string_view text, ConllSchema schema,
                                   const std::string &source_name) {
  const std::vector<std::string> names = ConllColumns(schema);
  const size_t width = names.size() + 1;
  std::vector<TaskRecord> records;
  TaskRecord current;
  bool in_docstart = false;

  auto flush = [&] {
    if (!current.tokens.empty() && !in_docstart) {
      current.id = std::to_string(records.size());
      current.raw_text = Join(current.tokens, " ");
      records.push_back(std::move(current));
    }
    current = TaskRecord{};
    in_docstart = false;
  };

  int line_number = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::vector<std::string> fields = SplitColumns(line);
    if (fields.empty()) {
      flush();
      continue;
    }
    if (fields[0] == kDocStart) {
      flush();
      in_docstart = true;
      continue;
    }
    if (fields.size() != width) {
      throw ParseError(source_name + ":" + std::to_string(line_number) +
                       ": expected " + std::to_string(width) +
                       " columns, got " + std::to_string(fields.size()));
    }
    current.tokens.push_back(fields[0]);
    for (size_t c = 0; c < names.size(); ++c) {
      current.columns[names[c]].push_back(fields[c + 1]);
    }
  }
  flush();
  return records;
}

std::vector<TaskRecord> ReadConll(const std::string &path, ConllSchema schema) {
  return ParseConll(ReadFile(path), schema, path);
}

std::string SerializeConll(const std::vector<TaskRecord> &records,
                           ConllSchema schema) {
  const std::vector<std::string> names = ConllColumns(schema);
  std::string out;
  for (const TaskRecord &record : records) {
    for (size_t i = 0; i < record.tokens.size(); ++i) {
      out.append(record.tokens[i]);
      for (const std::string &name : names) {
        out.push_back(' ');
        out.append(record.columns.at(name).at(i));
      }
      out.push_back('\n');
    }
    out.push_back('\n');
  }
  return out;
}

BioSpans SpansFromBio(const std::vector<std::string> &tokens,
                      const std::vector<std::string> &tags) {
  if (tokens.size() != tags.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "token/tag length mismatch: " + std::to_string(tokens.size()) +
                    " vs " + std::to_string(tags.size()));
  }
  BioSpans out;
  int start = -1;
  std::string type;
  auto close = [&](int end) {
    if (start < 0) return;
    std::vector<std::string> words(tokens.begin() + start,
                                   tokens.begin() + end);
    out.spans.push_back(Span{Join(words, " "), type, std::make_pair(start, end)});
    start = -1;
  };

  for (size_t i = 0; i < tags.size(); ++i) {
    const std::string &tag = tags[i];
    const int pos = static_cast<int>(i);
    if (tag == "O") {
      close(pos);
      continue;
    }
    if (tag.size() < 3 || tag[1] != '-' || (tag[0] != 'B' && tag[0] != 'I')) {
      throw Error(ErrorCode::kInvalidArgument, "unknown BIO tag \"" + tag + "\"");
    }
    std::string tag_type = tag.substr(2);
    if (tag[0] == 'I' && start >= 0 && tag_type == type) continue;
    if (tag[0] == 'I') ++out.repairs;
    close(pos);
    start = pos;
    type = std::move(tag_type);
  }
  close(static_cast<int>(tags.size()));
  return out;
}

std::vector<Span> RecordSpans(const TaskRecord &record) {
  if (!record.spans.empty()) return record.spans;
  auto it = record.columns.find("ner");
  if (it == record.columns.end()) return {};
  return SpansFromBio(record.tokens, it->second).spans;
}

Json TaskRecordToJson(const TaskRecord &record) {
  Json obj{{"id", record.id}, {"tokens", record.tokens}};
  Json columns = Json::object();
  for (const auto &[name, values] : record.columns) columns[name] = values;
  obj["columns"] = std::move(columns);
  if (!record.spans.empty()) {
    Json spans = Json::array();
    for (const Span &span : record.spans) {
      Json item{{"surface", span.surface}, {"type", span.type}};
      if (span.range) {
        item["start"] = span.range->first;
        item["end"] = span.range->second;
      }
      spans.push_back(std::move(item));
    }
    obj["spans"] = std::move(spans);
  }
  if (!record.tuples.empty()) {
    Json tuples = Json::array();
    for (const Tuple &t : record.tuples) {
      tuples.push_back(Json::array({t.arg0, t.predicate, t.arg1}));
    }
    obj["tuples"] = std::move(tuples);
  }
  if (record.label) obj["label"] = *record.label;
  return obj;
}

TaskRecord TaskRecordFromJson(const Json &obj) {
  TaskRecord record;
  record.id = GetString(obj, "id");
  record.tokens = StringArray(GetField(obj, "tokens"), "\"tokens\"");
  if (obj.contains("columns")) {
    const Json &columns = obj["columns"];
    if (!columns.is_object()) throw ParseError("\"columns\" must be an object");
    for (auto it = columns.begin(); it != columns.end(); ++it) {
      std::vector<std::string> values = StringArray(it.value(), "column");
      if (values.size() != record.tokens.size()) {
        throw ParseError("column \"" + it.key() + "\" of record " + record.id +
                         " has " + std::to_string(values.size()) +
                         " entries for " + std::to_string(record.tokens.size()) +
                         " tokens");
      }
      record.columns[it.key()] = std::move(values);
    }
  }
  if (obj.contains("spans")) {
    for (const Json &item : obj["spans"]) {
      Span span{GetString(item, "surface"), GetString(item, "type"),
                std::nullopt};
      if (item.contains("start") && item.contains("end")) {
        span.range = std::make_pair(GetField(item, "start").get<int>(),
                                    GetField(item, "end").get<int>());
      }
      record.spans.push_back(std::move(span));
    }
  }
  if (obj.contains("tuples")) {
    for (const Json &item : obj["tuples"]) {
      std::vector<std::string> fields = StringArray(item, "tuple");
      if (fields.size() != 3) throw ParseError("tuples must have 3 fields");
      record.tuples.push_back(Tuple{fields[0], fields[1], fields[2]});
    }
  }
  if (obj.contains("label")) record.label = GetString(obj, "label");
  record.raw_text = Join(record.tokens, " ");
  return record;
}

std::vector<TaskRecord> ReadTaskRecords(const std::string &path) {
  std::vector<TaskRecord> records;
  ForEachJsonLine(path, [&](int, const Json &obj) {
    records.push_back(TaskRecordFromJson(obj));
  });
  return records;
}

}  // namespace punctkit
