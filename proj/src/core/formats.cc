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

#include "core/formats.h"

#include <algorithm>

#include "core/status.h"

namespace punctkit {

namespace {

Error ParseError(const std::string &message) {
  return Error(ErrorCode::kParse, message);
}

int GetInt(const Json &obj, const char *key) {
  const Json &value = GetField(obj, key);
  if (!value.is_number_integer()) {
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  }
  return value.get<int>();
}

}  // namespace

Json DocumentToJson(const Document &doc) {
  return Json{{"id", doc.id}, {"text", doc.text}};
}

Document DocumentFromJson(const Json &obj) {
  return Document{GetString(obj, "id"), GetString(obj, "text")};
}

Json PairToJson(const Pair &pair) {
  return Json{{"id", pair.id}, {"source", pair.source}, {"target", pair.target}};
}

Pair PairFromJson(const Json &obj) {
  return Pair{GetString(obj, "id"), GetString(obj, "source"),
              GetString(obj, "target")};
}

std::string CapMaskString(const CapClass &cap) {
  std::string mask;
  for (bool bit : cap.mask) mask.push_back(bit ? '1' : '0');
  return mask;
}

Json LabeledSequenceToJson(const LabeledSequence &seq) {
  Json labels = Json::array();
  for (const TokenLabel &label : seq.labels) {
    Json inserts = Json::array();
    for (const MarkInsert &insert : label.inserts) {
      Json item{{"slot", SlotName(insert.slot)},
                {"offset", insert.offset},
                {"rank", insert.rank},
                {"mark", MarkName(insert.mark)}};
      if (insert.detached) item["detached"] = true;
      inserts.push_back(std::move(item));
    }
    labels.push_back(Json{{"cap", CapKindName(label.cap.kind)},
                          {"mask", CapMaskString(label.cap)},
                          {"inserts", std::move(inserts)}});
  }
  return Json{{"id", seq.pair_id}, {"tokens", seq.tokens}, {"labels", labels}};
}

LabeledSequence LabeledSequenceFromJson(const Json &obj) {
  LabeledSequence seq;
  seq.pair_id = GetString(obj, "id");
  const Json &tokens = GetField(obj, "tokens");
  if (!tokens.is_array()) throw ParseError("\"tokens\" must be an array");
  for (const Json &token : tokens) {
    if (!token.is_string()) throw ParseError("tokens must be strings");
    seq.tokens.push_back(token.get<std::string>());
  }
  const Json &labels = GetField(obj, "labels");
  if (!labels.is_array()) throw ParseError("\"labels\" must be an array");
  for (const Json &item : labels) {
    TokenLabel label;
    const std::string cap = GetString(item, "cap");
    auto kind = CapKindFromName(cap);
    if (!kind) throw ParseError("unknown cap class \"" + cap + "\"");
    label.cap.kind = *kind;
    const std::string mask = item.contains("mask") ? GetString(item, "mask") : "";
    if (*kind == CapKind::kOther) {
      for (char bit : mask) {
        if (bit != '0' && bit != '1') throw ParseError("mask must be 0/1");
        label.cap.mask.push_back(bit == '1');
      }
    }
    const Json &inserts = GetField(item, "inserts");
    if (!inserts.is_array()) throw ParseError("\"inserts\" must be an array");
    for (const Json &ins : inserts) {
      MarkInsert insert;
      const std::string slot = GetString(ins, "slot");
      auto slot_value = SlotFromName(slot);
      if (!slot_value) throw ParseError("unknown slot \"" + slot + "\"");
      insert.slot = *slot_value;
      insert.offset = ins.contains("offset") ? GetInt(ins, "offset") : 0;
      if (insert.slot != Slot::kInterior) insert.offset = 0;
      insert.rank = ins.contains("rank") ? GetInt(ins, "rank") : 0;
      const std::string mark = GetString(ins, "mark");
      auto mark_value = MarkFromName(mark);
      if (!mark_value) throw ParseError("unknown mark \"" + mark + "\"");
      insert.mark = *mark_value;
      if (ins.contains("detached")) {
        const Json &d = ins["detached"];
        if (!d.is_boolean()) throw ParseError("\"detached\" must be a boolean");
        insert.detached = d.get<bool>();
      }
      label.inserts.push_back(insert);
    }
    std::sort(label.inserts.begin(), label.inserts.end());
    seq.labels.push_back(std::move(label));
  }
  if (seq.labels.size() != seq.tokens.size()) {
    throw ParseError("sequence " + seq.pair_id +
                     ": tokens and labels differ in length");
  }
  return seq;
}

std::vector<Document> ReadDocuments(const std::string &path) {
  std::vector<Document> docs;
  ForEachJsonLine(path, [&](int, const Json &obj) {
    docs.push_back(DocumentFromJson(obj));
  });
  return docs;
}

std::vector<Pair> ReadPairs(const std::string &path) {
  std::vector<Pair> pairs;
  ForEachJsonLine(path,
                  [&](int, const Json &obj) { pairs.push_back(PairFromJson(obj)); });
  return pairs;
}

std::vector<LabeledSequence> ReadLabeledSequences(const std::string &path) {
  std::vector<LabeledSequence> seqs;
  ForEachJsonLine(path, [&](int, const Json &obj) {
    seqs.push_back(LabeledSequenceFromJson(obj));
  });
  return seqs;
}

void WritePairs(const std::string &path, const std::vector<Pair> &pairs) {
  AtomicFileWriter writer(path);
  for (const Pair &pair : pairs) writer.WriteJsonLine(PairToJson(pair));
  writer.Commit();
}

}  // namespace punctkit
