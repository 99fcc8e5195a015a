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

// JSON-lines record schemas.
//
//   documents    {"id", "text"}
//   pairs        {"id", "source", "target"}
//   labels       {"id", "tokens": [...], "labels": [{"cap", "mask",
//                 "inserts": [{"slot", "offset", "rank", "mark"}]}]}
//   hypotheses   {"id", "restored"}
//
// An insert may also carry "detached": true for marks that were separated
// from their token by a space; the key is omitted otherwise.

#ifndef PUNCTKIT_CORE_FORMATS_H_
#define PUNCTKIT_CORE_FORMATS_H_

#include <string>
#include <vector>

#include "core/corpus.h"
#include "core/io.h"
#include "core/labels.h"

namespace punctkit {

Json DocumentToJson(const Document &doc);
Document DocumentFromJson(const Json &obj);

Json PairToJson(const Pair &pair);
Pair PairFromJson(const Json &obj);

Json LabeledSequenceToJson(const LabeledSequence &seq);
LabeledSequence LabeledSequenceFromJson(const Json &obj);

std::string CapMaskString(const CapClass &cap);

std::vector<Document> ReadDocuments(const std::string &path);
std::vector<Pair> ReadPairs(const std::string &path);
std::vector<LabeledSequence> ReadLabeledSequences(const std::string &path);

void WritePairs(const std::string &path, const std::vector<Pair> &pairs);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_FORMATS_H_
