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

// Text-to-text output formats for structure tasks.
//
//   NER        (Faker: PER) (T1: ORG)
//   OpenIE     (Faker, is, a League of Legends esports player)
//   Multitask  entity groups interleaved with the tuples they head
//
// Delinearization is total: it never throws on model output and reports
// everything it could not parse as diagnostics.

#ifndef PUNCTKIT_CORE_LINEARIZE_H_
#define PUNCTKIT_CORE_LINEARIZE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/tasks.h"

namespace punctkit {

enum class OutputKind { kNer, kOpenIe, kMultitask };

const char *OutputKindName(OutputKind kind);
std::optional<OutputKind> OutputKindFromName(std::string_view name);

std::string LinearizeNer(const std::vector<Span> &spans);
std::string LinearizeOpenIe(const std::vector<Tuple> &tuples);

// Each entity group, in order, is followed by the not yet emitted tuples
// whose arg0 equals its surface; tuples headed by no entity come last.
std::string LinearizeMultitask(const std::vector<Span> &spans,
                               const std::vector<Tuple> &tuples);

std::string LinearizeTags(const std::vector<std::string> &tags);

struct Delinearized {
  std::vector<Span> spans;
  std::vector<Tuple> tuples;
  std::vector<std::string> diagnostics;
};

// Scans top-level parenthesized groups left to right. A group with a
// top-level ": " is an entity (split at the last one); a group with at least
// two top-level ", " separators is a tuple whose first and last fields are
// the arguments and whose middle fields, re-joined with ", ", form the
// predicate. NER accepts only entities, OPENIE only tuples.
Delinearized Delinearize(std::string_view output, OutputKind kind);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_LINEARIZE_H_
