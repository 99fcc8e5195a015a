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

// Token-level restoration labels.
//
// Every source token carries a capitalization class and a list of mark
// insertions. A mark sits in one of three slots relative to the token's
// characters:
//
//   LEADING            before the first character
//   INTERIOR(offset)   before character `offset` (1 <= offset < length)
//   TRAILING           after the last character
//
// Marks sharing a slot are ordered by `rank` (0, 1, ...). Target tokens that
// consist of marks only are folded into a neighbour: onto the previous
// token's TRAILING slot, or the next token's LEADING slot at the start of a
// sequence. Such marks are flagged `detached`, meaning the original had a
// space between them and the token (before a trailing mark, after a leading
// one). With these rules DeriveLabels and ApplyLabels are exact inverses.

#ifndef PUNCTKIT_CORE_LABELS_H_
#define PUNCTKIT_CORE_LABELS_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.h"

namespace punctkit {

enum class Mark : uint8_t { kComma, kPeriod, kSingleQuote, kDoubleQuote };

enum class CapKind : uint8_t { kLower, kInitial, kAllCaps, kOther };

struct CapClass {
  CapKind kind = CapKind::kLower;
  // Only used for kOther: one entry per source-token code point, true where
  // the target character is uppercase.
  std::vector<bool> mask;

  auto operator<=>(const CapClass &) const = default;
};

enum class Slot : uint8_t { kLeading, kInterior, kTrailing };

struct MarkInsert {
  Slot slot = Slot::kTrailing;
  int offset = 0;  // only meaningful for kInterior
  int rank = 0;
  Mark mark = Mark::kPeriod;
  bool detached = false;

  auto operator<=>(const MarkInsert &) const = default;
};

struct TokenLabel {
  CapClass cap;
  std::vector<MarkInsert> inserts;

  bool operator==(const TokenLabel &) const = default;
};

struct LabeledSequence {
  std::string pair_id;
  std::vector<std::string> tokens;
  std::vector<TokenLabel> labels;

  bool operator==(const LabeledSequence &) const = default;
};

enum class OpKind : uint8_t { kCap, kInsert };

// One atomic restoration decision; the scoring unit.
struct RestorationOp {
  int token_index = 0;
  OpKind kind = OpKind::kCap;
  CapClass cap;        // kCap only
  MarkInsert insert;   // kInsert only

  auto operator<=>(const RestorationOp &) const = default;
};

std::optional<Mark> MarkFromChar(char32_t c);
char MarkChar(Mark mark);
const char *MarkName(Mark mark);
std::optional<Mark> MarkFromName(std::string_view name);
const char *CapKindName(CapKind kind);
std::optional<CapKind> CapKindFromName(std::string_view name);
const char *SlotName(Slot slot);
std::optional<Slot> SlotFromName(std::string_view name);

std::vector<std::string> Tokenize(std::string_view text);

// Labels for one target token against its stripped, lowercased form. The
// returned label has no detached marks.
TokenLabel DeriveTokenLabel(std::string_view target_token);

// Applies a label to one source token.
std::string ApplyTokenLabel(std::string_view token, const TokenLabel &label);

// Throws Error(kAlignment) when the stripped target tokens differ from the
// source tokens, or when the result would not reproduce the target exactly
// (whitespace other than single spaces, or casing that has no inverse).
LabeledSequence DeriveLabels(const Pair &pair);

// Labels read off arbitrary restored text, e.g. model output. Tokens are the
// stripped forms of the text's tokens. Never fails and does not check that
// the text is reproducible.
LabeledSequence LabelsFromText(std::string_view text);

// Throws Error(kInvalidArgument) on a length mismatch or an out-of-range
// interior offset.
std::string ApplyLabels(const std::vector<std::string> &tokens,
                        const std::vector<TokenLabel> &labels);

// One CAP op per token whose class is not LOWER plus one INSERT op per mark.
std::vector<RestorationOp> LabelsToOps(const LabeledSequence &seq);

// Inverse of LabelsToOps for a known token stream.
std::vector<TokenLabel> OpsToLabels(const std::vector<RestorationOp> &ops,
                                    size_t token_count);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_LABELS_H_
