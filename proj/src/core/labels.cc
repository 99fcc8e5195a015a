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

#include "core/labels.h"

#include <algorithm>
#include <utility>

#include "core/status.h"
#include "core/unicode_text.h"

namespace punctkit {

namespace {

CapClass DeriveCap(const std::vector<CodePoint> &core) {
  const size_t n = core.size();
  std::vector<bool> upper(n);
  size_t upper_count = 0;
  bool all_caps = true;
  for (size_t i = 0; i < n; ++i) {
    const CodePoint lower = ToLower(core[i]);
    upper[i] = core[i] != lower;
    if (upper[i]) ++upper_count;
    if (upper[i] != HasUpperForm(lower)) all_caps = false;
  }
  CapClass cap;
  if (upper_count == 0) {
    cap.kind = CapKind::kLower;
  } else if (upper[0] && upper_count == 1) {
    cap.kind = CapKind::kInitial;
  } else if (all_caps) {
    cap.kind = CapKind::kAllCaps;
  } else {
    cap.kind = CapKind::kOther;
    cap.mask = std::move(upper);
  }
  return cap;
}

// Marks of a target token split by the gap (number of core characters seen)
// they occur in.
struct TokenParts {
  std::vector<CodePoint> core;
  std::vector<std::pair<size_t, Mark>> marks;
};

TokenParts SplitToken(std::string_view token) {
  TokenParts parts;
  for (CodePoint c : DecodeUtf8(token)) {
    if (auto mark = MarkFromChar(c)) {
      parts.marks.emplace_back(parts.core.size(), *mark);
    } else {
      parts.core.push_back(c);
    }
  }
  return parts;
}

int NextRank(const TokenLabel &label, Slot slot) {
  int rank = 0;
  for (const MarkInsert &insert : label.inserts) {
    if (insert.slot == slot) rank = std::max(rank, insert.rank + 1);
  }
  return rank;
}

LabeledSequence DeriveFromText(std::string_view text) {
  LabeledSequence seq;
  // Marks of punctuation-only tokens seen before the first real token.
  std::vector<MarkInsert> pending_leading;

  for (const std::string &raw : SplitWhitespace(text)) {
    TokenParts parts = SplitToken(raw);
    if (parts.core.empty()) {
      if (seq.labels.empty()) {
        for (size_t k = 0; k < parts.marks.size(); ++k) {
          MarkInsert insert;
          insert.slot = Slot::kLeading;
          insert.mark = parts.marks[k].second;
          insert.detached = k + 1 == parts.marks.size();
          pending_leading.push_back(insert);
        }
      } else {
        TokenLabel &prev = seq.labels.back();
        int rank = NextRank(prev, Slot::kTrailing);
        for (size_t k = 0; k < parts.marks.size(); ++k) {
          MarkInsert insert;
          insert.slot = Slot::kTrailing;
          insert.rank = rank++;
          insert.mark = parts.marks[k].second;
          insert.detached = k == 0;
          prev.inserts.push_back(insert);
        }
      }
      continue;
    }

    TokenLabel label = DeriveTokenLabel(raw);
    if (seq.labels.empty() && !pending_leading.empty()) {
      const int shift = static_cast<int>(pending_leading.size());
      for (MarkInsert &insert : label.inserts) {
        if (insert.slot == Slot::kLeading) insert.rank += shift;
      }
      for (size_t k = 0; k < pending_leading.size(); ++k) {
        pending_leading[k].rank = static_cast<int>(k);
        label.inserts.push_back(pending_leading[k]);
      }
      std::sort(label.inserts.begin(), label.inserts.end());
      pending_leading.clear();
    }
    std::vector<CodePoint> lowered;
    lowered.reserve(parts.core.size());
    for (CodePoint c : parts.core) lowered.push_back(ToLower(c));
    seq.tokens.push_back(EncodeUtf8(lowered));
    seq.labels.push_back(std::move(label));
  }
  return seq;
}

}  // namespace

std::optional<Mark> MarkFromChar(char32_t c) {
  switch (c) {
    case U',':
      return Mark::kComma;
    case U'.':
      return Mark::kPeriod;
    case U'\'':
      return Mark::kSingleQuote;
    case U'"':
      return Mark::kDoubleQuote;
    default:
      return std::nullopt;
  }
}

char MarkChar(Mark mark) {
  switch (mark) {
    case Mark::kComma:
      return ',';
    case Mark::kPeriod:
      return '.';
    case Mark::kSingleQuote:
      return '\'';
    case Mark::kDoubleQuote:
      return '"';
  }
  return '?';
}

const char *MarkName(Mark mark) {
  switch (mark) {
    case Mark::kComma:
      return "COMMA";
    case Mark::kPeriod:
      return "PERIOD";
    case Mark::kSingleQuote:
      return "SQUOTE";
    case Mark::kDoubleQuote:
      return "DQUOTE";
  }
  return "?";
}

std::optional<Mark> MarkFromName(std::string_view name) {
  for (Mark m : {Mark::kComma, Mark::kPeriod, Mark::kSingleQuote,
                 Mark::kDoubleQuote}) {
    if (name == MarkName(m)) return m;
  }
  return std::nullopt;
}

const char *CapKindName(CapKind kind) {
  switch (kind) {
    case CapKind::kLower:
      return "LOWER";
    case CapKind::kInitial:
      return "INITIAL";
    case CapKind::kAllCaps:
      return "ALL_CAPS";
    case CapKind::kOther:
      return "OTHER";
  }
  return "?";
}

std::optional<CapKind> CapKindFromName(std::string_view name) {
  for (CapKind k : {CapKind::kLower, CapKind::kInitial, CapKind::kAllCaps,
                    CapKind::kOther}) {
    if (name == CapKindName(k)) return k;
  }
  return std::nullopt;
}

const char *SlotName(Slot slot) {
  switch (slot) {
    case Slot::kLeading:
      return "LEADING";
    case Slot::kInterior:
      return "INTERIOR";
    case Slot::kTrailing:
      return "TRAILING";
  }
  return "?";
}

std::optional<Slot> SlotFromName(std::string_view name) {
  for (Slot s : {Slot::kLeading, Slot::kInterior, Slot::kTrailing}) {
    if (name == SlotName(s)) return s;
  }
  return std::nullopt;
}

std::vector<std::string> Tokenize(std::string_view text) {
  return SplitWhitespace(text);
}

TokenLabel DeriveTokenLabel(std::string_view target_token) {
  TokenParts parts = SplitToken(target_token);
  TokenLabel label;
  label.cap = DeriveCap(parts.core);
  const size_t n = parts.core.size();
  size_t last_gap = SIZE_MAX;
  int rank = 0;
  for (const auto &[gap, mark] : parts.marks) {
    rank = gap == last_gap ? rank + 1 : 0;
    last_gap = gap;
    MarkInsert insert;
    insert.mark = mark;
    insert.rank = rank;
    if (gap == 0) {
      insert.slot = Slot::kLeading;
    } else if (gap == n) {
      insert.slot = Slot::kTrailing;
    } else {
      insert.slot = Slot::kInterior;
      insert.offset = static_cast<int>(gap);
    }
    label.inserts.push_back(insert);
  }
  return label;
}

std::string ApplyTokenLabel(std::string_view token, const TokenLabel &label) {
  std::vector<CodePoint> chars = DecodeUtf8(token);
  const size_t n = chars.size();
  switch (label.cap.kind) {
    case CapKind::kLower:
      break;
    case CapKind::kInitial:
      if (n > 0) chars[0] = ToUpper(chars[0]);
      break;
    case CapKind::kAllCaps:
      for (CodePoint &c : chars) c = ToUpper(c);
      break;
    case CapKind::kOther:
      if (label.cap.mask.size() != n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "capitalization mask length " +
                        std::to_string(label.cap.mask.size()) +
                        " does not match token length " + std::to_string(n));
      }
      for (size_t i = 0; i < n; ++i) {
        if (label.cap.mask[i]) chars[i] = ToUpper(chars[i]);
      }
      break;
  }

  std::vector<MarkInsert> inserts = label.inserts;
  std::sort(inserts.begin(), inserts.end());
  std::string out;
  auto it = inserts.begin();
  for (; it != inserts.end() && it->slot == Slot::kLeading; ++it) {
    out.push_back(MarkChar(it->mark));
    if (it->detached) out.push_back(' ');
  }
  for (size_t i = 0; i < n; ++i) {
    for (; it != inserts.end() && it->slot == Slot::kInterior &&
           it->offset <= static_cast<int>(i);
         ++it) {
      if (it->offset < 1) break;
      out.push_back(MarkChar(it->mark));
    }
    AppendUtf8(chars[i], &out);
  }
  if (it != inserts.end() && it->slot == Slot::kInterior) {
    throw Error(ErrorCode::kInvalidArgument,
                "interior offset " + std::to_string(it->offset) +
                    " out of range for token of length " + std::to_string(n));
  }
  for (; it != inserts.end(); ++it) {
    if (it->detached) out.push_back(' ');
    out.push_back(MarkChar(it->mark));
  }
  return out;
}

LabeledSequence DeriveLabels(const Pair &pair) {
  LabeledSequence seq = DeriveFromText(pair.target);
  seq.pair_id = pair.id;
  if (seq.tokens != Tokenize(pair.source)) {
    throw Error(ErrorCode::kAlignment,
                "pair " + pair.id +
                    ": stripped target tokens do not match the source");
  }
  if (ApplyLabels(seq.tokens, seq.labels) != pair.target) {
    throw Error(ErrorCode::kAlignment,
                "pair " + pair.id +
                    ": target cannot be reproduced from labels (irregular "
                    "whitespace or irreversible casing)");
  }
  return seq;
}

LabeledSequence LabelsFromText(std::string_view text) {
  return DeriveFromText(text);
}

std::string ApplyLabels(const std::vector<std::string> &tokens,
                        const std::vector<TokenLabel> &labels) {
  if (tokens.size() != labels.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "token/label length mismatch: " +
                    std::to_string(tokens.size()) + " tokens, " +
                    std::to_string(labels.size()) + " labels");
  }
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.append(ApplyTokenLabel(tokens[i], labels[i]));
  }
  return out;
}

std::vector<RestorationOp> LabelsToOps(const LabeledSequence &seq) {
  std::vector<RestorationOp> ops;
  for (size_t i = 0; i < seq.labels.size(); ++i) {
    const TokenLabel &label = seq.labels[i];
    if (label.cap.kind != CapKind::kLower) {
      RestorationOp op;
      op.token_index = static_cast<int>(i);
      op.kind = OpKind::kCap;
      op.cap = label.cap;
      ops.push_back(std::move(op));
    }
    for (const MarkInsert &insert : label.inserts) {
      RestorationOp op;
      op.token_index = static_cast<int>(i);
      op.kind = OpKind::kInsert;
      op.insert = insert;
      ops.push_back(std::move(op));
    }
  }
  std::sort(ops.begin(), ops.end());
  ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
  return ops;
}

std::vector<TokenLabel> OpsToLabels(const std::vector<RestorationOp> &ops,
                                    size_t token_count) {
  std::vector<TokenLabel> labels(token_count);
  for (const RestorationOp &op : ops) {
    if (op.token_index < 0 ||
        static_cast<size_t>(op.token_index) >= token_count) {
      throw Error(ErrorCode::kInvalidArgument,
                  "op token index " + std::to_string(op.token_index) +
                      " out of range");
    }
    TokenLabel &label = labels[op.token_index];
    if (op.kind == OpKind::kCap) {
      label.cap = op.cap;
    } else {
      label.inserts.push_back(op.insert);
    }
  }
  for (TokenLabel &label : labels) {
    std::sort(label.inserts.begin(), label.inserts.end());
  }
  return labels;
}

}  // namespace punctkit
