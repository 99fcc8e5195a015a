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

#include "core/unicode_text.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace punctkit {

namespace {

constexpr CodePoint kReplacement = 0xFFFD;

}  // namespace

std::vector<CodePoint> DecodeUtf8(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto *bytes = reinterpret_cast<const uint8_t *>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c < 0 ? kReplacement : static_cast<CodePoint>(c));
  }
  return out;
}

void AppendUtf8(CodePoint c, std::string *out) {
  if (c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) c = kReplacement;
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  U8_APPEND_UNSAFE(buf, n, static_cast<UChar32>(c));
  out->append(reinterpret_cast<const char *>(buf), n);
}

std::string EncodeUtf8(const std::vector<CodePoint> &chars) {
  std::string out;
  out.reserve(chars.size());
  for (CodePoint c : chars) AppendUtf8(c, &out);
  return out;
}

CodePoint ToLower(CodePoint c) {
  return static_cast<CodePoint>(u_tolower(static_cast<UChar32>(c)));
}

CodePoint ToUpper(CodePoint c) {
  const CodePoint upper =
      static_cast<CodePoint>(u_toupper(static_cast<UChar32>(c)));
  if (upper == c || ToLower(upper) != c) return c;
  return upper;
}

bool HasUpperForm(CodePoint c) { return ToUpper(c) != c; }

bool IsWhitespace(CodePoint c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

std::string Lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (CodePoint c : DecodeUtf8(text)) AppendUtf8(ToLower(c), &out);
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> tokens;
  const auto *bytes = reinterpret_cast<const uint8_t *>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  int32_t start = -1;
  while (i < length) {
    const int32_t begin = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    const bool space = c >= 0 && IsWhitespace(static_cast<CodePoint>(c));
    if (space) {
      if (start >= 0) {
        tokens.emplace_back(text.substr(start, begin - start));
        start = -1;
      }
    } else if (start < 0) {
      start = begin;
    }
  }
  if (start >= 0) tokens.emplace_back(text.substr(start));
  return tokens;
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

}  // namespace punctkit
