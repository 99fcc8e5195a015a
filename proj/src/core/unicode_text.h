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

// UTF-8 helpers shared by the corpus, label and task modules. Case mapping
// and whitespace classification are delegated to ICU so that non-Latin
// scripts behave the same way as ASCII.

#ifndef PUNCTKIT_CORE_UNICODE_TEXT_H_
#define PUNCTKIT_CORE_UNICODE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace punctkit {

using CodePoint = char32_t;

// Decodes UTF-8. Ill-formed sequences decode to U+FFFD, so this never fails.
std::vector<CodePoint> DecodeUtf8(std::string_view text);

void AppendUtf8(CodePoint c, std::string *out);
std::string EncodeUtf8(const std::vector<CodePoint> &chars);

// Simple (1:1) Unicode lowercase mapping.
CodePoint ToLower(CodePoint c);

// Uppercase mapping restricted to characters that lowercase back to
// themselves. Characters such as dotless i, whose uppercase form lowercases
// to a different letter, are returned unchanged.
CodePoint ToUpper(CodePoint c);

// True when the character has a distinct uppercase form reachable through
// ToUpper.
bool HasUpperForm(CodePoint c);

bool IsWhitespace(CodePoint c);

std::string Lowercase(std::string_view text);

// Splits on runs of Unicode whitespace. Never returns empty tokens.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_UNICODE_TEXT_H_
