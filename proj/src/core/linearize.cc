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

#include "core/linearize.h"

#include "core/unicode_text.h"

namespace punctkit {

namespace {

std::string NerGroup(const Span &span) {
  return "(" + span.surface + ": " + span.type + ")";
}

std::string TupleGroup(const Tuple &t) {
  return "(" + t.arg0 + ", " + t.predicate + ", " + t.arg1 + ")";
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string Trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

// Byte offsets of `sep` occurring outside nested parentheses.
std::vector<size_t> TopLevel(std::string_view body, std::string_view sep) {
  std::vector<size_t> hits;
  int depth = 0;
  for (size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    } else if (depth == 0 && body.compare(i, sep.size(), sep) == 0) {
      hits.push_back(i);
      i += sep.size() - 1;
    }
  }
  return hits;
}

std::string Excerpt(std::string_view s) {
  constexpr size_t kMax = 40;
  if (s.size() <= kMax) return std::string(s);
  return std::string(s.substr(0, kMax)) + "...";
}

bool ParseEntity(std::string_view body, Delinearized *out) {
  const std::vector<size_t> colons = TopLevel(body, ": ");
  if (colons.empty()) return false;
  const size_t at = colons.back();
  std::string surface = Trim(body.substr(0, at));
  std::string type = Trim(body.substr(at + 2));
  if (surface.empty() || type.empty()) {
    out->diagnostics.push_back("empty entity field in group (" +
                               Excerpt(body) + ")");
    return true;
  }
  out->spans.push_back(Span{std::move(surface), std::move(type), std::nullopt});
  return true;
}

bool ParseTuple(std::string_view body, Delinearized *out) {
  const std::vector<size_t> commas = TopLevel(body, ", ");
  if (commas.size() < 2) return false;
  std::vector<std::string> fields;
  size_t start = 0;
  for (size_t at : commas) {
    fields.push_back(std::string(body.substr(start, at - start)));
    start = at + 2;
  }
  fields.push_back(std::string(body.substr(start)));
  Tuple tuple;
  tuple.arg0 = Trim(fields.front());
  tuple.arg1 = Trim(fields.back());
  std::vector<std::string> middle(fields.begin() + 1, fields.end() - 1);
  tuple.predicate = Trim(Join(middle, ", "));
  if (tuple.arg0.empty() || tuple.predicate.empty() || tuple.arg1.empty()) {
    out->diagnostics.push_back("empty tuple field in group (" + Excerpt(body) +
                               ")");
    return true;
  }
  out->tuples.push_back(std::move(tuple));
  return true;
}

void ParseGroup(std::string_view body, OutputKind kind, Delinearized *out) {
  bool parsed = false;
  switch (kind) {
    case OutputKind::kNer:
      parsed = ParseEntity(body, out);
      break;
    case OutputKind::kOpenIe:
      parsed = ParseTuple(body, out);
      break;
    case OutputKind::kMultitask:
      parsed = ParseEntity(body, out) || ParseTuple(body, out);
      break;
  }
  if (!parsed) {
    out->diagnostics.push_back("malformed group (" + Excerpt(body) + ")");
  }
}

}  // namespace

const char *OutputKindName(OutputKind kind) {
  switch (kind) {
    case OutputKind::kNer:
      return "ner";
    case OutputKind::kOpenIe:
      return "openie";
    case OutputKind::kMultitask:
      return "multitask";
  }
  return "?";
}

std::optional<OutputKind> OutputKindFromName(std::string_view name) {
  for (OutputKind k :
       {OutputKind::kNer, OutputKind::kOpenIe, OutputKind::kMultitask}) {
    if (name == OutputKindName(k)) return k;
  }
  return std::nullopt;
}

std::string LinearizeNer(const std::vector<Span> &spans) {
  std::vector<std::string> groups;
  for (const Span &span : spans) groups.push_back(NerGroup(span));
  return Join(groups, " ");
}

std::string LinearizeOpenIe(const std::vector<Tuple> &tuples) {
  std::vector<std::string> groups;
  for (const Tuple &t : tuples) groups.push_back(TupleGroup(t));
  return Join(groups, " ");
}

std::string LinearizeMultitask(const std::vector<Span> &spans,
                               const std::vector<Tuple> &tuples) {
  std::vector<std::string> groups;
  std::vector<bool> used(tuples.size(), false);
  for (const Span &span : spans) {
    groups.push_back(NerGroup(span));
    for (size_t t = 0; t < tuples.size(); ++t) {
      if (!used[t] && tuples[t].arg0 == span.surface) {
        groups.push_back(TupleGroup(tuples[t]));
        used[t] = true;
      }
    }
  }
  for (size_t t = 0; t < tuples.size(); ++t) {
    if (!used[t]) groups.push_back(TupleGroup(tuples[t]));
  }
  return Join(groups, " ");
}

std::string LinearizeTags(const std::vector<std::string> &tags) {
  return Join(tags, " ");
}

Delinearized Delinearize(std::string_view output, OutputKind kind) {
  Delinearized out;
  size_t i = 0;
  const size_t n = output.size();
  while (i < n) {
    const char c = output[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    if (c == ')') {
      out.diagnostics.push_back("unmatched ')' at byte " + std::to_string(i));
      ++i;
      continue;
    }
    if (c != '(') {
      const size_t start = i;
      while (i < n && output[i] != '(' && output[i] != ')') ++i;
      out.diagnostics.push_back("stray text \"" +
                                Excerpt(Trim(output.substr(start, i - start))) +
                                "\"");
      continue;
    }
    int depth = 0;
    size_t close = std::string_view::npos;
    for (size_t j = i; j < n; ++j) {
      if (output[j] == '(') {
        ++depth;
      } else if (output[j] == ')' && --depth == 0) {
        close = j;
        break;
      }
    }
    if (close == std::string_view::npos) {
      out.diagnostics.push_back("unbalanced '(' at byte " + std::to_string(i));
      break;
    }
    ParseGroup(output.substr(i + 1, close - i - 1), kind, &out);
    i = close + 1;
  }
  return out;
}

}  // namespace punctkit
