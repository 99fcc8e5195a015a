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

#include "core/scorer.h"

#include <algorithm>
#include <set>
#include <utility>

#include "core/parallel.h"

namespace punctkit {

namespace {

// (edits, -identical pairs); compared lexicographically.
using Cost = std::pair<int, int>;

Cost Add(Cost c, int edits, int matches) {
  return {c.first + edits, c.second - matches};
}

}  // namespace

int AlignmentOutcome::EditCost() const {
  int cost = static_cast<int>(unmatched_hyp.size());
  for (const AlignmentLink &link : links) {
    if (!link.same) ++cost;
  }
  return cost;
}

AlignmentOutcome AlignTokens(const std::vector<std::string> &source,
                             const std::vector<std::string> &hyp) {
  AlignmentOutcome out;
  const size_t n = source.size();
  const size_t m = hyp.size();
  if (source == hyp) {
    out.exact = true;
    for (size_t i = 0; i < n; ++i) {
      out.links.push_back({static_cast<int>(i), static_cast<int>(i), true});
    }
    return out;
  }

  std::vector<std::vector<Cost>> d(n + 1, std::vector<Cost>(m + 1));
  for (size_t i = 1; i <= n; ++i) d[i][0] = Add(d[i - 1][0], 1, 0);
  for (size_t j = 1; j <= m; ++j) d[0][j] = Add(d[0][j - 1], 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      const bool same = source[i - 1] == hyp[j - 1];
      d[i][j] = std::min({Add(d[i - 1][j - 1], same ? 0 : 1, same ? 1 : 0),
                          Add(d[i - 1][j], 1, 0), Add(d[i][j - 1], 1, 0)});
    }
  }

  std::vector<AlignmentLink> links;
  size_t i = n;
  size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = source[i - 1] == hyp[j - 1];
      if (d[i][j] == Add(d[i - 1][j - 1], same ? 0 : 1, same ? 1 : 0)) {
        links.push_back(
            {static_cast<int>(i - 1), static_cast<int>(j - 1), same});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && d[i][j] == Add(d[i - 1][j], 1, 0)) {
      links.push_back({static_cast<int>(i - 1), kNoToken, false});
      --i;
      continue;
    }
    out.unmatched_hyp.push_back(static_cast<int>(j - 1));
    --j;
  }
  std::reverse(links.begin(), links.end());
  std::reverse(out.unmatched_hyp.begin(), out.unmatched_hyp.end());
  out.links = std::move(links);
  return out;
}

AlignmentOutcome AlignHypothesis(std::string_view source,
                                 std::string_view hypothesis) {
  return AlignTokens(Tokenize(source), LabelsFromText(hypothesis).tokens);
}

OpCategory CategoryOf(const RestorationOp &op) {
  if (op.kind == OpKind::kCap) return OpCategory::kCap;
  switch (op.insert.mark) {
    case Mark::kComma:
      return OpCategory::kComma;
    case Mark::kPeriod:
      return OpCategory::kPeriod;
    case Mark::kSingleQuote:
      return OpCategory::kSingleQuote;
    case Mark::kDoubleQuote:
      return OpCategory::kDoubleQuote;
  }
  return OpCategory::kCap;
}

const char *CategoryName(OpCategory category) {
  switch (category) {
    case OpCategory::kCap:
      return "CAP";
    case OpCategory::kComma:
      return "COMMA";
    case OpCategory::kPeriod:
      return "PERIOD";
    case OpCategory::kSingleQuote:
      return "SQUOTE";
    case OpCategory::kDoubleQuote:
      return "DQUOTE";
  }
  return "?";
}

RestorationScore &RestorationScore::operator+=(const RestorationScore &other) {
  total += other.total;
  for (size_t c = 0; c < kNumOpCategories; ++c) {
    per_category[c] += other.per_category[c];
  }
  return *this;
}

RestorationScore ScoreRestoration(const std::vector<RestorationOp> &gold,
                                  const std::vector<RestorationOp> &pred,
                                  const AlignmentOutcome &alignment) {
  std::vector<int> hyp_to_source;
  for (const AlignmentLink &link : alignment.links) {
    if (!link.same || link.hyp == kNoToken) continue;
    if (link.hyp >= static_cast<int>(hyp_to_source.size())) {
      hyp_to_source.resize(link.hyp + 1, kNoToken);
    }
    hyp_to_source[link.hyp] = link.source;
  }

  RestorationScore score;
  auto bump = [&](const RestorationOp &op, int64_t Counts::*field) {
    ++(score.total.*field);
    ++(score.per_category[static_cast<size_t>(CategoryOf(op))].*field);
  };

  std::set<RestorationOp> remapped;
  const std::set<RestorationOp> pred_set(pred.begin(), pred.end());
  for (const RestorationOp &op : pred_set) {
    const int h = op.token_index;
    if (h < 0 || h >= static_cast<int>(hyp_to_source.size()) ||
        hyp_to_source[h] == kNoToken) {
      bump(op, &Counts::fp);
      continue;
    }
    RestorationOp moved = op;
    moved.token_index = hyp_to_source[h];
    remapped.insert(std::move(moved));
  }
  const std::set<RestorationOp> gold_set(gold.begin(), gold.end());
  for (const RestorationOp &op : remapped) {
    bump(op, gold_set.count(op) ? &Counts::tp : &Counts::fp);
  }
  for (const RestorationOp &op : gold_set) {
    if (!remapped.count(op)) bump(op, &Counts::fn);
  }
  return score;
}

RestorationScore ScorePair(const LabeledSequence &gold, const Hypothesis &hyp,
                           bool *exact) {
  LabeledSequence hyp_seq = std::holds_alternative<std::string>(hyp)
                                ? LabelsFromText(std::get<std::string>(hyp))
                                : std::get<LabeledSequence>(hyp);
  const AlignmentOutcome alignment = AlignTokens(gold.tokens, hyp_seq.tokens);
  if (exact) *exact = alignment.exact;
  return ScoreRestoration(LabelsToOps(gold), LabelsToOps(hyp_seq), alignment);
}

CorpusScore ScoreCorpus(const std::vector<LabeledSequence> &golds,
                        const std::map<std::string, Hypothesis> &hyps) {
  std::vector<RestorationScore> scores(golds.size());
  std::vector<char> missing(golds.size(), 0);
  std::vector<char> inexact(golds.size(), 0);
  ParallelFor(golds.size(), [&](size_t k) {
    const LabeledSequence &gold = golds[k];
    auto it = hyps.find(gold.pair_id);
    if (it == hyps.end()) {
      missing[k] = 1;
      AlignmentOutcome none;
      for (size_t i = 0; i < gold.tokens.size(); ++i) {
        none.links.push_back({static_cast<int>(i), kNoToken, false});
      }
      scores[k] = ScoreRestoration(LabelsToOps(gold), {}, none);
      return;
    }
    bool exact = false;
    scores[k] = ScorePair(gold, it->second, &exact);
    inexact[k] = exact ? 0 : 1;
  });

  CorpusScore result;
  std::set<std::string_view> gold_ids;
  for (size_t k = 0; k < golds.size(); ++k) {
    gold_ids.insert(golds[k].pair_id);
    result.score += scores[k];
    result.missing += missing[k];
    result.inexact += inexact[k];
  }
  result.pairs = static_cast<int64_t>(golds.size());
  for (const auto &entry : hyps) {
    if (!gold_ids.count(entry.first)) ++result.unknown;
  }
  return result;
}

Json RestorationScoreToJson(const RestorationScore &score) {
  Json per_category = Json::object();
  for (size_t c = 0; c < kNumOpCategories; ++c) {
    per_category[CategoryName(static_cast<OpCategory>(c))] =
        CountsToJson(score.per_category[c]);
  }
  return Json{{"totals", CountsToJson(score.total)},
              {"per_category", std::move(per_category)}};
}

}  // namespace punctkit
