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

#ifndef PUNCTKIT_CORE_REPORT_H_
#define PUNCTKIT_CORE_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/io.h"
#include "core/metrics.h"

namespace punctkit {

inline constexpr const char *kToolVersion = "1.0.0";
inline constexpr int kReportFormatVersion = 1;

struct ReportRow {
  std::string task;
  std::string training_set;
  std::string evaluation_set;
  bool in_distribution = false;
  Counts counts;
  std::map<std::string, int64_t> diagnostics;

  bool operator==(const ReportRow &) const = default;
};

struct Report {
  std::string tool_version = kToolVersion;
  Json config = Json::object();
  std::string config_hash;
  // Taken from SOURCE_DATE_EPOCH when set; omitted otherwise so that reruns
  // stay byte-identical.
  std::optional<std::string> timestamp;
  std::vector<ReportRow> rows;
  // Scorer-specific payload, e.g. the per-category restoration table.
  Json detail = Json::object();
};

// 64-bit FNV-1a over the compact JSON dump (keys sorted) as 16 hex digits.
std::string ConfigHash(const Json &config);

// Fills config_hash and timestamp for a report about to be written.
void StampReport(Report *report);

Json ReportToJson(const Report &report);
Report ReportFromJson(const Json &obj);

enum class ReportStyle { kTsv, kMarkdown };

std::optional<ReportStyle> ReportStyleFromName(std::string_view name);

// Two decimals without the leading zero: 0.666 -> ".67", 1 -> "1.00".
std::string FormatMetric(double value);

// Rows sorted by task, training set, then in-distribution rows first and
// evaluation set. Markdown prints the task and training set cells only on
// the first row of each group; TSV repeats them.
std::string RenderReport(std::vector<ReportRow> rows, ReportStyle style);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_REPORT_H_
