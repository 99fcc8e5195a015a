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

#include "core/report.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <tuple>

#include "core/status.h"

namespace punctkit {

namespace {

std::string EvaluationCell(const ReportRow &row) {
  return row.in_distribution ? "ID" : row.evaluation_set;
}

}  // namespace

std::string ConfigHash(const Json &config) {
  const std::string text = config.dump();
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

void StampReport(Report *report) {
  report->config_hash = ConfigHash(report->config);
  if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    report->timestamp = epoch;
  } else {
    report->timestamp.reset();
  }
}

Json ReportToJson(const Report &report) {
  Json rows = Json::array();
  for (const ReportRow &row : report.rows) {
    Json diagnostics = Json::object();
    for (const auto &[name, count] : row.diagnostics) diagnostics[name] = count;
    rows.push_back(Json{{"task", row.task},
                        {"training_set", row.training_set},
                        {"evaluation_set", row.evaluation_set},
                        {"in_distribution", row.in_distribution},
                        {"scores", CountsToJson(row.counts)},
                        {"diagnostics", std::move(diagnostics)}});
  }
  Json obj{{"format_version", kReportFormatVersion},
           {"tool_version", report.tool_version},
           {"config", report.config},
           {"config_hash", report.config_hash},
           {"rows", std::move(rows)},
           {"detail", report.detail}};
  if (report.timestamp) obj["timestamp"] = *report.timestamp;
  return obj;
}

Report ReportFromJson(const Json &obj) {
  Report report;
  report.tool_version = GetString(obj, "tool_version");
  report.config = GetField(obj, "config");
  report.config_hash = GetString(obj, "config_hash");
  if (obj.contains("timestamp")) report.timestamp = GetString(obj, "timestamp");
  if (obj.contains("detail")) report.detail = obj["detail"];
  const Json &rows = GetField(obj, "rows");
  if (!rows.is_array()) throw Error(ErrorCode::kParse, "\"rows\" must be an array");
  for (const Json &item : rows) {
    ReportRow row;
    row.task = GetString(item, "task");
    row.training_set = GetString(item, "training_set");
    row.evaluation_set = GetString(item, "evaluation_set");
    row.in_distribution = GetField(item, "in_distribution").get<bool>();
    row.counts = CountsFromJson(GetField(item, "scores"));
    if (item.contains("diagnostics")) {
      for (auto it = item["diagnostics"].begin(); it != item["diagnostics"].end();
           ++it) {
        row.diagnostics[it.key()] = it.value().get<int64_t>();
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::optional<ReportStyle> ReportStyleFromName(std::string_view name) {
  if (name == "tsv") return ReportStyle::kTsv;
  if (name == "markdown" || name == "md") return ReportStyle::kMarkdown;
  return std::nullopt;
}

std::string FormatMetric(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  std::string text = buf;
  if (text.rfind("0.", 0) == 0) text.erase(0, 1);
  return text;
}

std::string RenderReport(std::vector<ReportRow> rows, ReportStyle style) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow &a, const ReportRow &b) {
                     return std::make_tuple(a.task, a.training_set,
                                            !a.in_distribution, a.evaluation_set) <
                            std::make_tuple(b.task, b.training_set,
                                            !b.in_distribution, b.evaluation_set);
                   });
  const std::vector<std::string> header = {
      "Task", "Training set", "Evaluation set", "P", "R", "F1"};
  std::string out;
  if (style == ReportStyle::kTsv) {
    for (size_t c = 0; c < header.size(); ++c) {
      if (c > 0) out.push_back('\t');
      out.append(header[c]);
    }
    out.push_back('\n');
    for (const ReportRow &row : rows) {
      out.append(row.task + "\t" + row.training_set + "\t" + EvaluationCell(row) +
                 "\t" + FormatMetric(row.counts.precision()) + "\t" +
                 FormatMetric(row.counts.recall()) + "\t" +
                 FormatMetric(row.counts.f1()) + "\n");
    }
    return out;
  }

  out.append("| Task | Training set | Evaluation set | P | R | F1 |\n");
  out.append("|---|---|---|---:|---:|---:|\n");
  const ReportRow *prev = nullptr;
  for (const ReportRow &row : rows) {
    const bool same_task = prev && prev->task == row.task;
    const bool same_training = same_task && prev->training_set == row.training_set;
    out.append("| " + (same_task ? std::string() : row.task) + " | " +
               (same_training ? std::string() : row.training_set) + " | " +
               EvaluationCell(row) + " | " + FormatMetric(row.counts.precision()) +
               " | " + FormatMetric(row.counts.recall()) + " | " +
               FormatMetric(row.counts.f1()) + " |\n");
    prev = &row;
  }
  return out;
}

}  // namespace punctkit
