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

#include "core/metrics.h"

namespace punctkit {

double Counts::precision() const {
  if (tp + fp == 0) return empty() ? 1.0 : 0.0;
  return static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double Counts::recall() const {
  if (tp + fn == 0) return empty() ? 1.0 : 0.0;
  return static_cast<double>(tp) / static_cast<double>(tp + fn);
}

double Counts::f1() const {
  const double p = precision();
  const double r = recall();
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

Json CountsToJson(const Counts &counts) {
  return Json{{"tp", counts.tp},
              {"fp", counts.fp},
              {"fn", counts.fn},
              {"precision", counts.precision()},
              {"recall", counts.recall()},
              {"f1", counts.f1()}};
}

Counts CountsFromJson(const Json &obj) {
  Counts counts;
  counts.tp = GetField(obj, "tp").get<int64_t>();
  counts.fp = GetField(obj, "fp").get<int64_t>();
  counts.fn = GetField(obj, "fn").get<int64_t>();
  return counts;
}

}  // namespace punctkit
