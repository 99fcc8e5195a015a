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

#ifndef PUNCTKIT_CORE_METRICS_H_
#define PUNCTKIT_CORE_METRICS_H_

#include <cstdint>

#include "core/io.h"

namespace punctkit {

// Match counts shared by every scorer. A metric whose denominator is zero is
// 1.0 when nothing was expected and nothing predicted (tp + fp + fn == 0),
// and 0.0 otherwise.
struct Counts {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t fn = 0;

  Counts &operator+=(const Counts &other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  bool operator==(const Counts &) const = default;

  bool empty() const { return tp == 0 && fp == 0 && fn == 0; }
  double precision() const;
  double recall() const;
  double f1() const;
};

inline Counts operator+(Counts a, const Counts &b) { return a += b; }

// {"tp", "fp", "fn", "precision", "recall", "f1"}
Json CountsToJson(const Counts &counts);
Counts CountsFromJson(const Json &obj);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_METRICS_H_
