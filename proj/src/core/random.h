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

#ifndef PUNCTKIT_CORE_RANDOM_H_
#define PUNCTKIT_CORE_RANDOM_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace punctkit {

// Deterministic Fisher-Yates shuffle. std::shuffle and the standard
// distributions are implementation-defined, so the bounded draw is done by
// hand on top of mt19937_64, whose output sequence is fixed by the standard.
template <typename T>
void DeterministicShuffle(std::vector<T> *items, std::mt19937_64 *rng) {
  for (size_t i = items->size(); i > 1; --i) {
    const uint64_t bound = i;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t draw;
    do {
      draw = (*rng)();
    } while (draw >= limit);
    std::swap((*items)[i - 1], (*items)[draw % bound]);
  }
}

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_RANDOM_H_
