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

#ifndef PUNCTKIT_CORE_PARALLEL_H_
#define PUNCTKIT_CORE_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <functional>

namespace punctkit {

// Worker count: PUNCTKIT_THREADS when set to a positive integer, otherwise
// the machine's hardware concurrency.
int ThreadCount();

// Runs fn(i) for every i in [0, n). Work is split into contiguous blocks so
// results written to index i of a pre-sized vector are independent of the
// thread count. If workers throw, the exception from the lowest-indexed block is rethrown.
void ParallelFor(size_t n, const std::function<void(size_t)> &fn);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_PARALLEL_H_
