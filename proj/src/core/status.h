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

#ifndef PUNCTKIT_CORE_STATUS_H_
#define PUNCTKIT_CORE_STATUS_H_

#include <stdexcept>
#include <string>

namespace punctkit {

// Error categories. The numeric values are part of the C API and must stay
// in sync with pk_status in punctkit.h.
enum class ErrorCode {
  kInvalidArgument = 1,
  kIo = 2,
  kParse = 3,
  kAlignment = 4,
  kVersion = 5,
  kInsufficientData = 6,
  kInternal = 99,
};

const char *ErrorCodeName(ErrorCode code);

// All recoverable failures inside the core are reported by throwing Error.
// The C API boundary converts them into status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_STATUS_H_
