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

#ifndef PUNCTKIT_CORE_IO_H_
#define PUNCTKIT_CORE_IO_H_

#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace punctkit {

using Json = nlohmann::json;

// Reads a whole file. Throws Error(kIo) when it cannot be opened.
std::string ReadFile(const std::string &path);

// Calls fn(line_number, object) for every non-blank line of a JSON-lines
// file. Parse failures throw Error(kParse) naming the file and line.
void ForEachJsonLine(const std::string &path,
                     const std::function<void(int, const Json &)> &fn);

std::vector<std::string> ReadLines(const std::string &path);

void RequireReadable(const std::string &path);

// Checks that `path` can be created: its parent directory must exist.
void RequireWritableTarget(const std::string &path);

// Writes to a temporary sibling file and renames it over `path` on Commit().
// If the writer is destroyed without Commit() the temporary is removed, so a
// failed command never leaves a truncated output behind.
class AtomicFileWriter {
 public:
  explicit AtomicFileWriter(std::string path);
  ~AtomicFileWriter();

  AtomicFileWriter(const AtomicFileWriter &) = delete;
  AtomicFileWriter &operator=(const AtomicFileWriter &) = delete;

  std::ostream &stream() { return out_; }
  void WriteJsonLine(const Json &value);
  void Commit();

 private:
  std::string path_;
  std::string temp_path_;
  std::ofstream out_;
  bool committed_ = false;
};

void WriteFileAtomically(const std::string &path, const std::string &content);

// Required field accessors that report the offending key on failure.
std::string GetString(const Json &obj, const char *key);
const Json &GetField(const Json &obj, const char *key);

}  // namespace punctkit

#endif  // PUNCTKIT_CORE_IO_H_
