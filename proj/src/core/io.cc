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

#include "core/io.h"

#include <unistd.h>

#include <filesystem>
#include <sstream>

#include "core/status.h"

namespace punctkit {

namespace fs = std::filesystem;

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ForEachJsonLine(const std::string &path,
                     const std::function<void(int, const Json &)> &fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json value;
    try {
      value = Json::parse(line);
    } catch (const Json::exception &e) {
      throw Error(ErrorCode::kParse,
                  path + ":" + std::to_string(line_number) + ": " + e.what());
    }
    if (!value.is_object()) {
      throw Error(ErrorCode::kParse, path + ":" + std::to_string(line_number) +
                                         ": expected a JSON object");
    }
    try {
      fn(line_number, value);
    } catch (const Json::exception &e) {
      throw Error(ErrorCode::kParse,
                  path + ":" + std::to_string(line_number) + ": " + e.what());
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kParse) throw;
      throw Error(ErrorCode::kParse,
                  path + ":" + std::to_string(line_number) + ": " + e.what());
    }
  }
}

std::vector<std::string> ReadLines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

void RequireReadable(const std::string &path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kIo, "input file not found: " + path);
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
}

void RequireWritableTarget(const std::string &path) {
  if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "empty output path");
  fs::path parent = fs::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty() && !fs::is_directory(parent, ec)) {
    throw Error(ErrorCode::kIo,
                "output directory does not exist: " + parent.string());
  }
  if (fs::is_directory(path, ec)) {
    throw Error(ErrorCode::kIo, "output path is a directory: " + path);
  }
}

AtomicFileWriter::AtomicFileWriter(std::string path) : path_(std::move(path)) {
  RequireWritableTarget(path_);
  temp_path_ = path_ + ".tmp." + std::to_string(::getpid());
  out_.open(temp_path_, std::ios::binary | std::ios::trunc);
  if (!out_) throw Error(ErrorCode::kIo, "cannot create " + temp_path_);
}

AtomicFileWriter::~AtomicFileWriter() {
  if (!committed_) {
    out_.close();
    std::error_code ec;
    fs::remove(temp_path_, ec);
  }
}

void AtomicFileWriter::WriteJsonLine(const Json &value) {
  out_ << value.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
}

void AtomicFileWriter::Commit() {
  out_.flush();
  if (!out_) throw Error(ErrorCode::kIo, "write failed: " + temp_path_);
  out_.close();
  std::error_code ec;
  fs::rename(temp_path_, path_, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot rename " + temp_path_ + " to " + path_ +
                                    ": " + ec.message());
  }
  committed_ = true;
}

void WriteFileAtomically(const std::string &path, const std::string &content) {
  AtomicFileWriter writer(path);
  writer.stream() << content;
  writer.Commit();
}

const Json &GetField(const Json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::kParse, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string GetString(const Json &obj, const char *key) {
  const Json &value = GetField(obj, key);
  if (!value.is_string()) {
    throw Error(ErrorCode::kParse,
                std::string("field \"") + key + "\" must be a string");
  }
  return value.get<std::string>();
}

}  // namespace punctkit
