// Copyright 2026 The Authors.
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

#ifndef TROPHOM_REPORT_H_
#define TROPHOM_REPORT_H_

#include <string>
#include <utility>
#include <vector>

namespace trophom {

struct CheckRecord {
  std::string name;
  std::string anchor;  // the statement the check certifies
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> data;

  CheckRecord& Set(std::string key, std::string value) {
    data.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  std::string Render() const;
};

// Structured-text verification report. Rendering is deterministic: records
// appear in insertion order and all values are preformatted strings.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void AddInput(const std::string& label, const std::string& content);
  CheckRecord& Add(CheckRecord record);
  const std::vector<CheckRecord>& records() const { return records_; }
  bool AllPassed() const;
  std::string Render() const;

 private:
  std::string command_;
  std::vector<std::string> inputs_;
  std::vector<CheckRecord> records_;
};

// 64-bit FNV-1a, as 16 hex digits.
std::string Digest(const std::string& content);

// Names of the records whose rendered block differs between two rendered
// reports (records present in only one of them included).
std::vector<std::string> GoldenMismatches(const std::string& actual,
                                          const std::string& golden);
// The rendered block of one record, or "" if absent.
std::string RecordBlock(const std::string& rendered, const std::string& name);

}  // namespace trophom

#endif  // TROPHOM_REPORT_H_
