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

#include "trophom/report.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>

namespace trophom {
namespace {

std::map<std::string, std::string> SplitBlocks(const std::string& rendered) {
  std::map<std::string, std::string> blocks;
  std::istringstream in(rendered);
  std::string line;
  std::string current;
  while (std::getline(in, line)) {
    if (line.rfind("check: ", 0) == 0) {
      current = line.substr(7);
      blocks[current] = line + "\n";
    } else if (line.rfind("  ", 0) == 0 && !current.empty()) {
      blocks[current] += line + "\n";
    } else {
      current.clear();
    }
  }
  return blocks;
}

}  // namespace

std::string CheckRecord::Render() const {
  std::string out = "check: " + name + "\n";
  out += "  anchor: " + anchor + "\n";
  out += std::string("  verdict: ") + (passed ? "PASS" : "FAIL") + "\n";
  for (const auto& [key, value] : data) out += "  " + key + ": " + value + "\n";
  return out;
}

void Report::AddInput(const std::string& label, const std::string& content) {
  inputs_.push_back(label + " fnv1a64=" + Digest(content));
}

CheckRecord& Report::Add(CheckRecord record) {
  records_.push_back(std::move(record));
  return records_.back();
}

bool Report::AllPassed() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const CheckRecord& r) { return r.passed; });
}

std::string Report::Render() const {
  std::string out = "command: " + command_ + "\n";
  for (const std::string& input : inputs_) out += "input: " + input + "\n";
  int passed = 0;
  for (const CheckRecord& r : records_) {
    out += r.Render();
    passed += r.passed ? 1 : 0;
  }
  out += std::string("status: ") + (AllPassed() ? "PASS" : "FAIL") + " (" +
         std::to_string(passed) + "/" + std::to_string(records_.size()) +
         " checks passed)\n";
  return out;
}

std::string Digest(const std::string& content) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : content) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(h));
  return buffer;
}

std::vector<std::string> GoldenMismatches(const std::string& actual,
                                          const std::string& golden) {
  const auto a = SplitBlocks(actual);
  const auto g = SplitBlocks(golden);
  std::vector<std::string> out;
  for (const auto& [name, block] : a) {
    auto it = g.find(name);
    if (it == g.end() || it->second != block) out.push_back(name);
  }
  for (const auto& [name, block] : g) {
    if (!a.contains(name)) out.push_back(name);
  }
  return out;
}

std::string RecordBlock(const std::string& rendered, const std::string& name) {
  const auto blocks = SplitBlocks(rendered);
  auto it = blocks.find(name);
  return it == blocks.end() ? "" : it->second;
}

}  // namespace trophom
