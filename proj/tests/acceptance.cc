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

// Runs the acceptance suite and prints one verdict line per criterion.
// Optional arguments: --seed N, --max-n N, --report PATH.

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "trophom/error.h"
#include "trophom/io.h"
#include "trophom/suite.h"

int main(int argc, char** argv) {
  using namespace trophom;
  SuiteOptions options;
  std::string report_path;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--seed") == 0) {
      options.seed = std::strtoull(argv[i + 1], nullptr, 10);
    } else if (std::strcmp(argv[i], "--max-n") == 0) {
      options.max_n = std::atoi(argv[i + 1]);
    } else if (std::strcmp(argv[i], "--report") == 0) {
      report_path = argv[i + 1];
    }
  }
  std::string golden;
  try {
    golden = ReadFile(TROPHOM_GOLDEN_FILE);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
  }

  int index = 0;
  options.progress = [&](const std::string& name, double seconds) {
    std::cerr << "  finished " << name << " in " << std::fixed
              << std::setprecision(1) << seconds << " s\n";
  };
  try {
    const Report report = SuiteReport(options, golden);
    std::cout << "acceptance suite, seed " << options.seed << ", max n "
              << options.max_n << "\n";
    int passed = 0;
    for (const CheckRecord& rec : report.records()) {
      ++index;
      std::cout << (rec.passed ? "PASS" : "FAIL") << "  " << std::setw(2)
                << index << "  " << rec.name << "\n";
      if (!rec.passed) {
        for (const auto& [key, value] : rec.data) {
          if (key == "first failure" || key == "golden file" ||
              key == "record verdict" || key == "stated system consistent" ||
              key == "c is a boundary") {
            std::cout << "            " << key << ": " << value << "\n";
          }
        }
      }
      passed += rec.passed ? 1 : 0;
    }
    std::cout << passed << "/" << report.records().size()
              << " criteria passed\n";
    if (!report_path.empty()) std::ofstream(report_path) << report.Render();
    return report.AllPassed() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
