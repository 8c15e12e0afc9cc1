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

#ifndef TROPHOM_SUITE_H_
#define TROPHOM_SUITE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trophom/matroid.h"
#include "trophom/report.h"

namespace trophom {

inline constexpr int kSuiteMaxGroundSet = 8;
inline constexpr int kWeightBound = 50;  // integer weights lie in [-K, K]

struct SuiteOptions {
  std::uint64_t seed = 1;
  int max_n = 7;
  int weights_per_matroid = 20;
  int shelling_samples_per_n = 50;
  int halfspaces_per_matroid = 20;
  int halflink_halfspaces = 3;
  int lefschetz_halfspaces = 3;
  // Called after each check with its name and wall time; not part of the
  // report.
  std::function<void(const std::string&, double)> progress;
};

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

// U(r,n) for 2 <= r <= n <= max_n, then M(K4) and fano when they fit.
std::vector<NamedMatroid> SuiteMatroids(int max_n);

// The fourteen acceptance checks, in order. `golden` is the committed
// paper-examples report; an empty string fails the golden comparisons.
// Throws kInvalidParameters unless 2 <= max_n <= 8.
std::vector<CheckRecord> RunSuite(const SuiteOptions& options,
                                  const std::string& golden);
Report SuiteReport(const SuiteOptions& options, const std::string& golden);

}  // namespace trophom

#endif  // TROPHOM_SUITE_H_
