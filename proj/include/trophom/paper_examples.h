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

#ifndef TROPHOM_PAPER_EXAMPLES_H_
#define TROPHOM_PAPER_EXAMPLES_H_

#include <string>
#include <vector>

#include "trophom/matroid.h"
#include "trophom/report.h"

namespace trophom {

// Rank-3 matroid on [7] with long lines 136, 147, 246, 257, 345, 12, 67.
Matroid DisconnectedExampleMatroid();
// The flat list as printed alongside that example.
std::vector<Subset> PrintedExampleFlats();

CheckRecord DisconnectedFiltrationRecord();
CheckRecord FanoDefectRecord();
CheckRecord U34WitnessRecord();
CheckRecord RotaSmallRecord();
CheckRecord ComplementDimensionRecord();
CheckRecord DualityIdentificationRecord();

// All six records above, in that order.
Report PaperExamplesReport();

// Record names, in report order.
inline constexpr const char* kDisconnectedName =
    "worked example: disconnected filtration";
inline constexpr const char* kFanoName = "worked example: fano integral defect";
inline constexpr const char* kU34Name = "worked example: U(3,4) halflink class";
inline constexpr const char* kRotaName = "rota identity on small matroids";
inline constexpr const char* kComplementName = "complement model dimension bound";
inline constexpr const char* kDualityName =
    "matroid duality as alexander duality";

}  // namespace trophom

#endif  // TROPHOM_PAPER_EXAMPLES_H_
