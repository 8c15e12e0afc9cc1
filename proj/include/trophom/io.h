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

#ifndef TROPHOM_IO_H_
#define TROPHOM_IO_H_

#include <string>
#include <vector>

#include "trophom/bergman.h"
#include "trophom/matroid.h"

namespace trophom {

// Matroid from JSON text. Accepted objects (elements are 1-based):
//   {"n": 4, "flats": [[1], [2], ...]}
//   {"n": 3, "bases": [[1, 2], [1, 3], [2, 3]]}
//   {"type": "uniform", "r": 2, "n": 3}
//   {"type": "boolean", "n": 4}
//   {"type": "fano"}
//   {"type": "graphic", "edges": [[1, 2], [2, 3]]}
//   {"type": "long_lines", "n": 7, "lines": [[1, 3, 6], ...]}
// Throws Error(kParse) with line and column for malformed text.
Matroid ParseMatroid(const std::string& text);
Matroid LoadMatroid(const std::string& path);

// {"omega": ["4", "-3/2", ...]}; entries may also be JSON numbers.
Weight ParseWeight(const std::string& text);
// {"normal": ["2", "-1", ...]}
Halfspace ParseHalfspace(const std::string& text);

// Either a JSON file path or an inline list such as "1,1,-3" or
// "[\"4\",\"-3/2\"]".
std::vector<Rational> ParseRationalArgument(const std::string& argument,
                                            const std::string& key);

std::string ReadFile(const std::string& path);

}  // namespace trophom

#endif  // TROPHOM_IO_H_
