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

#include "trophom/subset.h"

#include <string>
#include <vector>

namespace trophom {

Subset Subset::Of(std::initializer_list<int> elements) {
  return Of(std::vector<int>(elements));
}

Subset Subset::Of(const std::vector<int>& elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSet) {
      throw Error(ErrorCode::kInvalidParameters,
                  "element " + std::to_string(e) + " outside 1.." +
                      std::to_string(kMaxGroundSet));
    }
    bits |= 1u << (e - 1);
  }
  return Subset(bits);
}

std::vector<int> Subset::Elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int e : Elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

bool CanonicalLess(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Equal cardinality: compare sorted element lists lexicographically. The
  // lowest differing bit decides, since the set containing it has the
  // smaller element at that position.
  std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  std::uint32_t low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

void CheckGroundSetSize(int n) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidParameters, "negative ground set size");
  }
  if (n > kMaxGroundSet) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "ground set size " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxGroundSet));
  }
}

}  // namespace trophom
