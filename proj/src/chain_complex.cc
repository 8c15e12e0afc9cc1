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

#include "trophom/chain_complex.h"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "trophom/error.h"
#include "trophom/smith.h"

namespace trophom {
namespace {

std::atomic<long long> verified_count{0};

}  // namespace

std::string HomologyGroup::ToString() const {
  if (IsZero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (betti > 0) {
    os << "Z";
    if (betti > 1) os << "^" << betti;
    first = false;
  }
  for (const BigInt& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

HomologyGroup HomologyProfile::At(int q) const {
  const int i = q - min_degree;
  if (i < 0 || i >= static_cast<int>(groups.size())) return {};
  return groups[i];
}

bool HomologyProfile::AllZero() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const HomologyGroup& g) { return g.IsZero(); });
}

bool HomologyProfile::TorsionFree() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const HomologyGroup& g) { return g.IsFree(); });
}

bool HomologyProfile::ConcentratedIn(int d) const {
  for (int q = min_degree; q <= max_degree(); ++q) {
    const HomologyGroup g = At(q);
    if (q == d ? !g.IsFree() : !g.IsZero()) return false;
  }
  return true;
}

std::string HomologyProfile::ToString() const {
  std::ostringstream os;
  for (int q = min_degree; q <= max_degree(); ++q) {
    os << (q == min_degree ? "" : " ") << "H_" << q << "=" << At(q).ToString();
  }
  return os.str();
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  const int lo = std::min(a.min_degree, b.min_degree);
  const int hi = std::max(a.max_degree(), b.max_degree());
  for (int q = lo; q <= hi; ++q) {
    if (!(a.At(q) == b.At(q))) return false;
  }
  return true;
}

ChainComplexZ::ChainComplexZ(int min_degree, std::vector<int> ranks,
                             std::vector<SparseIntMatrix> boundaries)
    : min_degree_(min_degree),
      ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != ranks_.size()) {
    throw Error(ErrorCode::kInternal, "one boundary matrix per degree");
  }
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    const int expected_rows = i == 0 ? 0 : ranks_[i - 1];
    if (boundaries_[i].cols() != ranks_[i] ||
        boundaries_[i].rows() != expected_rows) {
      throw Error(ErrorCode::kInternal, "boundary matrix has wrong shape");
    }
  }
  for (std::size_t i = 1; i < ranks_.size(); ++i) {
    if (!boundaries_[i - 1].ProductIsZero(boundaries_[i])) {
      throw Error(ErrorCode::kInternal,
                  "boundary squared is nonzero in degree " +
                      std::to_string(min_degree_ + static_cast<int>(i)));
    }
  }
  ++verified_count;
}

long long ChainComplexZ::VerifiedCount() { return verified_count.load(); }

int ChainComplexZ::rank(int q) const {
  const int i = q - min_degree_;
  if (i < 0 || i >= static_cast<int>(ranks_.size())) return 0;
  return ranks_[i];
}

const SparseIntMatrix& ChainComplexZ::boundary(int q) const {
  const int i = q - min_degree_;
  if (i < 0 || i >= static_cast<int>(boundaries_.size())) return empty_;
  return boundaries_[i];
}

long long ChainComplexZ::EulerCharacteristic() const {
  long long chi = 0;
  for (int q = min_degree_; q <= max_degree(); ++q) {
    chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(rank(q));
  }
  return chi;
}

HomologyProfile ChainComplexZ::Homology() const {
  const int count = static_cast<int>(ranks_.size());
  std::vector<SmithInvariants> inv(count + 1);
  for (int i = 1; i < count; ++i) {
    inv[i] = SparseSmithInvariants(boundaries_[i]);
  }
  HomologyProfile out;
  out.min_degree = min_degree_;
  for (int i = 0; i < count; ++i) {
    HomologyGroup g;
    g.betti = ranks_[i] - inv[i].rank - inv[i + 1].rank;
    g.torsion = inv[i + 1].torsion;
    out.groups.push_back(std::move(g));
  }
  return out;
}

}  // namespace trophom
