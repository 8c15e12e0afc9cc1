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

#include "trophom/homology.h"

#include <algorithm>
#include <unordered_map>

#include "trophom/error.h"

namespace trophom {
namespace {

// Chain complex on the faces of `levels` for which keep(level, face index)
// holds; levels[k] lists the faces with k vertices.
template <class Keep>
ChainComplexZ ChainsOnLevels(const SimplicialComplex& complex, Keep keep) {
  const auto& levels = complex.FacesByDimension();
  const int count = static_cast<int>(levels.size());
  std::vector<std::vector<int>> local(count);
  std::vector<int> ranks(count, 0);
  for (int k = 0; k < count; ++k) {
    local[k].assign(levels[k].size(), -1);
    for (int i = 0; i < static_cast<int>(levels[k].size()); ++i) {
      if (keep(k, i)) local[k][i] = ranks[k]++;
    }
  }
  std::vector<SparseIntMatrix> boundaries;
  boundaries.emplace_back(0, ranks.empty() ? 0 : ranks[0]);
  Face sub;
  for (int k = 1; k < count; ++k) {
    SparseIntMatrix d(ranks[k - 1], ranks[k]);
    for (int i = 0; i < static_cast<int>(levels[k].size()); ++i) {
      const int col = local[k][i];
      if (col < 0) continue;
      const Face& f = levels[k][i];
      for (int j = 0; j < k; ++j) {
        sub.assign(f.begin(), f.end());
        sub.erase(sub.begin() + j);
        const int row = local[k - 1][complex.IndexOf(sub)];
        if (row >= 0) d.Add(row, col, j % 2 == 0 ? 1 : -1);
      }
    }
    d.Normalize();
    boundaries.push_back(std::move(d));
  }
  return ChainComplexZ(-1, std::move(ranks), std::move(boundaries));
}

}  // namespace

ChainComplexZ SimplicialChains(const SimplicialComplex& complex) {
  if (complex.is_void()) {
    throw Error(ErrorCode::kVoidComplex, "the void complex has no chains");
  }
  return ChainsOnLevels(complex, [](int, int) { return true; });
}

HomologyProfile ReducedHomology(const SimplicialComplex& complex) {
  return SimplicialChains(complex).Homology();
}

ChainComplexZ RelativeChains(const SimplicialComplex& complex,
                             const SimplicialComplex& sub) {
  for (const Face& f : sub.facets()) {
    if (!complex.Contains(f)) {
      throw Error(ErrorCode::kNotASubcomplex,
                  "relative pair: subcomplex is not contained in complex");
    }
  }
  if (complex.is_void()) {
    throw Error(ErrorCode::kVoidComplex, "the void complex has no chains");
  }
  const auto& levels = complex.FacesByDimension();
  return ChainsOnLevels(complex, [&](int k, int i) {
    return !sub.Contains(levels[k][i]);
  });
}

HomologyProfile RelativeHomology(const SimplicialComplex& complex,
                                 const SimplicialComplex& sub) {
  return RelativeChains(complex, sub).Homology();
}

std::string CmResult::ToString() const {
  switch (verdict) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kNotPure:
      return "NOT_PURE";
    case Verdict::kFail: {
      std::string face = "{";
      for (std::size_t i = 0; i < witness.size(); ++i) {
        face += (i ? "," : "") + std::to_string(witness[i]);
      }
      return "FAIL link of " + face + "} has H~_" + std::to_string(degree) +
             "=" + group.ToString();
    }
  }
  return "";
}

CmResult CmOverZ(const SimplicialComplex& complex) {
  CmResult out;
  if (complex.is_void()) {
    throw Error(ErrorCode::kVoidComplex, "CM check of the void complex");
  }
  if (!complex.IsPure()) {
    out.verdict = CmResult::Verdict::kNotPure;
    return out;
  }
  const int dim = complex.dimension();
  const auto& facets = complex.facets();
  std::unordered_map<int, std::vector<int>> by_vertex;
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
    for (int v : facets[i]) by_vertex[v].push_back(i);
  }
  const auto& levels = complex.FacesByDimension();
  // Links of faces of codimension <= 1 have dimension <= 0 and are nonempty,
  // so the condition only constrains faces with at most dim - 1 vertices.
  for (int k = 0; k < dim && k < static_cast<int>(levels.size()); ++k) {
    for (const Face& sigma : levels[k]) {
      std::vector<Face> link_facets;
      const std::vector<int>* candidates = nullptr;
      for (int v : sigma) {
        const auto& list = by_vertex[v];
        if (!candidates || list.size() < candidates->size()) {
          candidates = &list;
        }
      }
      auto add = [&](const Face& f) {
        if (!std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) {
          return;
        }
        Face rest;
        std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(),
                            std::back_inserter(rest));
        link_facets.push_back(std::move(rest));
      };
      if (candidates) {
        for (int id : *candidates) add(facets[id]);
      } else {
        for (const Face& f : facets) add(f);
      }
      const SimplicialComplex link =
          SimplicialComplex::FromFacets(std::move(link_facets));
      const HomologyProfile h = ReducedHomology(link);
      ++out.faces_checked;
      for (int i = -1; i < link.dimension(); ++i) {
        if (!h.At(i).IsZero()) {
          out.verdict = CmResult::Verdict::kFail;
          out.witness = sigma;
          out.degree = i;
          out.group = h.At(i);
          return out;
        }
      }
    }
  }
  return out;
}

WedgeResult WedgeProfile(const SimplicialComplex& complex, int d) {
  WedgeResult out;
  out.homology = ReducedHomology(complex);
  out.passed = out.homology.ConcentratedIn(d);
  out.sphere_count = out.homology.At(d).betti;
  return out;
}

bool EulerCheck(const SimplicialComplex& complex,
                const HomologyProfile& homology) {
  long long from_faces = 0;
  const auto& levels = complex.FacesByDimension();
  for (int k = 0; k < static_cast<int>(levels.size()); ++k) {
    from_faces += ((k - 1) % 2 == 0 ? 1 : -1) *
                  static_cast<long long>(levels[k].size());
  }
  long long from_betti = 0;
  for (int q = homology.min_degree; q <= homology.max_degree(); ++q) {
    from_betti += (q % 2 == 0 ? 1 : -1) * homology.At(q).betti;
  }
  return from_faces == from_betti;
}

}  // namespace trophom
