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

#include "trophom/simplicial_complex.h"

#include <algorithm>
#include <unordered_set>

#include "trophom/error.h"

namespace trophom {
namespace {

bool Includes(const Face& big, const Face& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Sorts, dedupes and drops faces contained in another listed face.
std::vector<Face> MaximalFaces(std::vector<Face> faces) {
  for (Face& f : faces) std::sort(f.begin(), f.end());
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  std::unordered_map<int, std::vector<int>> by_vertex;  // vertex -> kept ids
  for (Face& f : faces) {
    bool covered = false;
    if (f.empty()) {
      covered = !kept.empty();
    } else if (auto it = by_vertex.find(f.front()); it != by_vertex.end()) {
      for (int id : it->second) {
        if (kept[id].size() > f.size() && Includes(kept[id], f)) {
          covered = true;
          break;
        }
      }
    }
    if (covered) continue;
    const int id = static_cast<int>(kept.size());
    for (int v : f) by_vertex[v].push_back(id);
    kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : f) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

SimplicialComplex::SimplicialComplex()
    : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::FromFacets(std::vector<Face> facets) {
  SimplicialComplex out;
  out.facets_ = MaximalFaces(std::move(facets));
  return out;
}

SimplicialComplex SimplicialComplex::Simplex(Face vertices) {
  return FromFacets({std::move(vertices)});
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  std::size_t best = 0;
  for (const Face& f : facets_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

std::vector<int> SimplicialComplex::Vertices() const {
  std::vector<int> out;
  for (const Face& f : facets_) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool SimplicialComplex::IsPure() const {
  for (const Face& f : facets_) {
    if (f.size() != facets_.front().size()) return false;
  }
  return true;
}

void SimplicialComplex::BuildCache() const {
  std::call_once(cache_->once, [this] {
    const int top = dimension();
    auto& by_dim = cache_->by_dim;
    if (top < -1) return;
    std::vector<std::unordered_set<Face, FaceHash>> sets(top + 2);
    Face sub;
    for (const Face& f : facets_) {
      const std::uint32_t count = 1u << f.size();
      for (std::uint32_t mask = 0; mask < count; ++mask) {
        sub.clear();
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (mask >> i & 1u) sub.push_back(f[i]);
        }
        sets[sub.size()].insert(sub);
      }
    }
    by_dim.resize(top + 2);
    cache_->index.resize(top + 2);
    for (int k = 0; k < top + 2; ++k) {
      by_dim[k].assign(sets[k].begin(), sets[k].end());
      std::sort(by_dim[k].begin(), by_dim[k].end());
      auto& index = cache_->index[k];
      index.reserve(by_dim[k].size());
      for (int i = 0; i < static_cast<int>(by_dim[k].size()); ++i) {
        index.emplace(by_dim[k][i], i);
      }
    }
  });
}

const std::vector<std::vector<Face>>& SimplicialComplex::FacesByDimension()
    const {
  BuildCache();
  return cache_->by_dim;
}

std::size_t SimplicialComplex::NumFaces() const {
  std::size_t total = 0;
  for (const auto& level : FacesByDimension()) total += level.size();
  return total;
}

int SimplicialComplex::IndexOf(const Face& face) const {
  BuildCache();
  if (face.size() >= cache_->index.size()) return -1;
  const auto& index = cache_->index[face.size()];
  auto it = index.find(face);
  return it == index.end() ? -1 : it->second;
}

bool SimplicialComplex::Contains(const Face& face) const {
  if (facets_.empty()) return false;
  Face sorted = face;
  std::sort(sorted.begin(), sorted.end());
  for (const Face& f : facets_) {
    if (Includes(f, sorted)) return true;
  }
  return false;
}

std::string SimplicialComplex::ToString() const {
  if (facets_.empty()) return "void";
  std::string out = "[";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    out += i ? ",{" : "{";
    for (std::size_t j = 0; j < facets_[i].size(); ++j) {
      out += (j ? "," : "") + std::to_string(facets_[i][j]);
    }
    out += "}";
  }
  return out + "]";
}

SimplicialComplex Link(const SimplicialComplex& complex, const Face& face) {
  Face sigma = face;
  std::sort(sigma.begin(), sigma.end());
  std::vector<Face> facets;
  for (const Face& f : complex.facets()) {
    if (!Includes(f, sigma)) continue;
    Face rest;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(),
                        std::back_inserter(rest));
    facets.push_back(std::move(rest));
  }
  if (facets.empty()) {
    throw Error(ErrorCode::kFaceNotInComplex, "face not in complex");
  }
  return SimplicialComplex::FromFacets(std::move(facets));
}

SimplicialComplex Star(const SimplicialComplex& complex, const Face& face) {
  Face sigma = face;
  std::sort(sigma.begin(), sigma.end());
  std::vector<Face> facets;
  for (const Face& f : complex.facets()) {
    if (Includes(f, sigma)) facets.push_back(f);
  }
  if (facets.empty()) {
    throw Error(ErrorCode::kFaceNotInComplex, "face not in complex");
  }
  return SimplicialComplex::FromFacets(std::move(facets));
}

SimplicialComplex DeleteVertices(const SimplicialComplex& complex,
                                 const std::vector<int>& vertices) {
  if (complex.is_void()) return complex;
  std::unordered_set<int> removed(vertices.begin(), vertices.end());
  std::vector<Face> facets;
  for (const Face& f : complex.facets()) {
    Face kept;
    for (int v : f) {
      if (!removed.contains(v)) kept.push_back(v);
    }
    facets.push_back(std::move(kept));
  }
  return SimplicialComplex::FromFacets(std::move(facets));
}

SimplicialComplex InducedSubcomplex(const SimplicialComplex& complex,
                                    const std::vector<int>& vertices) {
  if (complex.is_void()) return complex;
  std::unordered_set<int> allowed(vertices.begin(), vertices.end());
  std::vector<Face> facets;
  for (const Face& f : complex.facets()) {
    Face kept;
    for (int v : f) {
      if (allowed.contains(v)) kept.push_back(v);
    }
    facets.push_back(std::move(kept));
  }
  return SimplicialComplex::FromFacets(std::move(facets));
}

SimplicialComplex Delete(const SimplicialComplex& complex,
                         const SimplicialComplex& sub) {
  for (const Face& f : sub.facets()) {
    if (!complex.Contains(f)) {
      throw Error(ErrorCode::kNotASubcomplex,
                  "deleted complex is not a subcomplex");
    }
  }
  return DeleteVertices(complex, sub.Vertices());
}

SimplicialComplex Join(const SimplicialComplex& a,
                       const SimplicialComplex& b) {
  const std::vector<int> va = a.Vertices();
  const std::vector<int> vb = b.Vertices();
  std::vector<int> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    throw Error(ErrorCode::kInvalidParameters,
                "join of complexes with shared vertices");
  }
  std::vector<Face> facets;
  for (const Face& f : a.facets()) {
    for (const Face& g : b.facets()) {
      Face u = f;
      u.insert(u.end(), g.begin(), g.end());
      facets.push_back(std::move(u));
    }
  }
  return SimplicialComplex::FromFacets(std::move(facets));
}

SimplicialComplex Cone(const SimplicialComplex& complex, int apex) {
  if (apex < 0) {
    const std::vector<int> v = complex.Vertices();
    apex = v.empty() ? 0 : v.back() + 1;
  }
  return Join(complex, SimplicialComplex::Simplex({apex}));
}

SimplicialComplex AlexanderDual(const SimplicialComplex& complex,
                                const std::vector<int>& ground_list) {
  std::vector<int> ground = ground_list;
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  const int g = static_cast<int>(ground.size());
  CheckGroundSetSize(g);
  for (int v : complex.Vertices()) {
    if (!std::binary_search(ground.begin(), ground.end(), v)) {
      throw Error(ErrorCode::kInvalidParameters,
                  "vertex " + std::to_string(v) + " outside ground set");
    }
  }
  // Faces of Δ as bitmasks over positions in `ground`.
  std::unordered_set<std::uint32_t> faces;
  for (const Face& f : complex.facets()) {
    std::uint32_t mask = 0;
    for (int v : f) {
      mask |= 1u << (std::lower_bound(ground.begin(), ground.end(), v) -
                     ground.begin());
    }
    for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
      faces.insert(sub);
      if (sub == 0) break;
    }
  }
  const std::uint32_t full = Subset::Full(g).bits();
  std::vector<Face> dual;
  for (std::uint32_t sigma = 0; sigma <= full; ++sigma) {
    if (faces.contains(full & ~sigma)) continue;
    Face f;
    for (int i = 0; i < g; ++i) {
      if (sigma >> i & 1u) f.push_back(ground[i]);
    }
    dual.push_back(std::move(f));
    if (sigma == full) break;
  }
  return SimplicialComplex::FromFacets(std::move(dual));
}

Face FaceOf(Subset s) { return s.Elements(); }

SimplicialComplex SubsetComplexFromMasks(int n,
                                         const std::vector<Subset>& faces) {
  std::unordered_set<Subset> lookup(faces.begin(), faces.end());
  std::vector<Face> facets;
  for (Subset s : faces) {
    bool maximal = true;
    for (int e = 1; e <= n && maximal; ++e) {
      if (!s.contains(e) && lookup.contains(s.With(e))) maximal = false;
    }
    if (maximal) facets.push_back(FaceOf(s));
  }
  return SimplicialComplex::FromFacets(std::move(facets));
}

SimplicialComplex IndependenceComplex(const Matroid& m) {
  return SubsetComplex(m.n(), [&](Subset s) { return m.IsIndependent(s); });
}

SimplicialComplex CospanningComplex(const Matroid& m) {
  const int n = m.n();
  return SubsetComplex(
      n, [&](Subset s) { return m.IsSpanning(s.Complement(n)); });
}

SimplicialComplex NonspanningComplex(const Matroid& m) {
  const Subset ground = m.ground();
  return SubsetComplex(m.n(), [&](Subset s) {
    return s != ground && m.RankOf(s) < m.rank();
  });
}

}  // namespace trophom
