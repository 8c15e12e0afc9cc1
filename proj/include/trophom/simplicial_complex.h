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

#ifndef TROPHOM_SIMPLICIAL_COMPLEX_H_
#define TROPHOM_SIMPLICIAL_COMPLEX_H_

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "trophom/matroid.h"
#include "trophom/subset.h"

namespace trophom {

// Sorted list of vertex ids.
using Face = std::vector<int>;

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

// Finite abstract simplicial complex given by its facets. Vertex ids are
// opaque integers; callers keep their own id -> object tables.
//
// The void complex (no faces at all) is distinct from {∅} (only the empty
// face); FromFacets({}) is void and FromFacets({{}}) is {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex();  // void
  // Discards non-maximal entries and duplicates; vertex lists need not be
  // sorted.
  static SimplicialComplex FromFacets(std::vector<Face> facets);
  static SimplicialComplex Void() { return SimplicialComplex(); }
  static SimplicialComplex EmptyFace() { return FromFacets({Face{}}); }
  // Full simplex on the given vertices, with all its faces.
  static SimplicialComplex Simplex(Face vertices);

  bool is_void() const { return facets_.empty(); }
  // -1 for {∅}; -2 for the void complex.
  int dimension() const;
  const std::vector<Face>& facets() const { return facets_; }
  std::vector<int> Vertices() const;
  bool IsPure() const;
  bool Contains(const Face& face) const;

  // faces_by_dimension()[k + 1] lists the k-faces in lexicographic order,
  // starting with the empty face at index 0 (absent for the void complex).
  // Computed once on first use; safe for concurrent readers.
  const std::vector<std::vector<Face>>& FacesByDimension() const;
  std::size_t NumFaces() const;
  // Index of a face inside its dimension list, or -1.
  int IndexOf(const Face& face) const;

  // Facets equal as sets.
  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

  std::string ToString() const;  // sorted facet list

 private:
  struct FaceCache {
    std::once_flag once;
    std::vector<std::vector<Face>> by_dim;
    std::vector<std::unordered_map<Face, int, FaceHash>> index;
  };
  void BuildCache() const;

  std::vector<Face> facets_;  // sorted, maximal, each sorted
  std::shared_ptr<FaceCache> cache_;
};

// Lk_σ Δ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}; Lk_∅ Δ = Δ.
SimplicialComplex Link(const SimplicialComplex& complex, const Face& face);
// Closed star: {τ : τ ∪ σ ∈ Δ}.
SimplicialComplex Star(const SimplicialComplex& complex, const Face& face);
// Δ − Γ: the faces of Δ that use no vertex of Γ. Throws kNotASubcomplex if Γ
// is not contained in Δ.
SimplicialComplex Delete(const SimplicialComplex& complex,
                         const SimplicialComplex& sub);
// Faces of Δ avoiding the given vertices.
SimplicialComplex DeleteVertices(const SimplicialComplex& complex,
                                 const std::vector<int>& vertices);
// Faces of Δ using only the given vertices.
SimplicialComplex InducedSubcomplex(const SimplicialComplex& complex,
                                    const std::vector<int>& vertices);
// Throws kInvalidParameters if the vertex sets meet.
SimplicialComplex Join(const SimplicialComplex& a, const SimplicialComplex& b);
// Join with a new vertex `apex` (default: one more than the largest vertex).
SimplicialComplex Cone(const SimplicialComplex& complex, int apex = -1);
// {σ ⊆ ground : ground ∖ σ ∉ Δ}. Vertices of Δ must lie in `ground`.
SimplicialComplex AlexanderDual(const SimplicialComplex& complex,
                                const std::vector<int>& ground);

// Complexes on the ground set of a matroid, vertices = elements 1..n.
SimplicialComplex IndependenceComplex(const Matroid& m);
// {τ : [n] ∖ τ spans M}.
SimplicialComplex CospanningComplex(const Matroid& m);
// {σ ⊊ [n] : rank(σ) < rank(M)}.
SimplicialComplex NonspanningComplex(const Matroid& m);
// Complex whose faces are the subsets of [n] satisfying a downward-closed
// predicate (enumerates all 2^n subsets).
template <class Predicate>
SimplicialComplex SubsetComplex(int n, Predicate is_face);

// Vertex list of a subset, in the element-as-vertex convention.
Face FaceOf(Subset s);

}  // namespace trophom

// Template definition.
namespace trophom {

SimplicialComplex SubsetComplexFromMasks(int n,
                                         const std::vector<Subset>& faces);

template <class Predicate>
SimplicialComplex SubsetComplex(int n, Predicate is_face) {
  std::vector<Subset> faces;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    if (is_face(Subset(bits))) faces.emplace_back(bits);
  }
  return SubsetComplexFromMasks(n, faces);
}

}  // namespace trophom

#endif  // TROPHOM_SIMPLICIAL_COMPLEX_H_
