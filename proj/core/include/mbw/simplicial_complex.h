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

#ifndef MBW_SIMPLICIAL_COMPLEX_H_
#define MBW_SIMPLICIAL_COMPLEX_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mbw/finite_field.h"
#include "mbw/matroid.h"
#include "mbw/subset.h"

namespace mbw {

// A simplicial complex on {0..n-1}, stored by its facets.
//
// The void complex (no faces at all) has no facets; the complex {emptyset}
// has the single facet 0.
class SimplicialComplex {
 public:
  // Keeps the inclusion-maximal members of `generators`.
  SimplicialComplex(int n, std::vector<Subset> generators);
  static SimplicialComplex Void(int n) { return SimplicialComplex(n, {}); }

  int ground_size() const { return n_; }
  // Antichain in canonical order.
  const std::vector<Subset>& facets() const { return facets_; }
  bool IsVoid() const { return facets_.empty(); }
  bool IsFace(Subset s) const;
  // Dimension of the largest face; -1 for {emptyset}, -2 for the void complex.
  int dimension() const;

  // All faces in canonical order.
  std::vector<Subset> Faces() const;
  // Inclusion-minimal subsets that are not faces, in canonical order.
  std::vector<Subset> MinimalNonFaces() const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  int n_;
  std::vector<Subset> facets_;
};

// Reduced homology dimensions h_{-1}, h_0, ..., h_{n-1}.
class ChainComplexDims {
 public:
  explicit ChainComplexDims(std::vector<int> dims) : dims_(std::move(dims)) {}
  // h_i for i >= -1; zero outside the stored range.
  int at(int i) const {
    const int idx = i + 1;
    return idx >= 0 && idx < static_cast<int>(dims_.size()) ? dims_[idx] : 0;
  }
  const std::vector<int>& dims() const { return dims_; }
  // Alternating sum of the homology dimensions.
  std::int64_t EulerCharacteristic() const;

  friend bool operator==(const ChainComplexDims&,
                         const ChainComplexDims&) = default;

 private:
  std::vector<int> dims_;
};

// Facets are the bases of m.
SimplicialComplex IndependenceComplex(const Matroid& m);

// Facets are the complements of the minimal non-faces.
SimplicialComplex AlexanderDual(const SimplicialComplex& delta);

// Faces {t & sigma : t in delta}, on the same ground set.
SimplicialComplex Restrict(const SimplicialComplex& delta, Subset sigma);

// Boundary map from the faces of `higher` (all of one cardinality c) to the
// faces of `lower` (cardinality c - 1). Column j is the image of higher[j];
// the element at 0-based position k of a face contributes sign (-1)^k.
// `lower` must be sorted ascending.
FieldMatrix BoundaryMatrix(std::span<const Subset> higher,
                           std::span<const Subset> lower,
                           const PrimeField& field);

// Reduced homology over GF(p), computed from ranks of boundary matrices.
ChainComplexDims ReducedHomology(const SimplicialComplex& delta,
                                 const PrimeField& field);

// Same as above for the complex whose faces are exactly `faces` (assumed
// closed under subsets).
ChainComplexDims ReducedHomologyOfFaces(int n, std::span<const Subset> faces,
                                        const PrimeField& field);

// sum_{i >= -1} (-1)^i f_i, with f_{-1} = 1 for a non-void complex.
std::int64_t ReducedEulerCharacteristic(const SimplicialComplex& delta);

// (f_{-1}, f_0, ..., f_{dim}).
std::vector<std::int64_t> FVector(const SimplicialComplex& delta);

// h-vector (h_0..h_rank) from
//   sum_i f_{i-1} (t-1)^{rank-i} = sum_i h_i t^{rank-i}.
std::vector<std::int64_t> HVector(const SimplicialComplex& delta, int rank);
std::vector<std::int64_t> HVectorFromF(std::span<const std::int64_t> f,
                                       int rank);

// True iff `delta` is the independence complex of some matroid, i.e. its
// facets satisfy the basis exchange axiom.
bool IsMatroidComplex(const SimplicialComplex& delta);

}  // namespace mbw

#endif  // MBW_SIMPLICIAL_COMPLEX_H_
