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

#include "mbw/simplicial_complex.h"

#include <algorithm>
#include <array>

#include "mbw/errors.h"

namespace mbw {
namespace {

// Indicator over all 2^n subsets of the faces generated by `facets`.
std::vector<std::uint8_t> FaceIndicator(int n, std::span<const Subset> facets) {
  std::vector<std::uint8_t> face(std::size_t{1} << n, 0);
  for (Subset f : facets) {
    if (face[f]) continue;
    // Walk every submask of f.
    Subset s = f;
    while (true) {
      face[s] = 1;
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  return face;
}

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<Subset> generators)
    : n_(n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InputError("ground set size out of range");
  }
  for (Subset g : generators) {
    if (!IsSubset(g, FullSet(n))) {
      throw InputError("face " + FormatSubset(g) +
                       " is not contained in the ground set");
    }
  }
  std::sort(generators.begin(), generators.end(),
            [](Subset a, Subset b) { return CanonicalLess(b, a); });
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (Subset g : generators) {
    const bool covered = std::any_of(facets_.begin(), facets_.end(),
                                     [g](Subset f) { return IsSubset(g, f); });
    if (!covered) facets_.push_back(g);
  }
  std::sort(facets_.begin(), facets_.end(), CanonicalLess);
}

bool SimplicialComplex::IsFace(Subset s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [s](Subset f) { return IsSubset(s, f); });
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  return Size(facets_.back()) - 1;
}

std::vector<Subset> SimplicialComplex::Faces() const {
  const std::vector<std::uint8_t> face = FaceIndicator(n_, facets_);
  std::vector<Subset> out;
  for (std::size_t s = 0; s < face.size(); ++s) {
    if (face[s]) out.push_back(static_cast<Subset>(s));
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

std::vector<Subset> SimplicialComplex::MinimalNonFaces() const {
  const std::vector<std::uint8_t> face = FaceIndicator(n_, facets_);
  std::vector<Subset> out;
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (face[i]) continue;
    const Subset s = static_cast<Subset>(i);
    bool minimal = true;
    for (int x : Elements(s)) {
      if (!face[s & ~Singleton(x)]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

std::int64_t ChainComplexDims::EulerCharacteristic() const {
  std::int64_t chi = 0;
  for (std::size_t idx = 0; idx < dims_.size(); ++idx) {
    // idx = i + 1, so (-1)^i = -(-1)^idx.
    chi += (idx % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(dims_[idx]);
  }
  return chi;
}

SimplicialComplex IndependenceComplex(const Matroid& m) {
  return SimplicialComplex(m.ground_size(), m.Bases());
}

SimplicialComplex AlexanderDual(const SimplicialComplex& delta) {
  const Subset ground = FullSet(delta.ground_size());
  std::vector<Subset> facets;
  for (Subset s : delta.MinimalNonFaces()) facets.push_back(ground & ~s);
  return SimplicialComplex(delta.ground_size(), std::move(facets));
}

SimplicialComplex Restrict(const SimplicialComplex& delta, Subset sigma) {
  if (!IsSubset(sigma, FullSet(delta.ground_size()))) {
    throw InputError("restriction set exceeds the ground set");
  }
  std::vector<Subset> generators;
  generators.reserve(delta.facets().size());
  for (Subset f : delta.facets()) generators.push_back(f & sigma);
  return SimplicialComplex(delta.ground_size(), std::move(generators));
}

FieldMatrix BoundaryMatrix(std::span<const Subset> higher,
                           std::span<const Subset> lower,
                           const PrimeField& field) {
  FieldMatrix d(field, static_cast<int>(lower.size()),
                static_cast<int>(higher.size()));
  for (std::size_t j = 0; j < higher.size(); ++j) {
    int position = 0;
    for (int x : Elements(higher[j])) {
      const Subset face = higher[j] & ~Singleton(x);
      auto it = std::lower_bound(lower.begin(), lower.end(), face);
      if (it == lower.end() || *it != face) {
        throw InputError("face set is not closed under subsets");
      }
      d.set(static_cast<int>(it - lower.begin()), static_cast<int>(j),
            position % 2 == 0 ? 1 : -1);
      ++position;
    }
  }
  return d;
}

ChainComplexDims ReducedHomologyOfFaces(int n, std::span<const Subset> faces,
                                        const PrimeField& field) {
  // by_size[c] holds the faces of cardinality c, ascending.
  std::vector<std::vector<Subset>> by_size(n + 1);
  for (Subset f : faces) by_size[Size(f)].push_back(f);
  for (auto& bucket : by_size) std::sort(bucket.begin(), bucket.end());

  // rank_into[c] = rank of the boundary from size c to size c - 1.
  std::vector<int> rank_into(n + 2, 0);
  for (int c = 1; c <= n; ++c) {
    if (by_size[c].empty() || by_size[c - 1].empty()) continue;
    rank_into[c] = Rank(BoundaryMatrix(by_size[c], by_size[c - 1], field));
  }
  std::vector<int> dims(n + 1, 0);
  for (int c = 0; c <= n; ++c) {
    const int chains = static_cast<int>(by_size[c].size());
    dims[c] = chains - rank_into[c] - rank_into[c + 1];
  }
  return ChainComplexDims(std::move(dims));
}

ChainComplexDims ReducedHomology(const SimplicialComplex& delta,
                                 const PrimeField& field) {
  const std::vector<Subset> faces = delta.Faces();
  return ReducedHomologyOfFaces(delta.ground_size(), faces, field);
}

std::vector<std::int64_t> FVector(const SimplicialComplex& delta) {
  std::vector<std::int64_t> f;
  for (Subset s : delta.Faces()) {
    const std::size_t c = Size(s);
    if (f.size() <= c) f.resize(c + 1, 0);
    ++f[c];
  }
  return f;
}

std::int64_t ReducedEulerCharacteristic(const SimplicialComplex& delta) {
  const std::vector<std::int64_t> f = FVector(delta);
  std::int64_t chi = 0;
  for (std::size_t c = 0; c < f.size(); ++c) {
    chi += (c % 2 == 0 ? -1 : 1) * f[c];
  }
  return chi;
}

std::vector<std::int64_t> HVectorFromF(std::span<const std::int64_t> f,
                                       int rank) {
  std::vector<std::int64_t> h(rank + 1, 0);
  for (int j = 0; j <= rank; ++j) {
    std::int64_t acc = 0;
    for (int i = 0; i <= j; ++i) {
      const std::int64_t fi = i < static_cast<int>(f.size()) ? f[i] : 0;
      const std::int64_t term = fi * Binomial(rank - i, j - i);
      acc += (j - i) % 2 == 0 ? term : -term;
    }
    h[j] = acc;
  }
  return h;
}

std::vector<std::int64_t> HVector(const SimplicialComplex& delta, int rank) {
  const std::vector<std::int64_t> f = FVector(delta);
  return HVectorFromF(f, rank);
}

bool IsMatroidComplex(const SimplicialComplex& delta) {
  return !BasisAxiomViolation(delta.ground_size(), delta.facets()).has_value();
}

}  // namespace mbw
