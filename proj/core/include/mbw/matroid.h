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

#ifndef MBW_MATROID_H_
#define MBW_MATROID_H_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbw/finite_field.h"
#include "mbw/subset.h"

namespace mbw {

enum class Provenance { kMatrix, kBases, kCircuits, kUniform, kDual, kRestriction };

// A matroid on {0..n-1} given by its rank function.
//
// Matroids are immutable values; copies share the underlying rank oracle and
// its memo. The memo is safe for concurrent readers and writers, so a single
// Matroid may be queried from any number of threads.
class Matroid {
 public:
  // Column matroid of a parity-check matrix: rank(s) is the rank of the
  // selected columns. Throws CapExceeded if cols > max_ground.
  static Matroid FromMatrix(const FieldMatrix& h,
                            int max_ground = kDefaultGroundCap);

  // rank(s) = max |s & B| over bases B. The basis family is validated
  // (non-empty, equicardinal, basis exchange); violations throw InputError
  // naming a violating pair.
  static Matroid FromBases(int n, std::span<const Subset> bases,
                           int max_ground = kDefaultGroundCap);

  // rank(s) = size of a largest subset of s containing no listed circuit.
  // The family is validated against the circuit axioms.
  static Matroid FromCircuits(int n, std::span<const Subset> circuits,
                              int max_ground = kDefaultGroundCap);

  // U(r, n): rank(s) = min(|s|, r).
  static Matroid Uniform(int r, int n, int max_ground = kDefaultGroundCap);

  int ground_size() const;
  Subset ground_set() const { return FullSet(ground_size()); }
  Provenance provenance() const;

  int Rank(Subset s) const;
  int Nullity(Subset s) const { return Size(s) - Rank(s); }
  int rank() const { return Rank(ground_set()); }
  bool IsIndependent(Subset s) const { return Rank(s) == Size(s); }

  // rank*(s) = |s| + rank(E - s) - rank(E).
  Matroid Dual() const;
  // Matroid on the elements of `sigma`, reindexed to 0..|sigma|-1 in
  // increasing order.
  Matroid Restriction(Subset sigma) const;

  // Bases in canonical order.
  std::vector<Subset> Bases() const;

 private:
  struct Impl;
  explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static Matroid Make(int n, Provenance provenance,
                      std::function<int(Subset)> oracle);

  std::shared_ptr<const Impl> impl_;
};

// Describes the first violation of the basis axioms (non-empty, equicardinal,
// exchange) found in `bases`, or nullopt if they form a matroid.
std::optional<std::string> BasisAxiomViolation(int n,
                                               std::span<const Subset> bases);

// Minimal dependent sets, found breadth-first by cardinality with pruning of
// supersets of circuits already discovered. Canonical order.
std::vector<Subset> Circuits(const Matroid& m);

struct LoopsAndIsthmuses {
  Subset loops = 0;
  Subset isthmuses = 0;
};
LoopsAndIsthmuses FindLoopsAndIsthmuses(const Matroid& m);

// True iff every member owns an element contained in no other member.
// Throws InputError if some member is not a circuit of `m`.
bool IsNonredundant(const Matroid& m, std::span<const Subset> circuits);

struct NonredundancyResult {
  int degree = 0;
  // `degree` pairwise non-redundant circuits contained in sigma.
  std::vector<Subset> witness;
};

// Maximal number of non-redundant circuits inside sigma, which always equals
// the nullity of sigma. The witness family is built by removing one element
// of a circuit, recursing, and extending with a circuit through the removed
// element that avoids the private elements of the family.
NonredundancyResult NonredundancyDegree(const Matroid& m, Subset sigma);

// Private element chosen for each member of a non-redundant family: the
// smallest element of the member contained in no other member.
std::vector<int> PrivateElements(std::span<const Subset> family);

}  // namespace mbw

#endif  // MBW_MATROID_H_
