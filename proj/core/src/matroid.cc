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

#include "mbw/matroid.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "mbw/errors.h"

namespace mbw {
namespace {

// Dense memo up to this ground size (2^24 bytes); hashed above it.
constexpr int kDenseMemoLimit = 24;

void CheckCap(int n, int max_ground) {
  if (n < 0) throw InputError("negative ground set size");
  const int cap = std::min(max_ground, kMaxGroundSize);
  if (n > cap) {
    throw CapExceeded("ground set of size " + std::to_string(n) +
                      " exceeds the enumeration cap of " +
                      std::to_string(cap) + " (raise it with --max-n)");
  }
}

void CheckWithinGround(int n, Subset s, const char* what) {
  if (!IsSubset(s, FullSet(n))) {
    throw InputError(std::string(what) + " " + FormatSubset(s) +
                     " is not contained in the ground set {1.." +
                     std::to_string(n) + "}");
  }
}

}  // namespace

struct Matroid::Impl {
  int n = 0;
  Provenance provenance = Provenance::kMatrix;
  std::function<int(Subset)> oracle;

  std::unique_ptr<std::atomic<std::int8_t>[]> dense;
  mutable std::shared_mutex mu;
  mutable std::unordered_map<Subset, int> sparse;

  int Rank(Subset s) const {
    if (dense) {
      std::atomic<std::int8_t>& slot = dense[s];
      std::int8_t v = slot.load(std::memory_order_relaxed);
      if (v < 0) {
        v = static_cast<std::int8_t>(oracle(s));
        slot.store(v, std::memory_order_relaxed);
      }
      return v;
    }
    {
      std::shared_lock lock(mu);
      auto it = sparse.find(s);
      if (it != sparse.end()) return it->second;
    }
    const int v = oracle(s);
    std::unique_lock lock(mu);
    sparse.emplace(s, v);
    return v;
  }
};

Matroid Matroid::Make(int n, Provenance provenance,
                      std::function<int(Subset)> oracle) {
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->provenance = provenance;
  impl->oracle = std::move(oracle);
  if (n <= kDenseMemoLimit) {
    const std::size_t size = std::size_t{1} << n;
    impl->dense = std::make_unique<std::atomic<std::int8_t>[]>(size);
    for (std::size_t i = 0; i < size; ++i) {
      impl->dense[i].store(-1, std::memory_order_relaxed);
    }
  }
  return Matroid(std::move(impl));
}

int Matroid::ground_size() const { return impl_->n; }

Provenance Matroid::provenance() const { return impl_->provenance; }

int Matroid::Rank(Subset s) const {
  if (!IsSubset(s, ground_set())) {
    throw std::out_of_range("subset " + FormatSubset(s) +
                            " exceeds the ground set");
  }
  return impl_->Rank(s);
}

Matroid Matroid::FromMatrix(const FieldMatrix& h, int max_ground) {
  CheckCap(h.cols(), max_ground);
  return Make(h.cols(), Provenance::kMatrix,
              [h](Subset s) { return ColumnRank(h, s); });
}

std::optional<std::string> BasisAxiomViolation(int n,
                                               std::span<const Subset> bases) {
  if (bases.empty()) return "a matroid needs at least one basis";
  std::vector<Subset> sorted(bases.begin(), bases.end());
  std::sort(sorted.begin(), sorted.end(), CanonicalLess);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const int r = Size(sorted.front());
  for (Subset b : sorted) {
    if (!IsSubset(b, FullSet(n))) {
      return "basis " + FormatSubset(b) +
             " is not contained in the ground set {1.." + std::to_string(n) +
             "}";
    }
    if (Size(b) != r) {
      return "bases " + FormatSubset(sorted.front()) + " and " +
             FormatSubset(b) + " have different cardinalities";
    }
  }
  const std::unordered_set<Subset> lookup(sorted.begin(), sorted.end());
  for (Subset b1 : sorted) {
    for (Subset b2 : sorted) {
      for (int x : Elements(b1 & ~b2)) {
        bool exchanged = false;
        for (int y : Elements(b2 & ~b1)) {
          if (lookup.contains((b1 & ~Singleton(x)) | Singleton(y))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          return "bases " + FormatSubset(b1) + " and " + FormatSubset(b2) +
                 " violate the exchange axiom at element " +
                 std::to_string(x + 1);
        }
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::FromBases(int n, std::span<const Subset> bases,
                           int max_ground) {
  CheckCap(n, max_ground);
  if (auto violation = BasisAxiomViolation(n, bases)) {
    throw InputError(*violation);
  }
  std::vector<Subset> sorted(bases.begin(), bases.end());
  std::sort(sorted.begin(), sorted.end(), CanonicalLess);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return Make(n, Provenance::kBases, [sorted](Subset s) {
    int best = 0;
    for (Subset b : sorted) best = std::max(best, Size(s & b));
    return best;
  });
}

Matroid Matroid::FromCircuits(int n, std::span<const Subset> circuits,
                              int max_ground) {
  CheckCap(n, max_ground);
  std::vector<Subset> sorted(circuits.begin(), circuits.end());
  std::sort(sorted.begin(), sorted.end(), CanonicalLess);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Subset c : sorted) {
    CheckWithinGround(n, c, "circuit");
    if (c == 0) throw InputError("the empty set cannot be a circuit");
  }
  for (Subset a : sorted) {
    for (Subset b : sorted) {
      if (a != b && IsSubset(a, b)) {
        throw InputError("circuit " + FormatSubset(a) +
                         " is contained in circuit " + FormatSubset(b));
      }
    }
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const Subset a = sorted[i];
      const Subset b = sorted[j];
      for (int x : Elements(a & b)) {
        const Subset target = (a | b) & ~Singleton(x);
        const bool found = std::any_of(
            sorted.begin(), sorted.end(),
            [target](Subset c) { return IsSubset(c, target); });
        if (!found) {
          throw InputError("circuits " + FormatSubset(a) + " and " +
                           FormatSubset(b) +
                           " violate circuit elimination at element " +
                           std::to_string(x + 1));
        }
      }
    }
  }
  return Make(n, Provenance::kCircuits, [sorted](Subset s) {
    // Greedy is exact for matroids.
    Subset independent = 0;
    for (int e : Elements(s)) {
      const Subset candidate = independent | Singleton(e);
      const bool dependent = std::any_of(
          sorted.begin(), sorted.end(),
          [candidate](Subset c) { return IsSubset(c, candidate); });
      if (!dependent) independent = candidate;
    }
    return Size(independent);
  });
}

Matroid Matroid::Uniform(int r, int n, int max_ground) {
  CheckCap(n, max_ground);
  if (r < 0 || r > n) {
    throw InputError("uniform matroid U(" + std::to_string(r) + "," +
                     std::to_string(n) + ") needs 0 <= r <= n");
  }
  return Make(n, Provenance::kUniform,
              [r](Subset s) { return std::min(Size(s), r); });
}

Matroid Matroid::Dual() const {
  const Matroid parent = *this;
  const Subset ground = ground_set();
  const int total = rank();
  return Make(ground_size(), Provenance::kDual,
              [parent, ground, total](Subset s) {
                return Size(s) + parent.Rank(ground & ~s) - total;
              });
}

Matroid Matroid::Restriction(Subset sigma) const {
  if (!IsSubset(sigma, ground_set())) {
    throw InputError("restriction set " + FormatSubset(sigma) +
                     " is not contained in the ground set");
  }
  const Matroid parent = *this;
  const std::vector<int> elements = Elements(sigma);
  return Make(static_cast<int>(elements.size()), Provenance::kRestriction,
              [parent, elements](Subset s) {
                Subset expanded = 0;
                for (int i : Elements(s)) expanded |= Singleton(elements[i]);
                return parent.Rank(expanded);
              });
}

std::vector<Subset> Matroid::Bases() const {
  std::vector<Subset> out;
  for (Subset s : SubsetsOfSize(ground_size(), rank())) {
    if (IsIndependent(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

std::vector<Subset> Circuits(const Matroid& m) {
  const int n = m.ground_size();
  std::vector<Subset> found;
  for (int size = 1; size <= n; ++size) {
    const std::size_t smaller = found.size();
    for (Subset s : SubsetsOfSize(n, size)) {
      const bool pruned =
          std::any_of(found.begin(), found.begin() + smaller,
                      [s](Subset c) { return IsSubset(c, s); });
      if (pruned) continue;
      // Every proper subset is independent here, so dependence means circuit.
      if (m.Rank(s) < size) found.push_back(s);
    }
  }
  std::sort(found.begin(), found.end(), CanonicalLess);
  return found;
}

LoopsAndIsthmuses FindLoopsAndIsthmuses(const Matroid& m) {
  LoopsAndIsthmuses out;
  const Subset ground = m.ground_set();
  const int total = m.rank();
  for (int x = 0; x < m.ground_size(); ++x) {
    if (m.Rank(Singleton(x)) == 0) out.loops |= Singleton(x);
    if (m.Rank(ground & ~Singleton(x)) < total) out.isthmuses |= Singleton(x);
  }
  return out;
}

namespace {

bool IsCircuit(const Matroid& m, Subset c) {
  if (c == 0 || m.IsIndependent(c)) return false;
  for (int x : Elements(c)) {
    if (!m.IsIndependent(c & ~Singleton(x))) return false;
  }
  return true;
}

Subset UnionExcept(std::span<const Subset> family, std::size_t skip) {
  Subset u = 0;
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (j != skip) u |= family[j];
  }
  return u;
}

}  // namespace

std::vector<int> PrivateElements(std::span<const Subset> family) {
  std::vector<int> out;
  out.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Subset own = family[i] & ~UnionExcept(family, i);
    out.push_back(own == 0 ? -1 : std::countr_zero(own));
  }
  return out;
}

bool IsNonredundant(const Matroid& m, std::span<const Subset> circuits) {
  for (Subset c : circuits) {
    if (!IsSubset(c, m.ground_set()) || !IsCircuit(m, c)) {
      throw InputError(FormatSubset(c) + " is not a circuit of the matroid");
    }
  }
  const std::vector<int> priv = PrivateElements(circuits);
  return std::none_of(priv.begin(), priv.end(), [](int x) { return x < 0; });
}

namespace {

std::vector<Subset> NonredundantWitness(const Matroid& m, Subset sigma,
                                        const std::vector<Subset>& circuits) {
  const int d = m.Nullity(sigma);
  if (d == 0) return {};
  auto first = std::find_if(circuits.begin(), circuits.end(),
                            [sigma](Subset c) { return IsSubset(c, sigma); });
  if (first == circuits.end()) {
    throw InconsistencyError("dependent set " + FormatSubset(sigma) +
                             " contains no circuit");
  }
  const int x = std::countr_zero(*first);
  std::vector<Subset> family =
      NonredundantWitness(m, sigma & ~Singleton(x), circuits);
  if (static_cast<int>(family.size()) == d) return family;

  // Extend by a circuit through x holding the fewest private elements; circuit
  // elimination guarantees the minimum is zero.
  Subset private_mask = 0;
  for (int p : PrivateElements(family)) private_mask |= Singleton(p);
  Subset best = 0;
  int best_count = -1;
  for (Subset c : circuits) {
    if (!IsSubset(c, sigma) || !Contains(c, x)) continue;
    const int count = Size(c & private_mask);
    if (best_count < 0 || count < best_count) {
      best = c;
      best_count = count;
    }
  }
  if (best_count != 0) {
    throw InconsistencyError("no circuit through element " +
                             std::to_string(x + 1) +
                             " avoids the private elements");
  }
  family.push_back(best);
  return family;
}

}  // namespace

NonredundancyResult NonredundancyDegree(const Matroid& m, Subset sigma) {
  if (!IsSubset(sigma, m.ground_set())) {
    throw InputError(FormatSubset(sigma) + " is not contained in the ground set");
  }
  const std::vector<Subset> circuits = Circuits(m);
  NonredundancyResult result;
  result.degree = m.Nullity(sigma);
  result.witness = NonredundantWitness(m, sigma, circuits);
  if (static_cast<int>(result.witness.size()) != result.degree) {
    throw InconsistencyError("non-redundant witness of size " +
                             std::to_string(result.witness.size()) +
                             " for nullity " + std::to_string(result.degree));
  }
  return result;
}

}  // namespace mbw
