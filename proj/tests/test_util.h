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

#ifndef MBW_TESTS_TEST_UTIL_H_
#define MBW_TESTS_TEST_UTIL_H_

// Paper fixtures, random instance generators, and brute-force oracles shared
// by the unit, property, and acceptance suites. The oracles work directly
// from definitions and never call the code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mbw/finite_field.h"
#include "mbw/matroid.h"
#include "mbw/subset.h"

namespace mbw::testing {

inline FieldMatrix Mat(std::int64_t p,
                       const std::vector<std::vector<std::int64_t>>& rows) {
  return FieldMatrix::FromRows(PrimeField(p), rows);
}

inline std::vector<Subset> Sets(
    std::initializer_list<std::initializer_list<int>> one_based) {
  std::vector<Subset> out;
  for (auto s : one_based) out.push_back(FromOneBased(s));
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

inline std::vector<Subset> Canonical(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess);
  return sets;
}

inline FieldMatrix H1() {
  return Mat(2, {{1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 1, 1, 0}});
}
inline FieldMatrix H2() { return Mat(2, {{1, 0, 1, 1}, {0, 1, 1, 1}}); }
inline FieldMatrix H3() { return Mat(2, {{1, 0, 0, 1}, {0, 1, 1, 0}}); }
inline FieldMatrix H4() { return Mat(2, {{1, 0, 0, 0}, {0, 1, 1, 1}}); }
inline FieldMatrix H5() { return Mat(2, {{1, 1, 0, 1}, {0, 1, 1, 1}}); }
inline FieldMatrix H6() {
  return Mat(2, {{1, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 1}, {0, 0, 1, 1, 0, 1}});
}
inline FieldMatrix G7() {
  return Mat(5, {{1, 0, 1, 1, 1, 1}, {0, 0, 1, 2, 3, 4}, {0, 0, 1, 4, 4, 1}});
}
inline FieldMatrix H8() {
  return Mat(5, {{0, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 1}, {0, 0, 1, 1, 0, 1}});
}
inline FieldMatrix H9() {
  return Mat(5, {{0, 1, 0, 1, 1, 1}, {0, 0, 1, 1, 2, 3}, {1, 0, 0, 0, 0, 1}});
}

inline std::vector<Subset> B1() {
  return Sets({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
               {2, 3, 4}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}, {2, 5, 6},
               {3, 4, 5}, {3, 4, 6}, {3, 5, 6}});
}
inline std::vector<Subset> C1() {
  return Sets({{1, 2, 3, 4}, {1, 4, 5}, {1, 6}, {2, 3, 4, 6}, {2, 3, 5},
               {4, 5, 6}});
}
inline std::vector<Subset> B2() {
  return Sets({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}
inline std::vector<Subset> B3() { return Sets({{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }
inline std::vector<Subset> B4() { return Sets({{1, 2}, {1, 3}, {1, 4}}); }
inline std::vector<Subset> B5() {
  return Sets({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
}
inline std::vector<Subset> B6() {
  return Sets({{1, 2, 3}, {1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6},
               {1, 4, 5}, {1, 4, 6}, {1, 5, 6}, {2, 3, 4}, {2, 3, 5},
               {2, 4, 5}, {2, 4, 6}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6},
               {3, 5, 6}});
}
// The 3-subsets of {1..6} containing 2.
inline std::vector<Subset> B7() {
  std::vector<Subset> out;
  for (Subset s : SubsetsOfSize(6, 3)) {
    if (Contains(s, 1)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}
inline std::vector<Subset> B8() { return B6(); }
inline std::vector<Subset> B9() {
  return Sets({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4},
               {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {1, 5, 6},
               {2, 3, 6}, {2, 4, 6}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6},
               {4, 5, 6}});
}

inline Matroid M1() { return Matroid::FromMatrix(H1()); }
inline Matroid M7() { return Matroid::FromBases(6, B7()); }

// Random dense matrix over GF(p) with n columns and 1..max_rows rows.
inline FieldMatrix RandomMatrix(std::mt19937& rng, std::int64_t p, int n,
                                int max_rows) {
  std::uniform_int_distribution<int> rows_dist(1, max_rows);
  std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
  const int rows = rows_dist(rng);
  FieldMatrix m(PrimeField(p), rows, n);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < n; ++c) m.set(r, c, entry(rng));
  }
  return m;
}

inline std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// ---------------------------------------------------------------------------
// Oracles.

// Rank of a column subset by enumerating all linear combinations: the rank is
// log_p of the number of distinct vectors in the span. Only for tiny inputs.
inline int SpanRankOracle(const FieldMatrix& m, Subset cols) {
  const std::vector<int> idx = Elements(cols);
  const std::int64_t p = m.field().modulus();
  std::set<std::vector<Residue>> span;
  std::vector<int> coeff(idx.size(), 0);
  while (true) {
    std::vector<Residue> v(m.rows(), 0);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      for (int r = 0; r < m.rows(); ++r) {
        v[r] = static_cast<Residue>((v[r] + coeff[j] * m.at(r, idx[j])) % p);
      }
    }
    span.insert(v);
    std::size_t j = 0;
    while (j < coeff.size() && ++coeff[j] == p) coeff[j++] = 0;
    if (j == coeff.size()) break;
  }
  int rank = 0;
  for (std::size_t size = 1; size < span.size(); size *= p) ++rank;
  return rank;
}

// Minimal dependent sets straight from the definition: dependent, and every
// proper subset independent (checked over all proper subsets).
inline std::vector<Subset> CircuitsOracle(const Matroid& m) {
  std::vector<Subset> out;
  const std::size_t count = std::size_t{1} << m.ground_size();
  for (std::size_t idx = 1; idx < count; ++idx) {
    const Subset s = static_cast<Subset>(idx);
    if (m.Rank(s) == Size(s)) continue;
    bool minimal = true;
    for (Subset t = (s - 1) & s; minimal; t = (t - 1) & s) {
      if (m.Rank(t) < Size(t)) minimal = false;
      if (t == 0) break;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

// Largest non-redundant family of circuits inside sigma. A family of size m
// exists iff there are m elements P of sigma such that every p in P lies in a
// circuit inside sigma avoiding P - {p}; enumerate all P.
inline int NonredundancyOracle(const std::vector<Subset>& circuits,
                               Subset sigma) {
  std::vector<Subset> inside;
  for (Subset c : circuits) {
    if (IsSubset(c, sigma)) inside.push_back(c);
  }
  int best = 0;
  Subset p = sigma;
  while (true) {
    if (Size(p) > best) {
      bool ok = true;
      for (int x : Elements(p)) {
        const Subset others = p & ~Singleton(x);
        const bool found = std::any_of(
            inside.begin(), inside.end(), [&](Subset c) {
              return Contains(c, x) && (c & others) == 0;
            });
        if (!found) {
          ok = false;
          break;
        }
      }
      if (ok) best = Size(p);
    }
    if (p == 0) break;
    p = (p - 1) & sigma;
  }
  return best;
}

// h-vector by multiplying out sum_i f_{i-1} (t-1)^{r-i} with explicit
// polynomial arithmetic. f[c] counts faces of cardinality c.
inline std::vector<std::int64_t> HVectorOracle(
    const std::vector<std::int64_t>& f, int r) {
  std::vector<std::int64_t> total(r + 1, 0);  // coefficient of t^j
  for (int i = 0; i <= r; ++i) {
    const std::int64_t fi = i < static_cast<int>(f.size()) ? f[i] : 0;
    std::vector<std::int64_t> poly = {1};
    for (int step = 0; step < r - i; ++step) {
      std::vector<std::int64_t> next(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j];
        next[j] -= poly[j];
      }
      poly = std::move(next);
    }
    for (std::size_t j = 0; j < poly.size(); ++j) total[j] += fi * poly[j];
  }
  // h_j is the coefficient of t^{r-j}.
  std::vector<std::int64_t> h(r + 1);
  for (int j = 0; j <= r; ++j) h[j] = total[r - j];
  return h;
}

// Clifford index straight from the subset definition:
// min |A| - 2 n(A) over A with n(A) >= 1 and |A| <= n(A) + r - 2.
inline std::optional<int> CliffordOracle(const Matroid& m) {
  std::optional<int> best;
  const int r = m.rank();
  const std::size_t count = std::size_t{1} << m.ground_size();
  for (std::size_t idx = 0; idx < count; ++idx) {
    const Subset a = static_cast<Subset>(idx);
    const int null = m.Nullity(a);
    if (null < 1 || Size(a) > null + r - 2) continue;
    const int v = Size(a) - 2 * null;
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace mbw::testing

#endif  // MBW_TESTS_TEST_UTIL_H_
