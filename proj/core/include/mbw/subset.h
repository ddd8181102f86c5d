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

#ifndef MBW_SUBSET_H_
#define MBW_SUBSET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mbw {

// A subset of a ground set {0, ..., n-1}, one bit per element.
using Subset = std::uint32_t;

// Hard limit imposed by the bitmask width.
inline constexpr int kMaxGroundSize = 30;
// Default enumeration cap; every sweep is 2^n.
inline constexpr int kDefaultGroundCap = 20;

inline constexpr Subset FullSet(int n) {
  return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline constexpr int Size(Subset s) { return std::popcount(s); }

inline constexpr bool Contains(Subset s, int element) {
  return (s >> element) & 1u;
}

inline constexpr bool IsSubset(Subset inner, Subset outer) {
  return (inner & ~outer) == 0;
}

inline constexpr Subset Singleton(int element) { return Subset{1} << element; }

// Builds a subset from 0-based element indices.
inline Subset MakeSubset(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) s |= Singleton(e);
  return s;
}

// Builds a subset from 1-based element indices.
inline Subset FromOneBased(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) s |= Singleton(e - 1);
  return s;
}

// Elements of `s` in increasing order, 0-based.
inline std::vector<int> Elements(Subset s) {
  std::vector<int> out;
  out.reserve(Size(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

// Elements of `s` in increasing order, 1-based.
inline std::vector<int> OneBasedElements(Subset s) {
  std::vector<int> out = Elements(s);
  for (int& e : out) ++e;
  return out;
}

// "{1,4,5}" with 1-based indices.
inline std::string FormatSubset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : OneBasedElements(s)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

// Orders by cardinality, then lexicographically on the sorted element list.
inline bool CanonicalLess(Subset a, Subset b) {
  const int sa = Size(a);
  const int sb = Size(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  const Subset lowest_difference = (a ^ b) & -(a ^ b);
  return (a & lowest_difference) != 0;
}

// Next subset with the same cardinality in numeric order (Gosper's hack).
// Returns 0 once the subsets of the ground set are exhausted.
inline Subset NextSameSize(Subset s, int n) {
  if (s == 0) return 0;
  const Subset c = s & -s;
  const std::uint64_t r = std::uint64_t{s} + c;
  if (r >> n) return 0;
  const Subset next = static_cast<Subset>(r) |
                      static_cast<Subset>(((std::uint64_t{s} ^ r) >> 2) /
                                          c);
  return next;
}

// All k-subsets of {0..n-1} in numeric order.
inline std::vector<Subset> SubsetsOfSize(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {0};
  for (Subset s = FullSet(k); s != 0; s = NextSameSize(s, n)) out.push_back(s);
  return out;
}

}  // namespace mbw

#endif  // MBW_SUBSET_H_
