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

#ifndef MBW_WEIGHTS_H_
#define MBW_WEIGHTS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mbw/betti.h"
#include "mbw/matroid.h"
#include "mbw/subset.h"

namespace mbw {

// d_i = min{d : beta_{i,d} != 0} for i = 1..k. `table` must be the matroid's
// own table. Throws InconsistencyError if some column 1..k is empty.
std::vector<int> WeightsFromBetti(const BettiTable& table, int k);

// d_i = min{|s| : nullity(s) = i}, by a sweep over all subsets.
std::vector<int> WeightsBruteForce(const Matroid& m);

struct WeiDualityResult {
  // False when the matroid has loops or isthmuses.
  bool applicable = false;
  bool holds = false;
  std::vector<int> weights;
  std::vector<int> dual_weights;
  // Empty when the check holds; otherwise names a value hit twice or missed.
  std::string witness;
};

// Checks that {d_i(M)} and {n + 1 - d_j(dual M)} partition {1..n}.
WeiDualityResult CheckWeiDuality(const Matroid& m);

// |union of all circuits|, i.e. n minus the number of isthmuses.
int SupportSize(const Matroid& m);

struct MdsProfile {
  int n = 0;
  int k = 0;
  std::vector<int> weights;
  // Smallest h with d_i = n - k + i for all i >= h; nullopt if none.
  std::optional<int> mds_level;
  // Smallest h such that columns h..k of the Betti table occupy a single
  // diagram row (the tail P_h <- ... <- P_k is linear).
  std::optional<int> linear_tail_from;
  // Smallest h such that for all i >= h, beta_{i,d} = 0 for d != n - k + i
  // and beta_{i,n-k+i} != 0.
  std::optional<int> singleton_row_tail_from;
  Subset isthmuses = 0;
  bool alexander_dual_is_matroid = false;

  bool is_mds() const { return mds_level == 1; }
  bool isthmus_free() const { return isthmuses == 0; }
};

MdsProfile ProfileMds(const Matroid& m, const BettiTable& table);

// W(x, y) = sum over X of x^{r(E)-r(X)} y^{|X|-r(X)}.
class WhitneyPolynomial {
 public:
  // (x exponent, y exponent) -> coefficient, non-zero terms only.
  using Terms = std::map<std::pair<int, int>, std::int64_t>;

  WhitneyPolynomial() = default;
  explicit WhitneyPolynomial(Terms terms);

  const Terms& terms() const { return terms_; }
  std::int64_t Coefficient(int ex, int ey) const;
  // Sum of all coefficients; 2^n for an n-element ground set.
  std::int64_t Mass() const;
  // Coefficients of W(x, 0) indexed by x exponent.
  std::vector<std::int64_t> XPart() const;
  // "x^3 + x^2*y + 6*x^2 + ..." ordered by x exponent, then y exponent,
  // both descending.
  std::string ToString() const;

  friend bool operator==(const WhitneyPolynomial&,
                         const WhitneyPolynomial&) = default;

 private:
  Terms terms_;
};

WhitneyPolynomial ComputeWhitneyPolynomial(const Matroid& m);

struct CliffordGonality {
  // gonality[t - 1] = d_t.
  std::vector<int> gonality;
  // min{d_i - 2i : d_i <= r - 2 + i}; nullopt when no i qualifies.
  std::optional<int> clifford;
};

CliffordGonality ComputeCliffordAndGonality(const Matroid& m,
                                            std::span<const int> weights);

struct WeightReport {
  int n = 0;
  int k = 0;
  std::vector<int> weights;
  int support = 0;
  std::optional<int> mds_level;
  bool degenerate = false;
  WhitneyPolynomial whitney;
  CliffordGonality clifford_gonality;
};

// Weights are read off the matroid's Betti table.
WeightReport MakeWeightReport(const Matroid& m, const BettiTable& table);

// {"n","k","weights","support","mds_level","degenerate","whitney",
//  "clifford","gonality"} in that order.
nlohmann::ordered_json ToJson(const WeightReport& report);
nlohmann::ordered_json ToJson(const WhitneyPolynomial& w);

}  // namespace mbw

#endif  // MBW_WEIGHTS_H_
