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

#ifndef MBW_BETTI_H_
#define MBW_BETTI_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mbw/finite_field.h"
#include "mbw/matroid.h"
#include "mbw/simplicial_complex.h"
#include "mbw/subset.h"

namespace mbw {

struct FineEntry {
  int i = 0;
  Subset sigma = 0;
  std::int64_t beta = 0;

  friend bool operator==(const FineEntry&, const FineEntry&) = default;
};

// Finely graded Betti numbers beta_{i,sigma} of a Stanley-Reisner ring, with
// the N-graded and global aggregations.
//
// Only non-zero entries are stored. The graded and global views are exact
// sums of the fine entries and are built once at construction.
class BettiTable {
 public:
  BettiTable() = default;
  // Drops zero entries; throws InputError on a repeated (i, sigma) key.
  BettiTable(int n, std::vector<FineEntry> entries);

  int ground_size() const { return n_; }
  // Sorted by i, then canonically by sigma.
  const std::vector<FineEntry>& fine() const { return fine_; }
  // (i, d) -> beta_{i,d}, non-zero entries only.
  const std::map<std::pair<int, int>, std::int64_t>& graded() const {
    return graded_;
  }
  // beta_0, beta_1, ..., up to the projective dimension.
  const std::vector<std::int64_t>& global() const { return global_; }

  std::int64_t Fine(int i, Subset sigma) const;
  std::int64_t Graded(int i, int d) const;
  // Largest i with a non-zero entry; -1 for the zero table.
  int ProjectiveDimension() const {
    return static_cast<int>(global_.size()) - 1;
  }
  // Smallest / largest total degree with a non-zero entry in column i.
  std::optional<int> MinDegree(int i) const;
  std::optional<int> MaxDegree(int i) const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.n_ == b.n_ && a.fine_ == b.fine_;
  }

 private:
  int n_ = 0;
  std::vector<FineEntry> fine_;
  std::map<std::pair<int, int>, std::int64_t> graded_;
  std::vector<std::int64_t> global_;
};

// Hochster's formula: beta_{i,sigma} = h_{|sigma|-i-1}(delta restricted to
// sigma). Works for any complex; throws CapExceeded above `max_ground`.
BettiTable BettiFineHochster(const SimplicialComplex& delta,
                             const PrimeField& field,
                             int max_ground = kDefaultGroundCap);

// Matroid fast path. beta_{i,sigma} is non-zero exactly when sigma is
// inclusion-minimal among the sets of nullity i, i.e. when sigma is the union
// of the circuits it contains, and then
//   beta_{n(sigma),sigma} = (-1)^{r(sigma)-1} * reduced_euler(M|sigma).
// No homology is computed.
BettiTable BettiFineMatroid(const Matroid& m);

// Betti diagram: beta_{i,d} sits in column i (i >= 1) and row d - i.
struct BettiDiagram {
  struct Row {
    int label = 0;
    // cells[c] is the entry of column c + 1; 0 renders blank.
    std::vector<std::int64_t> cells;
  };
  int columns = 0;
  std::vector<Row> rows;

  // One row per label between the smallest and largest occupied row.
  static BettiDiagram FromTable(const BettiTable& table);
  // Header "1 2 3 ...", then "label | cells" rows; fixed-width left-aligned
  // cells, trailing blanks trimmed, every line newline-terminated.
  std::string ToText() const;
  // Row with the given label, if present.
  const Row* FindRow(int label) const;
};

std::string RenderDiagram(const BettiTable& table);

// {"fine":[{"i":..,"sigma":[..],"beta":..}],"graded":[[i,d,beta]..],
//  "global":[..]} with 1-based sigma indices.
nlohmann::ordered_json ToJson(const BettiTable& table);
// Inverse of ToJson. Without `n` the ground size is the largest index seen.
BettiTable BettiTableFromJson(const nlohmann::json& j,
                              std::optional<int> n = std::nullopt);

}  // namespace mbw

#endif  // MBW_BETTI_H_
