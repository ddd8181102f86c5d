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

#include "mbw/weights.h"

#include <algorithm>
#include <limits>

#include "mbw/errors.h"
#include "mbw/simplicial_complex.h"

namespace mbw {

std::vector<int> WeightsFromBetti(const BettiTable& table, int k) {
  std::vector<int> out;
  out.reserve(k);
  for (int i = 1; i <= k; ++i) {
    const std::optional<int> d = table.MinDegree(i);
    if (!d) {
      throw InconsistencyError("Betti column " + std::to_string(i) +
                               " is empty but the resolution must have "
                               "length " + std::to_string(k));
    }
    out.push_back(*d);
  }
  return out;
}

std::vector<int> WeightsBruteForce(const Matroid& m) {
  const int n = m.ground_size();
  const int k = n - m.rank();
  std::vector<int> best(k + 1, std::numeric_limits<int>::max());
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const Subset s = static_cast<Subset>(idx);
    const int i = m.Nullity(s);
    if (i >= 1) best[i] = std::min(best[i], Size(s));
  }
  return std::vector<int>(best.begin() + 1, best.end());
}

WeiDualityResult CheckWeiDuality(const Matroid& m) {
  WeiDualityResult out;
  const int n = m.ground_size();
  const LoopsAndIsthmuses li = FindLoopsAndIsthmuses(m);
  out.applicable = li.loops == 0 && li.isthmuses == 0;
  out.weights = WeightsBruteForce(m);
  out.dual_weights = WeightsBruteForce(m.Dual());

  std::vector<int> hits(n + 2, 0);
  for (int d : out.weights) {
    if (d >= 1 && d <= n) ++hits[d];
  }
  for (int d : out.dual_weights) {
    const int v = n + 1 - d;
    if (v >= 1 && v <= n) ++hits[v];
  }
  out.holds = true;
  for (int v = 1; v <= n; ++v) {
    if (hits[v] != 1) {
      out.holds = false;
      out.witness = "value " + std::to_string(v) + " covered " +
                    std::to_string(hits[v]) + " times";
      break;
    }
  }
  return out;
}

int SupportSize(const Matroid& m) {
  return m.ground_size() - Size(FindLoopsAndIsthmuses(m).isthmuses);
}

namespace {

std::optional<int> MdsLevel(int n, int k, std::span<const int> weights) {
  std::optional<int> level;
  for (int h = k; h >= 1; --h) {
    if (weights[h - 1] != n - k + h) break;
    level = h;
  }
  return level;
}

}  // namespace

MdsProfile ProfileMds(const Matroid& m, const BettiTable& table) {
  MdsProfile p;
  p.n = m.ground_size();
  p.k = p.n - m.rank();
  p.weights = WeightsFromBetti(table, p.k);
  p.mds_level = MdsLevel(p.n, p.k, p.weights);

  if (p.k >= 1) {
    const int top_row = *table.MinDegree(p.k) - p.k;
    for (int h = p.k; h >= 1; --h) {
      const std::optional<int> lo = table.MinDegree(h);
      const std::optional<int> hi = table.MaxDegree(h);
      if (!lo || *lo != *hi || *lo - h != top_row) break;
      p.linear_tail_from = h;
    }
    for (int h = p.k; h >= 1; --h) {
      const std::optional<int> lo = table.MinDegree(h);
      const std::optional<int> hi = table.MaxDegree(h);
      const int expected = p.n - p.k + h;
      if (!lo || *lo != expected || *hi != expected) break;
      p.singleton_row_tail_from = h;
    }
  }
  p.isthmuses = FindLoopsAndIsthmuses(m).isthmuses;
  p.alexander_dual_is_matroid =
      IsMatroidComplex(AlexanderDual(IndependenceComplex(m)));
  return p;
}

WhitneyPolynomial::WhitneyPolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

std::int64_t WhitneyPolynomial::Coefficient(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t WhitneyPolynomial::Mass() const {
  std::int64_t total = 0;
  for (const auto& [key, c] : terms_) total += c;
  return total;
}

std::vector<std::int64_t> WhitneyPolynomial::XPart() const {
  std::vector<std::int64_t> out;
  for (const auto& [key, c] : terms_) {
    if (key.second != 0) continue;
    if (static_cast<int>(out.size()) <= key.first) out.resize(key.first + 1, 0);
    out[key.first] = c;
  }
  return out;
}

namespace {

std::string Monomial(const char* var, int exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return var;
  return std::string(var) + "^" + std::to_string(exponent);
}

}  // namespace

std::string WhitneyPolynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [ex, ey] = it->first;
    std::string mono = Monomial("x", ex);
    const std::string ypart = Monomial("y", ey);
    if (!ypart.empty()) mono += (mono.empty() ? "" : "*") + ypart;
    std::string term;
    if (mono.empty()) {
      term = std::to_string(it->second);
    } else if (it->second == 1) {
      term = mono;
    } else {
      term = std::to_string(it->second) + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

WhitneyPolynomial ComputeWhitneyPolynomial(const Matroid& m) {
  WhitneyPolynomial::Terms terms;
  const int total = m.rank();
  const std::size_t count = std::size_t{1} << m.ground_size();
  for (std::size_t idx = 0; idx < count; ++idx) {
    const Subset s = static_cast<Subset>(idx);
    const int r = m.Rank(s);
    ++terms[{total - r, Size(s) - r}];
  }
  return WhitneyPolynomial(std::move(terms));
}

CliffordGonality ComputeCliffordAndGonality(const Matroid& m,
                                            std::span<const int> weights) {
  CliffordGonality out;
  out.gonality.assign(weights.begin(), weights.end());
  const int r = m.rank();
  for (std::size_t idx = 0; idx < weights.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    if (weights[idx] > r - 2 + i) continue;
    const int value = weights[idx] - 2 * i;
    if (!out.clifford || value < *out.clifford) out.clifford = value;
  }
  return out;
}

WeightReport MakeWeightReport(const Matroid& m, const BettiTable& table) {
  WeightReport report;
  report.n = m.ground_size();
  report.k = report.n - m.rank();
  report.weights = WeightsFromBetti(table, report.k);
  report.support = SupportSize(m);
  report.mds_level = MdsLevel(report.n, report.k, report.weights);
  report.degenerate = report.support < report.n;
  report.whitney = ComputeWhitneyPolynomial(m);
  report.clifford_gonality = ComputeCliffordAndGonality(m, report.weights);
  return report;
}

nlohmann::ordered_json ToJson(const WhitneyPolynomial& w) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
    out.push_back({it->first.first, it->first.second, it->second});
  }
  return out;
}

nlohmann::ordered_json ToJson(const WeightReport& report) {
  nlohmann::ordered_json out;
  out["n"] = report.n;
  out["k"] = report.k;
  out["weights"] = report.weights;
  out["support"] = report.support;
  out["mds_level"] = report.mds_level ? nlohmann::ordered_json(*report.mds_level)
                                      : nlohmann::ordered_json(nullptr);
  out["degenerate"] = report.degenerate;
  out["whitney"] = ToJson(report.whitney);
  out["clifford"] = report.clifford_gonality.clifford
                        ? nlohmann::ordered_json(*report.clifford_gonality.clifford)
                        : nlohmann::ordered_json(nullptr);
  out["gonality"] = report.clifford_gonality.gonality;
  return out;
}

}  // namespace mbw
