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

#include "mbw/betti.h"

#include <algorithm>
#include <string>

#include "mbw/errors.h"
#include "parallel.h"

namespace mbw {

BettiTable::BettiTable(int n, std::vector<FineEntry> entries) : n_(n) {
  std::erase_if(entries, [](const FineEntry& e) { return e.beta == 0; });
  std::sort(entries.begin(), entries.end(),
            [](const FineEntry& a, const FineEntry& b) {
              if (a.i != b.i) return a.i < b.i;
              return CanonicalLess(a.sigma, b.sigma);
            });
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k].i == entries[k - 1].i &&
        entries[k].sigma == entries[k - 1].sigma) {
      throw InputError("repeated Betti entry (" + std::to_string(entries[k].i) +
                       ", " + FormatSubset(entries[k].sigma) + ")");
    }
  }
  fine_ = std::move(entries);
  for (const FineEntry& e : fine_) {
    if (e.i < 0) throw InputError("negative homological degree");
    graded_[{e.i, Size(e.sigma)}] += e.beta;
    if (static_cast<int>(global_.size()) <= e.i) global_.resize(e.i + 1, 0);
    global_[e.i] += e.beta;
  }
}

std::int64_t BettiTable::Fine(int i, Subset sigma) const {
  auto it = std::lower_bound(fine_.begin(), fine_.end(), FineEntry{i, sigma, 0},
                             [](const FineEntry& a, const FineEntry& b) {
                               if (a.i != b.i) return a.i < b.i;
                               return CanonicalLess(a.sigma, b.sigma);
                             });
  return it != fine_.end() && it->i == i && it->sigma == sigma ? it->beta : 0;
}

std::int64_t BettiTable::Graded(int i, int d) const {
  auto it = graded_.find({i, d});
  return it == graded_.end() ? 0 : it->second;
}

std::optional<int> BettiTable::MinDegree(int i) const {
  auto it = graded_.lower_bound({i, -1});
  if (it == graded_.end() || it->first.first != i) return std::nullopt;
  return it->first.second;
}

std::optional<int> BettiTable::MaxDegree(int i) const {
  std::optional<int> out;
  for (auto it = graded_.lower_bound({i, -1});
       it != graded_.end() && it->first.first == i; ++it) {
    out = it->first.second;
  }
  return out;
}

BettiTable BettiFineHochster(const SimplicialComplex& delta,
                             const PrimeField& field, int max_ground) {
  const int n = delta.ground_size();
  if (n > std::min(max_ground, kMaxGroundSize)) {
    throw CapExceeded("Hochster enumeration over a ground set of size " +
                      std::to_string(n) + " exceeds the cap of " +
                      std::to_string(max_ground) +
                      "; use the matroid fast path or raise --max-n");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> is_face(count, 0);
  for (Subset f : delta.Faces()) is_face[f] = 1;

  const std::size_t workers = internal::WorkerCount(count, 64);
  std::vector<std::vector<FineEntry>> partial(workers);
  internal::ParallelChunks(
      count, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
        std::vector<Subset> faces;
        for (std::size_t idx = begin; idx < end; ++idx) {
          const Subset sigma = static_cast<Subset>(idx);
          faces.clear();
          Subset s = sigma;
          while (true) {
            if (is_face[s]) faces.push_back(s);
            if (s == 0) break;
            s = (s - 1) & sigma;
          }
          if (faces.empty()) continue;
          const ChainComplexDims h = ReducedHomologyOfFaces(n, faces, field);
          // dims()[c] is h_{c-1}; Hochster pairs it with i = |sigma| - c.
          for (std::size_t c = 0; c < h.dims().size(); ++c) {
            if (h.dims()[c] == 0) continue;
            const int i = Size(sigma) - static_cast<int>(c);
            if (i < 0) continue;
            partial[w].push_back({i, sigma, h.dims()[c]});
          }
        }
      });
  std::vector<FineEntry> entries;
  for (auto& p : partial) entries.insert(entries.end(), p.begin(), p.end());
  return BettiTable(n, std::move(entries));
}

BettiTable BettiFineMatroid(const Matroid& m) {
  const int n = m.ground_size();
  const std::size_t count = std::size_t{1} << n;
  const std::size_t workers = internal::WorkerCount(count);

  std::vector<std::int8_t> rank(count);
  internal::ParallelChunks(count, workers,
                           [&](std::size_t, std::size_t begin, std::size_t end) {
                             for (std::size_t s = begin; s < end; ++s) {
                               rank[s] = static_cast<std::int8_t>(
                                   m.Rank(static_cast<Subset>(s)));
                             }
                           });

  // chi[s] = sum over independent t in s of (-1)^{|t|-1}, the reduced Euler
  // characteristic of M|s, by a subset-sum transform.
  std::vector<std::int64_t> chi(count);
  for (std::size_t s = 0; s < count; ++s) {
    const int size = Size(static_cast<Subset>(s));
    chi[s] = rank[s] == size ? (size % 2 == 1 ? 1 : -1) : 0;
  }
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < count; ++s) {
      if (s & bit) chi[s] += chi[s ^ bit];
    }
  }

  std::vector<std::vector<FineEntry>> partial(workers);
  internal::ParallelChunks(
      count, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
          const Subset sigma = static_cast<Subset>(idx);
          const int r = rank[idx];
          // sigma is the union of its circuits iff no element is an isthmus
          // of the restriction.
          bool minimal = true;
          for (Subset rest = sigma; rest != 0; rest &= rest - 1) {
            const Subset x = rest & -rest;
            if (rank[sigma & ~x] != r) {
              minimal = false;
              break;
            }
          }
          if (!minimal) continue;
          // (-1)^{r-1}; r = 0 gives -1.
          const std::int64_t beta = (r % 2 == 1 ? 1 : -1) * chi[idx];
          if (beta <= 0) {
            throw InconsistencyError(
                "non-positive Betti number at minimal set " +
                FormatSubset(sigma));
          }
          partial[w].push_back({Size(sigma) - r, sigma, beta});
        }
      });
  std::vector<FineEntry> entries;
  for (auto& p : partial) entries.insert(entries.end(), p.begin(), p.end());
  return BettiTable(n, std::move(entries));
}

BettiDiagram BettiDiagram::FromTable(const BettiTable& table) {
  BettiDiagram out;
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& [key, beta] : table.graded()) {
    const auto [i, d] = key;
    if (i < 1) continue;
    out.columns = std::max(out.columns, i);
    if (!any) {
      lo = hi = d - i;
      any = true;
    } else {
      lo = std::min(lo, d - i);
      hi = std::max(hi, d - i);
    }
  }
  if (!any) return out;
  for (int label = lo; label <= hi; ++label) {
    Row row;
    row.label = label;
    row.cells.assign(out.columns, 0);
    for (int i = 1; i <= out.columns; ++i) {
      row.cells[i - 1] = table.Graded(i, label + i);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

const BettiDiagram::Row* BettiDiagram::FindRow(int label) const {
  for (const Row& row : rows) {
    if (row.label == label) return &row;
  }
  return nullptr;
}

namespace {

void RightTrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

}  // namespace

std::string BettiDiagram::ToText() const {
  std::size_t width = 1;
  std::size_t label_width = 1;
  for (int c = 1; c <= columns; ++c) {
    width = std::max(width, std::to_string(c).size());
  }
  for (const Row& row : rows) {
    label_width = std::max(label_width, std::to_string(row.label).size());
    for (std::int64_t v : row.cells) {
      if (v != 0) width = std::max(width, std::to_string(v).size());
    }
  }
  auto cell = [width](const std::string& text) {
    return " " + text + std::string(width - text.size(), ' ');
  };
  std::string out;
  std::string line = std::string(label_width, ' ') + " |";
  for (int c = 1; c <= columns; ++c) line += cell(std::to_string(c));
  RightTrim(line);
  out += line + "\n";
  out += std::string(label_width, '-') + "-+" +
         std::string(columns * (width + 1), '-') + "\n";
  for (const Row& row : rows) {
    const std::string label = std::to_string(row.label);
    line = std::string(label_width - label.size(), ' ') + label + " |";
    for (std::int64_t v : row.cells) {
      line += cell(v == 0 ? std::string() : std::to_string(v));
    }
    RightTrim(line);
    out += line + "\n";
  }
  return out;
}

std::string RenderDiagram(const BettiTable& table) {
  return BettiDiagram::FromTable(table).ToText();
}

nlohmann::ordered_json ToJson(const BettiTable& table) {
  nlohmann::ordered_json fine = nlohmann::ordered_json::array();
  for (const FineEntry& e : table.fine()) {
    nlohmann::ordered_json entry;
    entry["i"] = e.i;
    entry["sigma"] = OneBasedElements(e.sigma);
    entry["beta"] = e.beta;
    fine.push_back(std::move(entry));
  }
  nlohmann::ordered_json graded = nlohmann::ordered_json::array();
  for (const auto& [key, beta] : table.graded()) {
    graded.push_back({key.first, key.second, beta});
  }
  nlohmann::ordered_json out;
  out["fine"] = std::move(fine);
  out["graded"] = std::move(graded);
  out["global"] = table.global();
  return out;
}

BettiTable BettiTableFromJson(const nlohmann::json& j, std::optional<int> n) {
  try {
    std::vector<FineEntry> entries;
    int max_index = 0;
    for (const auto& e : j.at("fine")) {
      FineEntry entry;
      entry.i = e.at("i").get<int>();
      entry.beta = e.at("beta").get<std::int64_t>();
      for (int x : e.at("sigma").get<std::vector<int>>()) {
        if (x < 1 || x > kMaxGroundSize) {
          throw InputError("sigma index " + std::to_string(x) +
                           " out of range");
        }
        entry.sigma |= Singleton(x - 1);
        max_index = std::max(max_index, x);
      }
      entries.push_back(entry);
    }
    if (n && *n < max_index) {
      throw InputError("sigma index exceeds the ground size");
    }
    BettiTable table(n.value_or(max_index), std::move(entries));
    if (j.contains("global") &&
        j.at("global").get<std::vector<std::int64_t>>() != table.global()) {
      throw InputError("global Betti numbers disagree with the fine entries");
    }
    if (j.contains("graded")) {
      std::map<std::pair<int, int>, std::int64_t> graded;
      for (const auto& t : j.at("graded")) {
        graded[{t.at(0).get<int>(), t.at(1).get<int>()}] =
            t.at(2).get<std::int64_t>();
      }
      if (graded != table.graded()) {
        throw InputError("graded Betti numbers disagree with the fine entries");
      }
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed Betti table JSON: ") + e.what());
  }
}

}  // namespace mbw
