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

#include "input.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mbw/errors.h"
#include "mbw/finite_field.h"

namespace mbw::cli {
namespace {

[[noreturn]] void Fail(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

int LineAtOffset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

// Line of the first occurrence of "key" in the raw text, 1 if absent.
int LineOfKey(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const std::size_t pos = text.find(quoted);
  return pos == std::string_view::npos ? 1 : LineAtOffset(text, pos);
}

std::optional<std::int64_t> ParseInteger(std::string_view token) {
  std::int64_t value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

InputSpec ParseText(std::string_view text) {
  InputSpec spec;
  spec.source = InputSource::kMatrix;
  int line_no = 0;
  bool have_field = false;
  int field_line = 1;
  std::size_t width = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != line.npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string_view> tokens = Tokens(line);
    if (tokens.empty()) continue;
    if (!have_field) {
      if (tokens.size() != 2 || tokens[0] != "field") {
        Fail(line_no, "expected 'field p' before the matrix rows");
      }
      const std::optional<std::int64_t> p = ParseInteger(tokens[1]);
      if (!p) Fail(line_no, "field modulus '" + std::string(tokens[1]) +
                                "' is not an integer");
      if (!IsPrime(*p)) {
        Fail(line_no, "field modulus " + std::to_string(*p) +
                          " is not prime (only prime fields GF(p) are "
                          "supported)");
      }
      spec.field = *p;
      have_field = true;
      field_line = line_no;
      continue;
    }
    std::vector<std::int64_t> row;
    for (std::string_view t : tokens) {
      const std::optional<std::int64_t> v = ParseInteger(t);
      if (!v) Fail(line_no, "expected an integer, got '" + std::string(t) + "'");
      row.push_back(*v);
    }
    if (spec.matrix.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      Fail(line_no, "row has " + std::to_string(row.size()) +
                        " entries, expected " + std::to_string(width));
    }
    spec.matrix.push_back(std::move(row));
  }
  if (!have_field) Fail(1, "empty input: expected 'field p'");
  if (spec.matrix.empty()) Fail(field_line, "no matrix rows after 'field p'");
  spec.n = static_cast<int>(width);
  return spec;
}

std::vector<Subset> ParseSets(const nlohmann::json& sets, int n, int line,
                              const char* what) {
  if (!sets.is_array()) Fail(line, std::string(what) + " must be an array");
  std::vector<Subset> out;
  for (const auto& set : sets) {
    if (!set.is_array()) {
      Fail(line, std::string(what) + " entries must be arrays of indices");
    }
    Subset s = 0;
    for (const auto& x : set) {
      if (!x.is_number_integer()) Fail(line, "element indices must be integers");
      const std::int64_t e = x.get<std::int64_t>();
      if (e < 1 || e > n) {
        Fail(line, "element " + std::to_string(e) + " outside 1.." +
                       std::to_string(n));
      }
      if (Contains(s, static_cast<int>(e - 1))) {
        Fail(line, "element " + std::to_string(e) + " repeated in a set");
      }
      s |= Singleton(static_cast<int>(e - 1));
    }
    out.push_back(s);
  }
  return out;
}

InputSpec ParseJson(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    Fail(LineAtOffset(text, e.byte == 0 ? 0 : e.byte - 1),
         std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) Fail(1, "expected a JSON object");
  const char* sources[] = {"matrix", "bases", "circuits", "uniform"};
  int found = 0;
  for (const char* key : sources) found += j.contains(key) ? 1 : 0;
  if (found != 1) {
    Fail(1, "expected exactly one of \"matrix\", \"bases\", \"circuits\", "
            "\"uniform\"");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "field" && key != "n" &&
        std::find(std::begin(sources), std::end(sources), key) ==
            std::end(sources)) {
      Fail(LineOfKey(text, key), "unknown key \"" + key + "\"");
    }
  }

  InputSpec spec;
  try {
    if (j.contains("matrix")) {
      spec.source = InputSource::kMatrix;
      const int line = LineOfKey(text, "matrix");
      if (!j.contains("field")) Fail(1, "matrix input needs \"field\"");
      const std::int64_t p = j.at("field").get<std::int64_t>();
      if (!IsPrime(p)) {
        Fail(LineOfKey(text, "field"),
             "field modulus " + std::to_string(p) +
                 " is not prime (only prime fields GF(p) are supported)");
      }
      spec.field = p;
      spec.matrix = j.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
      if (spec.matrix.empty()) Fail(LineOfKey(text, "matrix"), "matrix has no rows");
      const std::size_t width = spec.matrix[0].size();
      for (std::size_t r = 0; r < spec.matrix.size(); ++r) {
        if (spec.matrix[r].size() != width) {
          Fail(line, "matrix row " + std::to_string(r + 1) + " has " +
                         std::to_string(spec.matrix[r].size()) +
                         " entries, expected " + std::to_string(width));
        }
      }
      spec.n = static_cast<int>(width);
      if (j.contains("n") && j.at("n").get<int>() != spec.n) {
        Fail(LineOfKey(text, "n"), "\"n\" disagrees with the matrix width");
      }
      return spec;
    }
    if (j.contains("field")) {
      Fail(LineOfKey(text, "field"), "\"field\" only applies to matrix input");
    }
    if (j.contains("uniform")) {
      spec.source = InputSource::kUniform;
      const auto u = j.at("uniform").get<std::vector<int>>();
      if (u.size() != 2) {
        Fail(LineOfKey(text, "uniform"), "\"uniform\" must be [r, n]");
      }
      spec.uniform_rank = u[0];
      spec.n = u[1];
      return spec;
    }
    const bool bases = j.contains("bases");
    spec.source = bases ? InputSource::kBases : InputSource::kCircuits;
    if (!j.contains("n")) Fail(1, "set-system input needs \"n\"");
    spec.n = j.at("n").get<int>();
    if (spec.n < 0 || spec.n > kMaxGroundSize) {
      Fail(LineOfKey(text, "n"), "\"n\" out of range");
    }
    const char* key = bases ? "bases" : "circuits";
    spec.sets = ParseSets(j.at(key), spec.n, LineOfKey(text, key), key);
    return spec;
  } catch (const nlohmann::json::type_error& e) {
    Fail(1, std::string("wrong JSON type: ") + e.what());
  }
}

}  // namespace

InputSpec ParseInput(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return ParseJson(text);
  }
  return ParseText(text);
}

InputSpec ReadInput(const std::string& path, std::istream& stdin_stream) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(stdin_stream),
                std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot read input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return ParseInput(text);
}

Matroid BuildMatroid(const InputSpec& spec, int max_ground) {
  switch (spec.source) {
    case InputSource::kMatrix:
      return Matroid::FromMatrix(
          FieldMatrix::FromRows(PrimeField(*spec.field), spec.matrix),
          max_ground);
    case InputSource::kBases:
      return Matroid::FromBases(spec.n, spec.sets, max_ground);
    case InputSource::kCircuits:
      return Matroid::FromCircuits(spec.n, spec.sets, max_ground);
    case InputSource::kUniform:
      return Matroid::Uniform(spec.uniform_rank, spec.n, max_ground);
  }
  throw InputError("unknown input source");
}

}  // namespace mbw::cli
