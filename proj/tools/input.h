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

#ifndef MBW_TOOLS_INPUT_H_
#define MBW_TOOLS_INPUT_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbw/matroid.h"
#include "mbw/subset.h"

namespace mbw::cli {

enum class InputSource { kMatrix, kBases, kCircuits, kUniform };

// A parsed but not yet validated matroid description. Element indices are
// 1-based in every input format and 0-based in `sets`.
struct InputSpec {
  InputSource source = InputSource::kMatrix;
  std::optional<std::int64_t> field;  // matrix input only
  int n = 0;
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<Subset> sets;  // bases or circuits
  int uniform_rank = 0;
};

// Accepts either
//   plain text:  "field p" on the first line, then one matrix row per line
//                ('#' starts a comment), or
//   JSON:        {"field":p,"matrix":[[..]]} | {"n":..,"bases":[[..]]} |
//                {"n":..,"circuits":[[..]]} | {"uniform":[r,n]}.
// Throws InputError with a "line N: " prefix.
InputSpec ParseInput(std::string_view text);

// Reads `path` ("-" reads `stdin_stream`) and parses it.
InputSpec ReadInput(const std::string& path, std::istream& stdin_stream);

// Runs the constructor matching the source; axiom violations throw
// InputError, oversize ground sets CapExceeded.
Matroid BuildMatroid(const InputSpec& spec, int max_ground);

}  // namespace mbw::cli

#endif  // MBW_TOOLS_INPUT_H_
