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

#ifndef MBW_TOOLS_CLI_H_
#define MBW_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mbw::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitCapExceeded = 3;

// Entry point of the `mbw` tool. `args` excludes the program name.
//
//   mbw <weights|betti|diagram|whitney|mds|verify> [input] [flags]
//
// `input` defaults to "-" (stdin). Flags:
//   --complex matroid|dual|alexander|dual-alexander
//   --field q      prime field for homology (Hochster path), default 2
//   --json         JSON output
//   --max-n N      ground-set cap, default 20
//   --fine         include finely graded entries in `betti` text output
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace mbw::cli

#endif  // MBW_TOOLS_CLI_H_
