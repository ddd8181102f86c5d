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

#include "cli.h"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "input.h"
#include "mbw/betti.h"
#include "mbw/errors.h"
#include "mbw/finite_field.h"
#include "mbw/matroid.h"
#include "mbw/simplicial_complex.h"
#include "mbw/weights.h"

namespace mbw::cli {
namespace {

struct Options {
  std::string input = "-";
  std::string complex = "matroid";
  std::int64_t field = 2;
  bool json = false;
  int max_n = kDefaultGroundCap;
  bool fine = false;
};

std::string Join(const auto& values, const char* sep = " ") {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

// The matroid selected by --complex for commands that need one.
Matroid SelectMatroid(const Matroid& m, const Options& opt,
                      const std::string& command) {
  if (opt.complex == "matroid") return m;
  if (opt.complex == "dual") return m.Dual();
  throw InputError("command '" + command +
                   "' needs --complex matroid or dual, got '" + opt.complex +
                   "'");
}

BettiTable TableFor(const Matroid& m, const Options& opt) {
  if (opt.complex == "matroid") return BettiFineMatroid(m);
  if (opt.complex == "dual") return BettiFineMatroid(m.Dual());
  const PrimeField field(opt.field);
  const Matroid base = opt.complex == "alexander" ? m : m.Dual();
  return BettiFineHochster(AlexanderDual(IndependenceComplex(base)), field,
                           opt.max_n);
}

void EmitJson(std::ostream& out, const nlohmann::ordered_json& j) {
  out << j.dump(2) << "\n";
}

int RunWeights(const Matroid& m, const Options& opt, std::ostream& out) {
  const Matroid target = SelectMatroid(m, opt, "weights");
  const WeightReport report =
      MakeWeightReport(target, BettiFineMatroid(target));
  if (opt.json) {
    EmitJson(out, ToJson(report));
  } else {
    out << "d:" << (report.weights.empty() ? "" : " ") << Join(report.weights)
        << "\n";
  }
  return kExitOk;
}

int RunBetti(const Matroid& m, const Options& opt, std::ostream& out) {
  const BettiTable table = TableFor(m, opt);
  if (opt.json) {
    EmitJson(out, ToJson(table));
    return kExitOk;
  }
  out << "global: " << Join(table.global()) << "\n";
  out << "graded (i d beta):\n";
  for (const auto& [key, beta] : table.graded()) {
    out << key.first << " " << key.second << " " << beta << "\n";
  }
  if (opt.fine) {
    out << "fine (i sigma beta):\n";
    for (const FineEntry& e : table.fine()) {
      out << e.i << " " << FormatSubset(e.sigma) << " " << e.beta << "\n";
    }
  }
  return kExitOk;
}

int RunDiagram(const Matroid& m, const Options& opt, std::ostream& out) {
  const BettiTable table = TableFor(m, opt);
  if (!opt.json) {
    out << RenderDiagram(table);
    return kExitOk;
  }
  const BettiDiagram diagram = BettiDiagram::FromTable(table);
  nlohmann::ordered_json j;
  j["columns"] = diagram.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : diagram.rows) {
    nlohmann::ordered_json r;
    r["row"] = row.label;
    r["entries"] = row.cells;
    j["rows"].push_back(std::move(r));
  }
  EmitJson(out, j);
  return kExitOk;
}

int RunWhitney(const Matroid& m, const Options& opt, std::ostream& out) {
  const WhitneyPolynomial w =
      ComputeWhitneyPolynomial(SelectMatroid(m, opt, "whitney"));
  if (opt.json) {
    nlohmann::ordered_json j;
    j["whitney"] = ToJson(w);
    EmitJson(out, j);
  } else {
    out << "W(x,y) = " << w.ToString() << "\n";
  }
  return kExitOk;
}

std::string OptionalText(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

int RunMds(const Matroid& m, const Options& opt, std::ostream& out) {
  const Matroid target = SelectMatroid(m, opt, "mds");
  const MdsProfile p = ProfileMds(target, BettiFineMatroid(target));
  std::string verdict;
  if (p.is_mds()) {
    verdict = "MDS";
  } else if (p.mds_level) {
    verdict = std::to_string(*p.mds_level) + "-MDS";
  } else {
    verdict = "not h-MDS for any h";
  }
  if (opt.json) {
    nlohmann::ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["weights"] = p.weights;
    auto opt_json = [](const std::optional<int>& v) {
      return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    j["mds_level"] = opt_json(p.mds_level);
    j["linear_tail_from"] = opt_json(p.linear_tail_from);
    j["singleton_row_tail_from"] = opt_json(p.singleton_row_tail_from);
    j["isthmuses"] = OneBasedElements(p.isthmuses);
    j["alexander_dual_is_matroid"] = p.alexander_dual_is_matroid;
    j["verdict"] = verdict;
    EmitJson(out, j);
    return kExitOk;
  }
  out << "n: " << p.n << "\n"
      << "k: " << p.k << "\n"
      << "weights: " << Join(p.weights) << "\n"
      << "mds_level: " << OptionalText(p.mds_level) << "\n"
      << "linear_tail_from: " << OptionalText(p.linear_tail_from) << "\n"
      << "singleton_row_tail_from: " << OptionalText(p.singleton_row_tail_from)
      << "\n"
      << "isthmuses: " << FormatSubset(p.isthmuses) << "\n"
      << "alexander_dual_is_matroid: "
      << (p.alexander_dual_is_matroid ? "yes" : "no") << "\n"
      << "verdict: " << verdict << "\n";
  return kExitOk;
}

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void Check(const std::string& name, const std::function<std::string()>& fn) {
    ++total_;
    std::string failure;
    try {
      failure = fn();
    } catch (const CapExceeded&) {
      throw;
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      out_ << "ok    " << name << "\n";
    } else {
      ++failed_;
      out_ << "FAIL  " << name << ": " << failure << "\n";
    }
  }
  void Skip(const std::string& name, const std::string& why) {
    out_ << "skip  " << name << ": " << why << "\n";
  }
  int total() const { return total_; }
  int failed() const { return failed_; }

 private:
  std::ostream& out_;
  int total_ = 0;
  int failed_ = 0;
};

int RunVerify(const Matroid& m, const Options& opt, std::ostream& out) {
  const PrimeField field(opt.field);
  const int n = m.ground_size();
  Checker checker(out);
  const Matroid dual = m.Dual();

  for (const auto& [label, target] :
       {std::pair<std::string, Matroid>{"matroid", m}, {"dual", dual}}) {
    const BettiTable fast = BettiFineMatroid(target);
    checker.Check(label + ": fast path equals Hochster over GF(" +
                      std::to_string(field.modulus()) + ")",
                  [&] {
                    const BettiTable slow = BettiFineHochster(
                        IndependenceComplex(target), field, opt.max_n);
                    return fast == slow ? "" : "fine tables differ";
                  });
    checker.Check(label + ": Betti weights equal brute force", [&] {
      const int k = n - target.rank();
      const auto a = WeightsFromBetti(fast, k);
      const auto b = WeightsBruteForce(target);
      return a == b ? std::string()
                    : "betti (" + Join(a) + ") vs brute force (" + Join(b) + ")";
    });
    checker.Check(label + ": resolution length n - r", [&] {
      const int k = n - target.rank();
      return fast.ProjectiveDimension() == k
                 ? std::string()
                 : "length " + std::to_string(fast.ProjectiveDimension()) +
                       " vs " + std::to_string(k);
    });
    checker.Check(label + ": d_k equals support size", [&] {
      const int k = n - target.rank();
      if (k == 0) return std::string();
      const int dk = WeightsFromBetti(fast, k).back();
      const int support = SupportSize(target);
      return dk == support ? std::string()
                           : "d_k = " + std::to_string(dk) + ", support " +
                                 std::to_string(support);
    });
    checker.Check(label + ": top Betti column is level and equals h_s", [&] {
      const int k = n - target.rank();
      const auto h = HVector(IndependenceComplex(target), target.rank());
      std::int64_t hs = 0;
      for (std::int64_t v : h) {
        if (v != 0) hs = v;
      }
      const auto lo = fast.MinDegree(k);
      const auto hi = fast.MaxDegree(k);
      if (!lo || *lo != *hi) return std::string("top column not pure");
      const std::int64_t top = fast.Graded(k, *lo);
      return top == hs ? std::string()
                       : "beta = " + std::to_string(top) + ", h_s = " +
                             std::to_string(hs);
    });
  }

  checker.Check("homology is field independent (GF(2), GF(3), GF(5))", [&] {
    const SimplicialComplex delta = IndependenceComplex(m);
    const SimplicialComplex alex = AlexanderDual(delta);
    for (const SimplicialComplex* c : {&delta, &alex}) {
      const BettiTable t2 = BettiFineHochster(*c, PrimeField(2), opt.max_n);
      for (int p : {3, 5}) {
        if (!(BettiFineHochster(*c, PrimeField(p), opt.max_n) == t2)) {
          return "tables differ between GF(2) and GF(" + std::to_string(p) +
                 ")";
        }
      }
    }
    return std::string();
  });

  const WeiDualityResult wei = CheckWeiDuality(m);
  if (wei.applicable) {
    checker.Check("Wei duality partitions {1..n}", [&] {
      return wei.holds ? std::string() : wei.witness;
    });
  } else {
    checker.Skip("Wei duality partitions {1..n}", "loops or isthmuses present");
  }

  checker.Check("non-redundancy degree equals nullity for every subset", [&] {
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t idx = 0; idx < count; ++idx) {
      const Subset s = static_cast<Subset>(idx);
      const NonredundancyResult r = NonredundancyDegree(m, s);
      if (r.degree != m.Nullity(s) ||
          static_cast<int>(r.witness.size()) != r.degree ||
          !IsNonredundant(m, r.witness)) {
        return "mismatch at " + FormatSubset(s);
      }
    }
    return std::string();
  });

  checker.Check("Whitney polynomial mass and f-vector", [&] {
    const WhitneyPolynomial w = ComputeWhitneyPolynomial(m);
    if (w.Mass() != (std::int64_t{1} << n)) return std::string("mass != 2^n");
    std::vector<std::int64_t> x = w.XPart();
    std::reverse(x.begin(), x.end());
    return x == FVector(IndependenceComplex(m))
               ? std::string()
               : std::string("W(x,0) does not reproduce the f-vector");
  });

  if (checker.failed() == 0) {
    out << "verify: all " << checker.total() << " checks passed\n";
    return kExitOk;
  }
  out << "verify: " << checker.failed() << " of " << checker.total()
      << " checks failed\n";
  return kExitVerifyFailed;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Hamming weights from Stanley-Reisner Betti numbers",
               "mbw"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    std::function<int(const Matroid&, const Options&, std::ostream&)> run;
  };
  const std::vector<Command> commands = {
      {"weights", "Generalized Hamming weights d_1 < ... < d_k", RunWeights},
      {"betti", "Graded and global Betti numbers", RunBetti},
      {"diagram", "Betti diagram", RunDiagram},
      {"whitney", "Whitney polynomial", RunWhitney},
      {"mds", "MDS / h-MDS profile", RunMds},
      {"verify", "Run the oracle cross-checks", RunVerify},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", opt.input, "Input file, '-' for stdin");
    sub->add_option("--complex", opt.complex, "Complex to analyse")
        ->check(CLI::IsMember({"matroid", "dual", "alexander",
                               "dual-alexander"}));
    sub->add_option("--field", opt.field, "Prime field for homology");
    sub->add_flag("--json", opt.json, "JSON output");
    sub->add_option("--max-n", opt.max_n, "Ground-set cap")
        ->check(CLI::Range(0, kMaxGroundSize));
    sub->add_flag("--fine", opt.fine, "Include the finely graded table");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (opt.max_n > kDefaultGroundCap) {
      err << "warning: ground-set cap raised to " << opt.max_n
          << "; every sweep costs 2^n\n";
    }
    const PrimeField check_field(opt.field);
    (void)check_field;
    const Matroid m = BuildMatroid(ReadInput(opt.input, in), opt.max_n);
    for (const Command& c : commands) {
      if (app.got_subcommand(c.name)) return c.run(m, opt, out);
    }
    err << "error: no command\n";
    return kExitInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace mbw::cli
