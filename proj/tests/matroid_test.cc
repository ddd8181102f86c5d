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

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "mbw/errors.h"
#include "mbw/matroid.h"
#include "test_util.h"

namespace mbw {
namespace {

using testing::Sets;

void ExpectSameRank(const Matroid& a, const Matroid& b) {
  ASSERT_EQ(a.ground_size(), b.ground_size());
  for (Subset s = 0; s <= a.ground_set(); ++s) {
    ASSERT_EQ(a.Rank(s), b.Rank(s)) << FormatSubset(s);
  }
}

TEST(Matroid, RunningExampleBases) {
  const Matroid m = testing::M1();
  EXPECT_EQ(m.provenance(), Provenance::kMatrix);
  EXPECT_EQ(m.ground_size(), 6);
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(m.Bases(), testing::B1());
}

TEST(Matroid, SmallBinaryBases) {
  EXPECT_EQ(Matroid::FromMatrix(testing::H2()).Bases(), testing::B2());
  EXPECT_EQ(Matroid::FromMatrix(testing::H3()).Bases(), testing::B3());
  EXPECT_EQ(Matroid::FromMatrix(testing::H4()).Bases(), testing::B4());
  EXPECT_EQ(Matroid::FromMatrix(testing::H5()).Bases(), testing::B5());
  EXPECT_EQ(Matroid::FromMatrix(testing::H6()).Bases(), testing::B6());
  EXPECT_EQ(Matroid::FromMatrix(testing::H8()).Bases(), testing::B8());
  EXPECT_EQ(Matroid::FromMatrix(testing::H9()).Bases(), testing::B9());
}

TEST(Matroid, ZeroMatrixMakesEveryElementALoop) {
  const Matroid m = Matroid::FromMatrix(FieldMatrix(PrimeField(3), 2, 3));
  for (Subset s = 0; s < 8; ++s) EXPECT_EQ(m.Rank(s), 0);
  EXPECT_EQ(FindLoopsAndIsthmuses(m).loops, FullSet(3));
  EXPECT_EQ(Circuits(m), Sets({{1}, {2}, {3}}));
}

TEST(Matroid, FromBasesMatchesMatrix) {
  ExpectSameRank(Matroid::FromBases(4, testing::B3()),
                 Matroid::FromMatrix(testing::H3()));
  ExpectSameRank(Matroid::FromBases(6, testing::B1()), testing::M1());
}

TEST(Matroid, EmptyBasisGivesRankZero) {
  const std::vector<Subset> bases = {0};
  const Matroid m = Matroid::FromBases(3, bases);
  for (Subset s = 0; s < 8; ++s) EXPECT_EQ(m.Rank(s), 0);
}

TEST(Matroid, FromBasesRejectsAxiomViolations) {
  const std::vector<Subset> none;
  EXPECT_THROW(Matroid::FromBases(3, none), InputError);
  // Unequal cardinalities.
  const std::vector<Subset> ragged = Sets({{1}, {2, 3}});
  EXPECT_THROW(Matroid::FromBases(3, ragged), InputError);
  // Outside the ground set.
  const std::vector<Subset> outside = Sets({{1, 4}});
  EXPECT_THROW(Matroid::FromBases(3, outside), InputError);
  // {1,2} and {3,4}: removing 1 from {1,2} cannot be repaired from {3,4}
  // within the family.
  const std::vector<Subset> broken = Sets({{1, 2}, {3, 4}});
  try {
    Matroid::FromBases(4, broken);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("{1,2}"), std::string::npos) << what;
    EXPECT_NE(what.find("{3,4}"), std::string::npos) << what;
  }
}

TEST(Matroid, FromCircuitsMatchesMatrix) {
  ExpectSameRank(Matroid::FromCircuits(6, testing::C1()), testing::M1());
  const std::vector<Subset> none;
  const Matroid free = Matroid::FromCircuits(4, none);
  EXPECT_EQ(free.rank(), 4);
}

TEST(Matroid, FromCircuitsRejectsAxiomViolations) {
  const std::vector<Subset> empty_circuit = {0};
  EXPECT_THROW(Matroid::FromCircuits(3, empty_circuit), InputError);
  const std::vector<Subset> nested = Sets({{1, 2}, {1, 2, 3}});
  EXPECT_THROW(Matroid::FromCircuits(3, nested), InputError);
  // Elimination fails: {1,2} and {2,3} force a circuit inside {1,3}.
  const std::vector<Subset> no_elimination = Sets({{1, 2}, {2, 3}});
  EXPECT_THROW(Matroid::FromCircuits(3, no_elimination), InputError);
}

TEST(Matroid, UniformMatroids) {
  const Matroid u24 = Matroid::Uniform(2, 4);
  EXPECT_EQ(Circuits(u24), testing::Canonical(SubsetsOfSize(4, 3)));
  const Matroid u02 = Matroid::Uniform(0, 2);
  EXPECT_EQ(Circuits(u02), Sets({{1}, {2}}));
  EXPECT_EQ(FindLoopsAndIsthmuses(u02).loops, FullSet(2));
  EXPECT_THROW(Matroid::Uniform(3, 2), InputError);
  EXPECT_THROW(Matroid::Uniform(-1, 2), InputError);
}

TEST(Matroid, CapIsEnforced) {
  EXPECT_THROW(Matroid::Uniform(2, 21), CapExceeded);
  EXPECT_NO_THROW(Matroid::Uniform(2, 21, 21));
  EXPECT_THROW(Matroid::Uniform(2, 31, 40), CapExceeded);
  EXPECT_THROW(Matroid::FromMatrix(FieldMatrix(PrimeField(2), 1, 6), 5),
               CapExceeded);
}

TEST(Matroid, RankOutsideGroundSetThrows) {
  EXPECT_THROW(testing::M1().Rank(Singleton(6)), std::out_of_range);
}

TEST(Matroid, RankAndNullity) {
  const Matroid m = testing::M1();
  EXPECT_EQ(m.Nullity(m.ground_set()), 3);
  EXPECT_EQ(m.Rank(0), 0);
  EXPECT_EQ(m.Nullity(0), 0);
  EXPECT_EQ(m.Rank(FromOneBased({1, 6})), 1);
  EXPECT_EQ(m.Nullity(FromOneBased({1, 6})), 1);
  EXPECT_TRUE(m.IsIndependent(FromOneBased({1, 2, 3})));
  EXPECT_FALSE(m.IsIndependent(FromOneBased({4, 5, 6})));
}

TEST(Matroid, RankAxiomsOnRandomMatrices) {
  std::mt19937 rng(11);
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matroid m = Matroid::FromMatrix(testing::RandomMatrix(rng, p, 7, 5));
      const Subset e = m.ground_set();
      for (Subset a = 0; a <= e; ++a) {
        ASSERT_GE(m.Nullity(a), 0);
        for (int x = 0; x < 7; ++x) {
          const int grown = m.Rank(a | Singleton(x));
          ASSERT_GE(grown, m.Rank(a));
          ASSERT_LE(grown, m.Rank(a) + 1);
        }
        const Subset b = (a * 37 + 11) & e;
        ASSERT_LE(m.Rank(a | b) + m.Rank(a & b), m.Rank(a) + m.Rank(b));
      }
    }
  }
}

TEST(Matroid, ConcurrentRankQueriesAgree) {
  // n > 24 exercises the locked hash-map memo, n <= 24 the dense table.
  for (int n : {12, 26}) {
    const Matroid m = Matroid::Uniform(5, n, 30);
    std::atomic<int> mismatches{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
      threads.emplace_back([&, t] {
        std::mt19937 rng(t);
        std::uniform_int_distribution<Subset> dist(0, FullSet(n));
        for (int q = 0; q < 20000; ++q) {
          const Subset s = dist(rng);
          if (m.Rank(s) != std::min(Size(s), 5)) ++mismatches;
        }
      });
    }
    for (auto& th : threads) th.join();
    EXPECT_EQ(mismatches.load(), 0) << "n=" << n;
  }
}

TEST(Circuits, RunningExample) {
  EXPECT_EQ(Circuits(testing::M1()), testing::C1());
}

TEST(Circuits, SmallBinaryCode) {
  EXPECT_EQ(Circuits(Matroid::FromMatrix(testing::H2())),
            Sets({{3, 4}, {1, 2, 3}, {1, 2, 4}}));
}

TEST(Circuits, MatchesDefinitionOnRandomMatrices) {
  std::mt19937 rng(3);
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      const Matroid m = Matroid::FromMatrix(testing::RandomMatrix(rng, p, 8, 5));
      const std::vector<Subset> circuits = Circuits(m);
      ASSERT_EQ(circuits, testing::CircuitsOracle(m));
      for (Subset c : circuits) {
        ASSERT_FALSE(m.IsIndependent(c));
        for (int x : Elements(c)) ASSERT_TRUE(m.IsIndependent(c & ~Singleton(x)));
      }
    }
  }
}

TEST(Dual, IsAnInvolution) {
  const Matroid m = testing::M1();
  EXPECT_EQ(m.Dual().provenance(), Provenance::kDual);
  ExpectSameRank(m.Dual().Dual(), m);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Matroid r = Matroid::FromMatrix(testing::RandomMatrix(rng, 3, 6, 4));
    ExpectSameRank(r.Dual().Dual(), r);
  }
}

TEST(Dual, OfUniformIsUniform) {
  for (int n = 1; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      ExpectSameRank(Matroid::Uniform(r, n).Dual(), Matroid::Uniform(n - r, n));
    }
  }
}

TEST(Dual, IsthmusBecomesLoop) {
  const Matroid m7 = testing::M7();
  EXPECT_EQ(FindLoopsAndIsthmuses(m7).isthmuses, FromOneBased({2}));
  EXPECT_TRUE(IsSubset(FromOneBased({2}), FindLoopsAndIsthmuses(m7.Dual()).loops));
  // The generator matrix G7 realizes the dual of M7.
  ExpectSameRank(Matroid::FromMatrix(testing::G7()), m7.Dual());
}

TEST(Restriction, RankAndReindexing) {
  const Matroid m = testing::M1();
  const Matroid r = m.Restriction(FromOneBased({1, 4, 5, 6}));
  EXPECT_EQ(r.provenance(), Provenance::kRestriction);
  EXPECT_EQ(r.ground_size(), 4);
  EXPECT_EQ(r.rank(), 2);
  // {1,6} of M1 becomes {1,4} of the restriction.
  EXPECT_EQ(r.Rank(FromOneBased({1, 4})), 1);
  EXPECT_EQ(r.Rank(FromOneBased({1, 2, 3})), 2);
  EXPECT_THROW(m.Restriction(Singleton(6)), InputError);
}

TEST(Restriction, EmptyAndBasis) {
  const Matroid m = testing::M1();
  const Matroid empty = m.Restriction(0);
  EXPECT_EQ(empty.ground_size(), 0);
  EXPECT_EQ(empty.rank(), 0);
  const Matroid free = m.Restriction(FromOneBased({2, 4, 6}));
  for (Subset s = 0; s < 8; ++s) EXPECT_EQ(free.Nullity(s), 0);
}

TEST(LoopsAndIsthmuses, Examples) {
  const LoopsAndIsthmuses m1 = FindLoopsAndIsthmuses(testing::M1());
  EXPECT_EQ(m1.loops, 0u);
  EXPECT_EQ(m1.isthmuses, 0u);
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      const LoopsAndIsthmuses u = FindLoopsAndIsthmuses(Matroid::Uniform(r, n));
      EXPECT_EQ(u.loops, 0u);
      EXPECT_EQ(u.isthmuses, 0u);
    }
  }
}

TEST(Nonredundant, RunningExampleFamilies) {
  const Matroid m = testing::M1();
  EXPECT_TRUE(IsNonredundant(m, Sets({{1, 2, 3, 4}, {1, 4, 5}, {1, 6}})));
  EXPECT_TRUE(IsNonredundant(m, Sets({{1, 2, 3, 4}, {4, 5, 6}})));
  for (Subset c : testing::C1()) {
    const std::vector<Subset> single = {c};
    EXPECT_TRUE(IsNonredundant(m, single));
  }
  // {1,4,5} is covered by {1,6} and {4,5,6}.
  EXPECT_FALSE(IsNonredundant(m, Sets({{1, 4, 5}, {1, 6}, {4, 5, 6}})));
  EXPECT_THROW(IsNonredundant(m, Sets({{1, 2}})), InputError);
}

TEST(Nonredundant, PrivateElements) {
  const std::vector<Subset> family = Sets({{1, 4, 5}, {1, 6}, {4, 5, 6}});
  EXPECT_EQ(PrivateElements(family), (std::vector<int>{-1, -1, -1}));
  // Canonical order puts {4,5,6} before {1,2,3,4}.
  const std::vector<Subset> good = Sets({{1, 2, 3, 4}, {4, 5, 6}});
  EXPECT_EQ(PrivateElements(good), (std::vector<int>{4, 0}));
}

TEST(NonredundancyDegree, Examples) {
  const Matroid m = testing::M1();
  const NonredundancyResult full = NonredundancyDegree(m, m.ground_set());
  EXPECT_EQ(full.degree, 3);
  EXPECT_EQ(full.witness.size(), 3u);
  EXPECT_TRUE(IsNonredundant(m, full.witness));
  EXPECT_EQ(NonredundancyDegree(m, FromOneBased({1, 2, 3})).degree, 0);
  EXPECT_TRUE(NonredundancyDegree(m, FromOneBased({1, 2, 3})).witness.empty());
  const NonredundancyResult part =
      NonredundancyDegree(m, FromOneBased({1, 4, 5, 6}));
  EXPECT_EQ(part.degree, 2);
  EXPECT_EQ(part.degree,
            testing::NonredundancyOracle(testing::C1(), FromOneBased({1, 4, 5, 6})));
  EXPECT_THROW(NonredundancyDegree(m, Singleton(7)), InputError);
}

TEST(NonredundancyDegree, EqualsNullityAndOracle) {
  std::mt19937 rng(17);
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 6; ++trial) {
      const Matroid m = Matroid::FromMatrix(testing::RandomMatrix(rng, p, 7, 4));
      const std::vector<Subset> circuits = testing::CircuitsOracle(m);
      for (Subset s = 0; s <= m.ground_set(); ++s) {
        const NonredundancyResult res = NonredundancyDegree(m, s);
        ASSERT_EQ(res.degree, m.Nullity(s)) << FormatSubset(s);
        ASSERT_EQ(res.degree, testing::NonredundancyOracle(circuits, s))
            << FormatSubset(s);
        ASSERT_EQ(static_cast<int>(res.witness.size()), res.degree);
        for (Subset c : res.witness) ASSERT_TRUE(IsSubset(c, s));
        if (!res.witness.empty()) {
          ASSERT_TRUE(IsNonredundant(m, res.witness));
        }
      }
    }
  }
}

}  // namespace
}  // namespace mbw
