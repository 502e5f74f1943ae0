// Copyright 2026 The extmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "extmatch/enumeration.h"
#include "extmatch/errors.h"
#include "extmatch/fixtures.h"
#include "extmatch/game.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace extmatch {
namespace {

std::set<Matching> AsSet(const std::vector<Matching>& v) { return {v.begin(), v.end()}; }

std::vector<Matching> OracleStableSet(const Game& g, Attitude att, Strength s) {
  std::vector<Matching> out;
  for (const Matching& a : oracle::AllMatchings(g)) {
    if (!oracle::Blocked(g, a, att, s)) out.push_back(a);
  }
  return out;
}

TEST(EnumerationTest, Counts) {
  EXPECT_EQ(EnumerateMatchings(BuiltinExample(Fixture::kEx1)).size(), 4u);
  EXPECT_EQ(EnumerateMatchings(testing::AllZero(Mode::kOneToOne, 2, 2)).size(), 7u);
  const auto none = EnumerateMatchings(testing::AllZero(Mode::kManyToMany, 0, 3));
  ASSERT_EQ(none.size(), 1u);
  EXPECT_TRUE(none[0].empty());
}

TEST(EnumerationTest, MatchesDefinitionAndIsSortedWithoutRepeats) {
  for (Mode mode : {Mode::kManyToMany, Mode::kOneToOne}) {
    for (int men = 0; men <= 3; ++men) {
      for (int women = 0; women <= 3; ++women) {
        const Game g = testing::AllZero(mode, men, women);
        const auto list = EnumerateMatchings(g);
        EXPECT_EQ(AsSet(list), AsSet(oracle::AllMatchings(g)));
        EXPECT_EQ(AsSet(list).size(), list.size());
        for (const Matching& a : list) EXPECT_TRUE(IsValidMatching(g, a));
      }
    }
  }
}

TEST(EnumerationTest, Guards) {
  EXPECT_THROW(EnumerateMatchings(testing::AllZero(Mode::kManyToMany, 4, 5)), GuardError);
  EXPECT_THROW(EnumerateMatchings(testing::AllZero(Mode::kOneToOne, 1, 7)), GuardError);
  SearchLimits lifted;
  lifted.override = true;
  EXPECT_EQ(EnumerateMatchings(testing::AllZero(Mode::kOneToOne, 1, 7), lifted).size(), 8u);
}

TEST(StableSetTest, ExampleOneNeutralSetIsEmpty) {
  const auto r = StableSet(BuiltinExample(Fixture::kEx1), Attitude::kNeutral,
                           Concept::kSetwise, Strength::kStrong);
  EXPECT_TRUE(r.members.empty());
  EXPECT_EQ(r.searched, 4u);
}

TEST(StableSetTest, ExampleTwoRegimes) {
  FixtureParams costly;
  costly.epsilon = Rational(5);
  costly.delta = Rational(1);
  const auto only_empty = StableSet(BuiltinExample(Fixture::kEx2, costly), Attitude::kNeutral,
                                    Concept::kSetwise, Strength::kStrong);
  ASSERT_EQ(only_empty.members.size(), 1u);
  EXPECT_TRUE(only_empty.members[0].empty());

  const Game g = BuiltinExample(Fixture::kEx2);
  EXPECT_TRUE(
      StableSet(g, Attitude::kNeutral, Concept::kSetwise, Strength::kStrong).members.empty());
  EXPECT_FALSE(StableSet(g, Attitude::kPessimistic, Concept::kSetwise, Strength::kStrong)
                   .members.empty());
}

TEST(StableSetTest, ExampleFiveNeutralPairwiseSetIsEmpty) {
  EXPECT_TRUE(StableSet(BuiltinExample(Fixture::kEx5), Attitude::kNeutral, Concept::kPairwise,
                        Strength::kStrong)
                  .members.empty());
}

TEST(StableSetTest, MatchesDefinitionOnRandomGames) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (Mode mode : {Mode::kManyToMany, Mode::kOneToOne}) {
      const Game g = testing::Random(seed, 2, 2 + seed % 2, mode);
      for (Attitude att : {Attitude::kNeutral, Attitude::kOptimistic, Attitude::kPessimistic}) {
        for (Strength s : testing::kStrengths) {
          ASSERT_EQ(StableSet(g, att, Concept::kSetwise, s).members,
                    OracleStableSet(g, att, s));
        }
      }
    }
  }
}

TEST(InclusionAuditTest, ExampleOne) {
  const auto audit = AuditInclusions(BuiltinExample(Fixture::kEx1), Strength::kStrong);
  EXPECT_TRUE(audit.optimistic.empty());
  EXPECT_TRUE(audit.neutral.empty());
  EXPECT_TRUE(audit.holds());
}

TEST(InclusionAuditTest, AllZeroGameEverythingIsStable) {
  const Game g = testing::AllZero(Mode::kManyToMany, 2, 2);
  const auto audit = AuditInclusions(g, Strength::kStrong);
  EXPECT_EQ(audit.optimistic.size(), 16u);
  EXPECT_EQ(audit.neutral.size(), 16u);
  EXPECT_EQ(audit.pessimistic.size(), 16u);
  EXPECT_TRUE(audit.holds());
}

TEST(InclusionAuditTest, HoldsOnRandomGames) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Game g = testing::Random(seed, 2, 2, Mode::kManyToMany);
    for (Strength s : testing::kStrengths) {
      const auto audit = AuditInclusions(g, s);
      EXPECT_TRUE(audit.holds()) << seed;
      EXPECT_EQ(audit.searched, 16u);
    }
  }
}

}  // namespace
}  // namespace extmatch
