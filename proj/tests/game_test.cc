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

#include <string>
#include <vector>

#include "extmatch/errors.h"
#include "extmatch/fixtures.h"
#include "extmatch/game.h"
#include "extmatch/rational.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace extmatch {
namespace {

using testing::Agent;
using testing::E;
using testing::M;

TEST(RationalTest, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(ParseRational("7"), Rational(7));
  EXPECT_EQ(ParseRational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(ParseRational("6/4"), Rational(3, 2));
  EXPECT_EQ(ParseRational("0.25"), Rational(1, 4));
  EXPECT_EQ(ParseRational("-.5"), Rational(-1, 2));
  EXPECT_EQ(ParseRational("+2"), Rational(2));
}

TEST(RationalTest, RejectsMalformedLiterals) {
  for (const char* text : {"", "-", "1/0", "a", "1.2.3", "1/-2", "1e3", " 1"}) {
    EXPECT_THROW(ParseRational(text), ValidationError) << text;
  }
}

TEST(RationalTest, CanonicalStrings) {
  EXPECT_EQ(ToString(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(ToString(Rational(0)), "0");
  EXPECT_EQ(ToString(Rational(14, 2)), "7");
  for (const char* text : {"-3/2", "0", "7", "5/12"}) {
    EXPECT_EQ(ToString(ParseRational(text)), text);
  }
}

TEST(GameTest, ExampleOneEntries) {
  const Game g = BuiltinExample(Fixture::kEx1);
  EXPECT_EQ(g.num_agents(), 3);
  EXPECT_EQ(g.entries().size(), 6u);
  const int m = Agent(g, "m");
  const int w1 = Agent(g, "w1");
  const int w2 = Agent(g, "w2");
  EXPECT_EQ(g.Value(E(g, "m", "w1"), m), 0);
  EXPECT_EQ(g.Value(E(g, "m", "w1"), w1), 1);
  EXPECT_EQ(g.Value(E(g, "m", "w2"), w2), 1);
  EXPECT_EQ(g.Value(E(g, "m", "w1"), w2), -2);
  EXPECT_EQ(g.Value(E(g, "m", "w2"), w1), -2);
}

TEST(GameTest, ExampleRegimesAreEnforced) {
  FixtureParams bad;
  bad.epsilon = Rational(2);
  bad.big_delta = Rational(2);
  EXPECT_THROW(BuiltinExample(Fixture::kEx1, bad), PreconditionError);
  FixtureParams equal;
  equal.epsilon = Rational(3);
  equal.delta = Rational(3);
  EXPECT_THROW(BuiltinExample(Fixture::kEx2, equal), PreconditionError);
}

TEST(GameTest, ExampleThreeAndFiveShapes) {
  const Game g3 = BuiltinExample(Fixture::kEx3);
  EXPECT_EQ(g3.num_agents(), 8);
  EXPECT_EQ(g3.entries().size(), 14u);
  EXPECT_EQ(g3.Value(E(g3, "x2", "y2"), Agent(g3, "m2")), 10);
  EXPECT_EQ(g3.Value(E(g3, "x1", "y1"), Agent(g3, "m1")), -3);

  const Game g5 = BuiltinExample(Fixture::kEx5);
  EXPECT_EQ(g5.mode(), Mode::kOneToOne);
  EXPECT_EQ(g5.num_agents(), 4);
  EXPECT_EQ(g5.Value(E(g5, "m1", "w2"), Agent(g5, "m1")), 1);
  EXPECT_EQ(g5.Value(E(g5, "m1", "w2"), Agent(g5, "w2")), 1);
  EXPECT_EQ(g5.Value(E(g5, "m1", "w2"), Agent(g5, "w1")), -1);
}

TEST(GameTest, RejectsDuplicatesAndBadReferences) {
  EXPECT_THROW(Game::Create(Mode::kManyToMany, {"m1"}, {"w1", "w2"},
                            {{{0, 1}, 0, 1}, {{0, 1}, 0, 2}}),
               ValidationError);
  EXPECT_THROW(Game::Create(Mode::kManyToMany, {"a"}, {"a"}, {}), ValidationError);
  EXPECT_THROW(Game::Create(Mode::kManyToMany, {"m1"}, {"w1"}, {{{0, 3}, 0, 1}}),
               ValidationError);
  EXPECT_THROW(Game::Create(Mode::kManyToMany, {"m1"}, {"w1"}, {{{0, 0}, 5, 1}}),
               ValidationError);
}

TEST(GameTest, UtilitySumsEntries) {
  const Game g = BuiltinExample(Fixture::kEx1);
  const Matching both = M(g, {{"m", "w1"}, {"m", "w2"}});
  EXPECT_EQ(Utility(g, both, Agent(g, "w1")), -1);
  EXPECT_EQ(Utility(g, both, Agent(g, "m")), 0);
  for (int z = 0; z < g.num_agents(); ++z) EXPECT_EQ(Utility(g, Matching{}, z), 0);
}

TEST(GameTest, UtilityMatchesDefinitionOnRandomGames) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Game g = testing::Random(seed, 2, 3, Mode::kManyToMany);
    for (const Matching& a : oracle::AllMatchings(g)) {
      for (int z = 0; z < g.num_agents(); ++z) {
        ASSERT_EQ(Utility(g, a, z), oracle::UtilityOf(g, {a.begin(), a.end()}, z));
      }
    }
  }
}

TEST(GameTest, OptBestExamples) {
  const Game g1 = BuiltinExample(Fixture::kEx1);
  EXPECT_EQ(OptBest(g1, Agent(g1, "w1")), 1);
  const Game g5 = BuiltinExample(Fixture::kEx5);
  EXPECT_EQ(OptBest(g5, Agent(g5, "m1")), 1);
  const Game zero = testing::AllZero(Mode::kManyToMany, 2, 2);
  for (int z = 0; z < zero.num_agents(); ++z) EXPECT_EQ(OptBest(zero, z), 0);
}

TEST(GameTest, OptBestMatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    for (Mode mode : {Mode::kManyToMany, Mode::kOneToOne}) {
      const Game g = testing::Random(seed, 2 + seed % 2, 3, mode);
      for (int z = 0; z < g.num_agents(); ++z) {
        ASSERT_EQ(OptBest(g, z), oracle::BestUtility(g, z)) << seed;
      }
    }
  }
}

TEST(GameTest, ValidityDependsOnMode) {
  const Game o2o = testing::AllZero(Mode::kOneToOne, 1, 2);
  const Game m2m = testing::AllZero(Mode::kManyToMany, 1, 2);
  const Matching star = M(o2o, {{"m1", "w1"}, {"m1", "w2"}});
  EXPECT_FALSE(IsValidMatching(o2o, star));
  EXPECT_TRUE(IsValidMatching(m2m, star));
  EXPECT_TRUE(IsValidMatching(o2o, Matching{}));
  EXPECT_FALSE(IsValidMatching(o2o, Matching{Edge{0, 5}}));
}

TEST(GameTest, PartnersAndEdgeBetween) {
  const Game g = testing::AllZero(Mode::kManyToMany, 2, 2);
  const Matching a = M(g, {{"m1", "w1"}, {"m1", "w2"}});
  EXPECT_EQ(Partners(g, a, Agent(g, "m1")),
            (std::vector<int>{Agent(g, "w1"), Agent(g, "w2")}));
  EXPECT_TRUE(Partners(g, a, Agent(g, "m2")).empty());
  EXPECT_EQ(g.EdgeBetween(Agent(g, "w2"), Agent(g, "m1")), (Edge{0, 1}));
}

TEST(GameTest, ModeNamesRoundTrip) {
  for (Mode mode : {Mode::kManyToMany, Mode::kOneToOne}) {
    EXPECT_EQ(ParseMode(ModeName(mode)), mode);
  }
  EXPECT_FALSE(ParseMode("polygamy").has_value());
}

}  // namespace
}  // namespace extmatch
