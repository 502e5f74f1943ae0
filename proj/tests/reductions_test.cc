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
#include <string>
#include <vector>

#include "extmatch/deviation.h"
#include "extmatch/enumeration.h"
#include "extmatch/errors.h"
#include "extmatch/game.h"
#include "extmatch/reductions.h"
#include "extmatch/stability.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace extmatch {
namespace {

using testing::Agent;
using testing::E;
using testing::M;

KnapsackInstance Instance(std::vector<KnapsackItem> items, std::int64_t budget,
                          std::int64_t goal) {
  return {std::move(items), budget, goal};
}

// Every instance with at most two items, sizes and values in {1, 2},
// budget in 1..4 and goal in 1..min(4, total value). Goals above the total
// value fall outside the constructions' intended range.
std::vector<KnapsackInstance> SmallInstances() {
  std::vector<KnapsackInstance> out;
  std::vector<KnapsackItem> items;
  for (std::int64_t s = 1; s <= 2; ++s) {
    for (std::int64_t v = 1; v <= 2; ++v) items.push_back({s, v});
  }
  auto add = [&](std::vector<KnapsackItem> chosen) {
    std::int64_t total = 0;
    for (const KnapsackItem& item : chosen) total += item.value;
    for (std::int64_t b = 1; b <= 4; ++b) {
      for (std::int64_t k = 1; k <= std::min<std::int64_t>(4, total); ++k) {
        out.push_back(Instance(chosen, b, k));
      }
    }
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    add({items[i]});
    for (std::size_t j = i; j < items.size(); ++j) add({items[i], items[j]});
  }
  return out;
}

bool Solvable(const KnapsackInstance& instance) {
  std::int64_t best = -1;
  const std::size_t n = instance.items.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t size = 0;
    std::int64_t value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        size += instance.items[i].size;
        value += instance.items[i].value;
      }
    }
    if (size <= instance.budget) best = std::max(best, value);
  }
  return best >= instance.goal;
}

std::int64_t TotalValue(const KnapsackInstance& instance) {
  std::int64_t total = 0;
  for (const KnapsackItem& item : instance.items) total += item.value;
  return total;
}

// The same game with the degree limit of one-to-one matching.
Game AsOneToOne(const Game& g) {
  std::vector<std::string> men;
  std::vector<std::string> women;
  for (int m = 0; m < g.num_men(); ++m) men.push_back(g.label(g.ManAgent(m)));
  for (int w = 0; w < g.num_women(); ++w) women.push_back(g.label(g.WomanAgent(w)));
  std::vector<ExternalityEntry> entries;
  for (const auto& [key, value] : g.entries()) {
    entries.push_back({g.EdgeAt(key.first), key.second, value});
  }
  return Game::Create(Mode::kOneToOne, men, women, entries);
}

TEST(KnapsackTest, Examples) {
  EXPECT_EQ(KnapsackBruteForce(Instance({{1, 1}}, 1, 1)), (std::vector<int>{0}));
  EXPECT_FALSE(KnapsackBruteForce(Instance({{2, 1}}, 1, 1)).has_value());
  EXPECT_EQ(KnapsackBruteForce(Instance({{1, 1}, {2, 3}}, 2, 3)), (std::vector<int>{1}));
}

TEST(KnapsackTest, Validation) {
  EXPECT_THROW(ValidateKnapsack(Instance({}, 1, 1)), ValidationError);
  EXPECT_THROW(ValidateKnapsack(Instance({{0, 1}}, 1, 1)), ValidationError);
  EXPECT_THROW(ValidateKnapsack(Instance({{1, 1}}, 0, 1)), ValidationError);
  EXPECT_THROW(KnapsackBruteForce(Instance(std::vector<KnapsackItem>(21, {1, 1}), 1, 1)),
               PreconditionError);
}

TEST(KnapsackTest, AgreesWithSubsetSum) {
  for (const auto& instance : SmallInstances()) {
    EXPECT_EQ(KnapsackBruteForce(instance).has_value(), Solvable(instance));
  }
}

TEST(NonemptinessReductionTest, EntriesForSingleItem) {
  const auto r = ReduceNonemptiness(Instance({{1, 1}}, 1, 1));
  const Game& g = r.game;
  EXPECT_EQ(g.Value(E(g, "x1", "y1"), Agent(g, "m1")), -1);
  EXPECT_EQ(g.Value(E(g, "x1", "y1"), Agent(g, "m2")), 1);
  EXPECT_EQ(g.Value(E(g, "m1", "w"), Agent(g, "m1")), -1);
  EXPECT_EQ(g.Value(E(g, "m2", "w"), Agent(g, "m2")), 0);
  EXPECT_EQ(g.Value(E(g, "x1", "w"), Agent(g, "x1")), -1);
  EXPECT_EQ(g.Value(E(g, "m1", "y1"), Agent(g, "y1")), -1);
  EXPECT_EQ(g.Value(E(g, "m2", "y1"), Agent(g, "y1")), -1);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, M(g, {{"x1", "y1"}}));
  EXPECT_TRUE(SetwiseMembership(g, *r.witness, Attitude::kNeutral, Strength::kStrong).stable);
}

TEST(NonemptinessReductionTest, UnsolvableInstanceHasNoStableMatching) {
  const auto r = ReduceNonemptiness(Instance({{2, 1}}, 1, 1));
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_TRUE(StableSet(r.game, Attitude::kNeutral, Concept::kSetwise, Strength::kStrong)
                  .members.empty());
}

TEST(NonemptinessReductionTest, StableSetNonemptyExactlyWhenSolvable) {
  for (const auto& instance : SmallInstances()) {
    const auto r = ReduceNonemptiness(instance);
    const auto set = StableSet(r.game, Attitude::kNeutral, Concept::kSetwise, Strength::kStrong);
    EXPECT_EQ(!set.members.empty(), Solvable(instance));
    EXPECT_EQ(r.witness.has_value(), Solvable(instance));
  }
}

TEST(NonemptinessReductionTest, PessimisticBlockingEqualsNeutralFromWitness) {
  for (const auto& instance : SmallInstances()) {
    if (instance.items.size() != 1) continue;
    const auto r = ReduceNonemptiness(instance);
    if (!r.witness) continue;
    ForEachDeviation(r.game, *r.witness, r.game.num_agents(), false, [&](const Deviation& d) {
      EXPECT_EQ(IsBlocking(r.game, *r.witness, d, Attitude::kPessimistic, Strength::kStrong),
                IsBlocking(r.game, *r.witness, d, Attitude::kNeutral, Strength::kStrong));
      return true;
    });
  }
}

TEST(MembershipReductionTest, DistinguishedUtilities) {
  const auto r = ReduceMembership(Instance({{1, 1}}, 1, 1));
  const Game& g = r.game;
  EXPECT_EQ(r.distinguished, M(g, {{"m2", "w2"}}));
  EXPECT_EQ(Utility(g, r.distinguished, Agent(g, "m1")), Rational(-3, 2));
  EXPECT_EQ(Utility(g, r.distinguished, Agent(g, "w1")), Rational(1, 2));
}

TEST(MembershipReductionTest, EpsilonRange) {
  EXPECT_THROW(ReduceMembership(Instance({{1, 1}}, 1, 1), Rational(0)), PreconditionError);
  EXPECT_THROW(ReduceMembership(Instance({{1, 1}}, 1, 1), Rational(1)), PreconditionError);
  EXPECT_NO_THROW(ReduceMembership(Instance({{1, 1}}, 1, 1), Rational(1, 3)));
}

TEST(MembershipReductionTest, BlockedExactlyWhenSolvable) {
  for (const auto& instance : SmallInstances()) {
    const auto r = ReduceMembership(instance);
    EXPECT_EQ(!SetwiseMembership(r.game, r.distinguished, Attitude::kNeutral, Strength::kStrong)
                   .stable,
              Solvable(instance));
  }
  const auto stable = ReduceMembership(Instance({{2, 1}}, 1, 1));
  EXPECT_TRUE(
      SetwiseMembership(stable.game, stable.distinguished, Attitude::kNeutral, Strength::kStrong)
          .stable);
}

TEST(OneToOneModeTest, NonemptinessReductionStillTracksSolvability) {
  for (const auto& instance : SmallInstances()) {
    const auto r = ReduceNonemptiness(instance);
    const Game g = AsOneToOne(r.game);
    EXPECT_EQ(!StableSet(g, Attitude::kNeutral, Concept::kSetwise, Strength::kStrong)
                   .members.empty(),
              Solvable(instance));
    if (r.witness) {
      EXPECT_TRUE(SetwiseMembership(g, *r.witness, Attitude::kNeutral, Strength::kStrong).stable);
    }
  }
}

TEST(OneToOneModeTest, MembershipReductionStillTracksSolvability) {
  for (const auto& instance : SmallInstances()) {
    const auto r = ReduceMembership(instance);
    const Game g = AsOneToOne(r.game);
    EXPECT_EQ(!SetwiseMembership(g, r.distinguished, Attitude::kNeutral, Strength::kStrong)
                   .stable,
              Solvable(instance));
  }
}

TEST(OneToOnePessimisticReductionTest, Shape) {
  const auto r = ReduceOneToOnePessimisticMembership(Instance({{1, 1}}, 1, 1));
  const Game& g = r.game;
  EXPECT_EQ(g.mode(), Mode::kOneToOne);
  EXPECT_EQ(g.num_men(), 4);
  EXPECT_EQ(g.num_women(), 3);
  EXPECT_EQ(g.entries().size(), 12u);
  int nonzero = 0;
  for (const auto& [key, value] : g.entries()) nonzero += value != 0;
  EXPECT_EQ(nonzero, 11);
  EXPECT_TRUE(r.distinguished.empty());
  EXPECT_EQ(g.Value(E(g, "x1", "y2"), Agent(g, "m1")), -1);
  EXPECT_EQ(g.Value(E(g, "x1", "y2"), Agent(g, "w")), 1);
}

// The emptiness of the distinguished matching is decided by w alone: any
// match w joins hurts every partner except m2, and m2 gains only when the
// goal equals the total value.
TEST(OneToOnePessimisticReductionTest, EmptyMatchingBlockedExactlyWhenGoalEqualsTotalValue) {
  for (const auto& instance : SmallInstances()) {
    if (instance.items.size() != 1) continue;
    const auto r = ReduceOneToOnePessimisticMembership(instance);
    const bool blocked = !SetwiseMembership(r.game, r.distinguished, Attitude::kPessimistic,
                                            Strength::kStrong)
                              .stable;
    EXPECT_EQ(blocked, instance.goal == TotalValue(instance));
  }
}

}  // namespace
}  // namespace extmatch
