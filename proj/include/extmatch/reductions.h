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

#ifndef EXTMATCH_REDUCTIONS_H_
#define EXTMATCH_REDUCTIONS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "extmatch/game.h"
#include "extmatch/rational.h"

namespace extmatch {

struct KnapsackItem {
  std::int64_t size = 0;
  std::int64_t value = 0;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  std::int64_t budget = 0;
  std::int64_t goal = 0;
};

// Throws ValidationError unless there is at least one item and every
// number is a positive integer.
void ValidateKnapsack(const KnapsackInstance& instance);

// First subset, in ascending bitmask order, with total size within the
// budget and total value reaching the goal. At most 20 items.
std::optional<std::vector<int>> KnapsackBruteForce(const KnapsackInstance& instance);

struct NonemptinessReduction {
  Game game;
  std::optional<Matching> witness;  // set when the instance is solvable
};

// Many-to-many game over x1..xn, m1, m2 and y1..yn, w whose neutral stable
// set is nonempty iff the instance is solvable.
NonemptinessReduction ReduceNonemptiness(const KnapsackInstance& instance);

struct MembershipReduction {
  Game game;
  Matching distinguished;
};

// Many-to-many game over x1..xn, m1, m2 and y1..yn, w1, w2 where
// {(m2, w2)} is neutrally blocked iff the instance is solvable.
// Requires 0 < epsilon < 1.
MembershipReduction ReduceMembership(const KnapsackInstance& instance,
                                     const Rational& epsilon = Rational(1, 2));

// One-to-one game over x1..x2n, m1, m2 and y1..y2n, w with the empty
// matching as the distinguished matching.
MembershipReduction ReduceOneToOnePessimisticMembership(
    const KnapsackInstance& instance);

}  // namespace extmatch

#endif  // EXTMATCH_REDUCTIONS_H_
