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

#ifndef EXTMATCH_STABILITY_H_
#define EXTMATCH_STABILITY_H_

#include <optional>
#include <vector>

#include "extmatch/deviation.h"
#include "extmatch/game.h"
#include "extmatch/rational.h"

namespace extmatch {

struct MemberEstimate {
  int agent = 0;
  Rational before;
  Rational after;
};

struct StabilityVerdict {
  bool stable = true;
  std::optional<Deviation> deviation;     // set iff unstable
  std::vector<MemberEstimate> estimates;  // one per coalition member
};

// Exhaustive searches. The certificate is the first blocking deviation in
// ForEachDeviation order. Throw GuardError past `limits`.
StabilityVerdict SetwiseMembership(const Game& game, const Matching& matching,
                                   Attitude attitude, Strength strength,
                                   const SearchLimits& limits = {});
StabilityVerdict CorewiseMembership(const Game& game, const Matching& matching,
                                    Attitude attitude, Strength strength,
                                    const SearchLimits& limits = {});

// Coalitions of one or two agents. One-to-one games only.
StabilityVerdict PairwiseMembership(const Game& game, const Matching& matching,
                                    Attitude attitude, Strength strength);

// Singleton cuts and single new pairs under optimism; no size guard.
StabilityVerdict OptimisticSetwiseMembershipPoly(const Game& game,
                                                 const Matching& matching,
                                                 Strength strength);

// True iff every agent with a match receives its best attainable utility.
bool MatchedAgentsAttainOptimum(const Game& game, const Matching& matching);

// Dispatches to the routine above for the concept. Optimistic setwise
// queries use the polynomial test.
StabilityVerdict CheckMembership(const Game& game, const Matching& matching,
                                 Attitude attitude, Concept concept_kind,
                                 Strength strength,
                                 const SearchLimits& limits = {});

}  // namespace extmatch

#endif  // EXTMATCH_STABILITY_H_
