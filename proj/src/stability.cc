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

#include "extmatch/stability.h"

#include "blocking_search.h"
#include "extmatch/errors.h"

namespace extmatch {
namespace {

void RequireValid(const Game& game, const Matching& matching) {
  if (!IsValidMatching(game, matching)) {
    throw PreconditionError("matching is not valid for this game");
  }
}

StabilityVerdict FromCertificate(
    const std::optional<internal::BlockingCertificate>& cert) {
  StabilityVerdict verdict;
  if (!cert) return verdict;
  verdict.stable = false;
  verdict.deviation = cert->deviation;
  for (std::size_t i = 0; i < cert->before.size(); ++i) {
    verdict.estimates.push_back(
        {cert->deviation.coalition[i], cert->before[i], cert->after[i]});
  }
  return verdict;
}

// Evaluates one candidate; fills the verdict when it blocks.
bool Blocks(const Game& game, const Matching& matching, const Deviation& d,
            Attitude attitude, Strength strength, StabilityVerdict& verdict) {
  std::vector<Rational> before;
  std::vector<Rational> after;
  for (int z : d.coalition) {
    before.push_back(Utility(game, matching, z));
    after.push_back(Estimate(game, matching, d, z, attitude));
  }
  if (!Improves(before, after, strength)) return false;
  verdict.stable = false;
  verdict.deviation = d;
  verdict.estimates.clear();
  for (std::size_t i = 0; i < d.coalition.size(); ++i) {
    verdict.estimates.push_back({d.coalition[i], before[i], after[i]});
  }
  return true;
}

StabilityVerdict Exhaustive(const Game& game, const Matching& matching,
                            Attitude attitude, Strength strength,
                            bool corewise, const SearchLimits& limits) {
  RequireValid(game, matching);
  CheckSearchGuard(game, limits);
  return FromCertificate(internal::FindBlockingDeviation(
      game, matching, attitude, strength, corewise, game.num_agents()));
}

}  // namespace

StabilityVerdict SetwiseMembership(const Game& game, const Matching& matching,
                                   Attitude attitude, Strength strength,
                                   const SearchLimits& limits) {
  return Exhaustive(game, matching, attitude, strength, false, limits);
}

StabilityVerdict CorewiseMembership(const Game& game, const Matching& matching,
                                    Attitude attitude, Strength strength,
                                    const SearchLimits& limits) {
  return Exhaustive(game, matching, attitude, strength, true, limits);
}

StabilityVerdict PairwiseMembership(const Game& game, const Matching& matching,
                                    Attitude attitude, Strength strength) {
  if (game.mode() != Mode::kOneToOne) {
    throw PreconditionError("pairwise stability is defined for one-to-one games");
  }
  RequireValid(game, matching);
  if (game.num_agents() <= internal::kMaxKernelAgents &&
      game.num_edges() <= internal::kMaxKernelEdges) {
    return FromCertificate(internal::FindBlockingDeviation(
        game, matching, attitude, strength, false, 2));
  }
  StabilityVerdict verdict;
  ForEachDeviation(game, matching, 2, false, [&](const Deviation& d) {
    return !Blocks(game, matching, d, attitude, strength, verdict);
  });
  return verdict;
}

StabilityVerdict OptimisticSetwiseMembershipPoly(const Game& game,
                                                 const Matching& matching,
                                                 Strength strength) {
  RequireValid(game, matching);
  StabilityVerdict verdict;
  // A matched agent cutting its matches alone. In many-to-many games the
  // estimate does not depend on which matches are cut, so one suffices.
  for (int z = 0; z < game.num_agents(); ++z) {
    Deviation d;
    d.coalition = {z};
    for (Edge e : matching) {
      if (!game.IsEndpoint(e, z)) continue;
      d.severed.insert(e);
      if (game.mode() == Mode::kManyToMany) break;
    }
    if (d.severed.empty()) continue;
    if (Blocks(game, matching, d, Attitude::kOptimistic, strength, verdict)) {
      return verdict;
    }
  }
  // A new pair; in one-to-one games both drop their old partners.
  for (int m = 0; m < game.num_men(); ++m) {
    for (int w = 0; w < game.num_women(); ++w) {
      const Edge e{m, w};
      if (matching.contains(e)) continue;
      Deviation d;
      d.coalition = {game.ManAgent(m), game.WomanAgent(w)};
      d.internal.insert(e);
      if (game.mode() == Mode::kOneToOne) {
        for (Edge old : matching) {
          if (old.man == m || old.woman == w) d.severed.insert(old);
        }
      }
      if (Blocks(game, matching, d, Attitude::kOptimistic, strength, verdict)) {
        return verdict;
      }
    }
  }
  return verdict;
}

bool MatchedAgentsAttainOptimum(const Game& game, const Matching& matching) {
  for (int z = 0; z < game.num_agents(); ++z) {
    if (Partners(game, matching, z).empty()) continue;
    if (Utility(game, matching, z) != OptBest(game, z)) return false;
  }
  return true;
}

StabilityVerdict CheckMembership(const Game& game, const Matching& matching,
                                 Attitude attitude, Concept concept_kind,
                                 Strength strength, const SearchLimits& limits) {
  switch (concept_kind) {
    case Concept::kPairwise:
      return PairwiseMembership(game, matching, attitude, strength);
    case Concept::kCorewise:
      return CorewiseMembership(game, matching, attitude, strength, limits);
    case Concept::kSetwise:
      if (attitude == Attitude::kOptimistic) {
        return OptimisticSetwiseMembershipPoly(game, matching, strength);
      }
      return SetwiseMembership(game, matching, attitude, strength, limits);
  }
  throw PreconditionError("unknown stability concept");
}

}  // namespace extmatch
