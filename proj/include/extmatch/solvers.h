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

#ifndef EXTMATCH_SOLVERS_H_
#define EXTMATCH_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "extmatch/assignment.h"
#include "extmatch/deviation.h"
#include "extmatch/game.h"

namespace extmatch {

// R: both endpoints weakly gain and one strictly. F: an endpoint loses.
// Edges worthless to both endpoints split by what they do to others:
// FP never hurts anyone, FN hurts someone and helps no one, C is mixed.
enum class EdgeClass { kR, kF, kFN, kFP, kC };

std::string_view EdgeClassName(EdgeClass edge_class);

struct EdgeClassification {
  std::vector<EdgeClass> classes;  // by edge index

  std::vector<int> EdgesOf(EdgeClass edge_class) const;
};

EdgeClassification ClassifyEdges(const Game& game);

struct FptOptions {
  int max_controversial = 20;
  SearchLimits limits;  // for the exhaustive fallback
};

enum class FptRoute {
  kCandidates,  // answer decided by the R + FP + subset-of-C candidates
  kExhaustive,  // answer decided by enumerating every matching
};

struct FptResult {
  std::optional<Matching> matching;  // nullopt: optimistic stable set is empty
  FptRoute route = FptRoute::kCandidates;
  std::uint64_t candidates_checked = 0;
};

// Searches the optimistic setwise stable set through the candidates
// R + FP + S for S a subset of C, in ascending subset order. Weak strength
// and one-to-one games without an accepted candidate fall back to
// enumeration. Throws PreconditionError when C exceeds the cap.
FptResult FptOptimisticNonemptiness(const Game& game, Strength strength,
                                    const FptOptions& options = {});

// Deferred acceptance on own values, ignoring externalities. Requires a
// one-to-one game with no negative entry.
Matching SolveNeutralPairwiseGs(const Game& game);

struct RestrictedPessimisticSolution {
  Matching matching;
  PreferenceTable estimates;  // ManScore(m, w) is E(m, w); WomanScore(w, m) is E(w, m)
};

// Scores each partner t of z by z's own value for (z, t) plus the least z
// can get from a largest matching of everyone else, then runs deferred
// acceptance on those scores. One-to-one games only.
RestrictedPessimisticSolution SolveRestrictedPessimistic(const Game& game);

}  // namespace extmatch

#endif  // EXTMATCH_SOLVERS_H_
