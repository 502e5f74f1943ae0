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

#ifndef EXTMATCH_ENUMERATION_H_
#define EXTMATCH_ENUMERATION_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "extmatch/deviation.h"
#include "extmatch/game.h"

namespace extmatch {

// Every valid matching once, ascending by edge bitmask (bit i = edge index
// i). Many-to-many games are limited to limits.max_edges possible matches,
// one-to-one games to limits.max_side agents per side; GuardError otherwise.
void ForEachMatching(const Game& game,
                     const std::function<bool(const Matching&)>& visit,
                     const SearchLimits& limits = {});
std::vector<Matching> EnumerateMatchings(const Game& game,
                                         const SearchLimits& limits = {});

struct StableSetReport {
  Attitude attitude = Attitude::kNeutral;
  Concept concept_kind = Concept::kSetwise;
  Strength strength = Strength::kStrong;
  std::vector<Matching> members;
  std::uint64_t searched = 0;
};

StableSetReport StableSet(const Game& game, Attitude attitude,
                          Concept concept_kind, Strength strength,
                          const SearchLimits& limits = {});

struct InclusionAudit {
  Strength strength = Strength::kStrong;
  std::vector<Matching> optimistic;
  std::vector<Matching> neutral;
  std::vector<Matching> pessimistic;
  std::uint64_t searched = 0;
  std::vector<std::string> violations;

  bool holds() const { return violations.empty(); }
};

// Setwise stable sets under the three attitudes, checked for
// optimistic within neutral within pessimistic.
InclusionAudit AuditInclusions(const Game& game, Strength strength,
                               const SearchLimits& limits = {});

}  // namespace extmatch

#endif  // EXTMATCH_ENUMERATION_H_
