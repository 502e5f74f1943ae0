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

#include "extmatch/enumeration.h"

#include <algorithm>
#include <set>

#include "extmatch/errors.h"
#include "extmatch/stability.h"

namespace extmatch {
namespace {

constexpr int kMaxManyToManyEdges = 30;
constexpr int kMaxOneToOneEdges = 64;

using EdgeMask = std::uint64_t;

Matching FromMask(const Game& game, EdgeMask mask) {
  Matching matching;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) matching.insert(game.EdgeAt(i));
  }
  return matching;
}

void OneToOneMasks(const Game& game, int man, std::uint64_t used_women,
                   EdgeMask chosen, std::vector<EdgeMask>& out) {
  if (man == game.num_men()) {
    out.push_back(chosen);
    return;
  }
  OneToOneMasks(game, man + 1, used_women, chosen, out);
  for (int w = 0; w < game.num_women(); ++w) {
    if (used_women >> w & 1) continue;
    OneToOneMasks(game, man + 1, used_women | (std::uint64_t{1} << w),
                  chosen | (EdgeMask{1} << game.EdgeIndex({man, w})), out);
  }
}

void CheckEnumerationGuard(const Game& game, const SearchLimits& limits) {
  if (game.mode() == Mode::kManyToMany) {
    if (game.num_edges() > kMaxManyToManyEdges ||
        (!limits.override && game.num_edges() > limits.max_edges)) {
      throw GuardError(
          "matching enumeration is limited to " +
          std::to_string(limits.override ? kMaxManyToManyEdges : limits.max_edges) +
          " possible matches in many-to-many games; game has " +
          std::to_string(game.num_edges()));
    }
    return;
  }
  if (game.num_edges() > kMaxOneToOneEdges) {
    throw GuardError("matching enumeration supports at most " +
                     std::to_string(kMaxOneToOneEdges) + " possible matches");
  }
  if (!limits.override &&
      std::max(game.num_men(), game.num_women()) > limits.max_side) {
    throw GuardError("matching enumeration is limited to " +
                     std::to_string(limits.max_side) +
                     " agents per side in one-to-one games");
  }
}

std::string Describe(const Game& game, const Matching& matching) {
  std::string out = "{";
  for (Edge e : matching) {
    if (out.size() > 1) out += ", ";
    out += "(" + game.label(game.ManAgent(e.man)) + ", " +
           game.label(game.WomanAgent(e.woman)) + ")";
  }
  return out + "}";
}

}  // namespace

void ForEachMatching(const Game& game,
                     const std::function<bool(const Matching&)>& visit,
                     const SearchLimits& limits) {
  CheckEnumerationGuard(game, limits);
  if (game.mode() == Mode::kManyToMany) {
    const EdgeMask count = EdgeMask{1} << game.num_edges();
    for (EdgeMask mask = 0; mask < count; ++mask) {
      if (!visit(FromMask(game, mask))) return;
    }
    return;
  }
  std::vector<EdgeMask> masks;
  OneToOneMasks(game, 0, 0, 0, masks);
  std::sort(masks.begin(), masks.end());
  for (EdgeMask mask : masks) {
    if (!visit(FromMask(game, mask))) return;
  }
}

std::vector<Matching> EnumerateMatchings(const Game& game,
                                         const SearchLimits& limits) {
  std::vector<Matching> out;
  ForEachMatching(game, [&](const Matching& m) {
    out.push_back(m);
    return true;
  }, limits);
  return out;
}

StableSetReport StableSet(const Game& game, Attitude attitude,
                          Concept concept_kind, Strength strength,
                          const SearchLimits& limits) {
  StableSetReport report;
  report.attitude = attitude;
  report.concept_kind = concept_kind;
  report.strength = strength;
  ForEachMatching(game, [&](const Matching& m) {
    ++report.searched;
    if (CheckMembership(game, m, attitude, concept_kind, strength, limits).stable) {
      report.members.push_back(m);
    }
    return true;
  }, limits);
  return report;
}

InclusionAudit AuditInclusions(const Game& game, Strength strength,
                               const SearchLimits& limits) {
  InclusionAudit audit;
  audit.strength = strength;
  auto members = [&](Attitude attitude) {
    StableSetReport report =
        StableSet(game, attitude, Concept::kSetwise, strength, limits);
    audit.searched = report.searched;
    return report.members;
  };
  audit.optimistic = members(Attitude::kOptimistic);
  audit.neutral = members(Attitude::kNeutral);
  audit.pessimistic = members(Attitude::kPessimistic);
  auto check = [&](const std::vector<Matching>& inner, const char* inner_name,
                   const std::vector<Matching>& outer, const char* outer_name) {
    const std::set<Matching> lookup(outer.begin(), outer.end());
    for (const Matching& m : inner) {
      if (!lookup.count(m)) {
        audit.violations.push_back(Describe(game, m) + " is " + inner_name +
                                   "-stable but not " + outer_name + "-stable");
      }
    }
  };
  check(audit.optimistic, "optimistic", audit.neutral, "neutral");
  check(audit.neutral, "neutral", audit.pessimistic, "pessimistic");
  return audit;
}

}  // namespace extmatch
