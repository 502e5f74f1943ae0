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

#include "extmatch/deviation.h"

#include <algorithm>

#include "blocking_search.h"
#include "extmatch/errors.h"

namespace extmatch {
namespace {

std::string EdgeText(const Game& game, Edge e) {
  return "(" + game.label(game.ManAgent(e.man)) + ", " +
         game.label(game.WomanAgent(e.woman)) + ")";
}

std::vector<char> Membership(const Game& game, const std::vector<int>& coalition) {
  std::vector<char> inside(static_cast<std::size_t>(game.num_agents()), 0);
  for (int z : coalition) inside[static_cast<std::size_t>(z)] = 1;
  return inside;
}

int InsideCount(const Game& game, const std::vector<char>& inside, Edge e) {
  return inside[static_cast<std::size_t>(game.ManAgent(e.man))] +
         inside[static_cast<std::size_t>(game.WomanAgent(e.woman))];
}

Ticks EstimateTicks(const Game& game, const Matching& current,
                    const Deviation& d, int z, Attitude attitude) {
  const std::vector<Ticks>& row = game.TicksFor(z);
  auto v = [&](Edge e) { return row[static_cast<std::size_t>(game.EdgeIndex(e))]; };
  if (attitude == Attitude::kNeutral) {
    return UtilityTicks(game, RealizedMatching(game, current, d), z);
  }
  Ticks total = 0;
  for (Edge e : d.internal) total += v(e);
  const std::vector<char> inside = Membership(game, d.coalition);

  if (game.mode() == Mode::kOneToOne) {
    // Legal one-to-one deviations retain no cross edges.
    return total + internal::OneToOneReaction(game, current, inside, z, attitude);
  }
  if (attitude == Attitude::kRestrictedPessimistic) {
    throw PreconditionError(
        "restricted-pessimistic estimates exist only in one-to-one games");
  }
  for (int index = 0; index < game.num_edges(); ++index) {
    const Edge e = game.EdgeAt(index);
    const int count = InsideCount(game, inside, e);
    const Ticks value = row[static_cast<std::size_t>(index)];
    if (attitude == Attitude::kOptimistic) {
      if (count < 2) total += std::max<Ticks>(value, 0);
    } else if (count == 0) {
      total += std::min<Ticks>(value, 0);
    } else if (count == 1 && current.contains(e) && !d.severed.contains(e)) {
      total += std::min<Ticks>(value, 0);
    }
  }
  return total;
}

void Combinations(int n, int k, const std::function<bool(const std::vector<int>&)>& visit,
                  bool& keep_going) {
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (keep_going) {
    if (!visit(pick)) {
      keep_going = false;
      return;
    }
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

std::string_view AttitudeName(Attitude attitude) {
  switch (attitude) {
    case Attitude::kNeutral: return "neutral";
    case Attitude::kOptimistic: return "optimistic";
    case Attitude::kPessimistic: return "pessimistic";
    case Attitude::kRestrictedPessimistic: return "restricted-pessimistic";
  }
  return "";
}

std::string_view StrengthName(Strength strength) {
  return strength == Strength::kStrong ? "strong" : "weak";
}

std::string_view ConceptName(Concept concept_kind) {
  switch (concept_kind) {
    case Concept::kSetwise: return "setwise";
    case Concept::kCorewise: return "corewise";
    case Concept::kPairwise: return "pairwise";
  }
  return "";
}

std::optional<Attitude> ParseAttitude(std::string_view name) {
  for (Attitude a : {Attitude::kNeutral, Attitude::kOptimistic,
                     Attitude::kPessimistic, Attitude::kRestrictedPessimistic}) {
    if (AttitudeName(a) == name) return a;
  }
  return std::nullopt;
}

std::optional<Strength> ParseStrength(std::string_view name) {
  if (name == "strong") return Strength::kStrong;
  if (name == "weak") return Strength::kWeak;
  return std::nullopt;
}

std::optional<Concept> ParseConcept(std::string_view name) {
  for (Concept c : {Concept::kSetwise, Concept::kCorewise, Concept::kPairwise}) {
    if (ConceptName(c) == name) return c;
  }
  return std::nullopt;
}

Legality CheckDeviation(const Game& game, const Matching& current,
                        const Deviation& d) {
  auto fail = [](std::string reason) { return Legality{false, std::move(reason)}; };
  if (d.coalition.empty()) return fail("empty coalition");
  for (std::size_t i = 0; i < d.coalition.size(); ++i) {
    if (d.coalition[i] < 0 || d.coalition[i] >= game.num_agents()) {
      return fail("coalition lists an unknown agent");
    }
    if (i > 0 && d.coalition[i - 1] >= d.coalition[i]) {
      return fail("coalition must be sorted and duplicate-free");
    }
  }
  const std::vector<char> inside = Membership(game, d.coalition);
  for (Edge e : d.internal) {
    if (!IsValidMatching(game, Matching{e})) return fail("unknown match");
    if (InsideCount(game, inside, e) != 2) {
      return fail("match " + EdgeText(game, e) +
                  " needs both endpoints in the coalition");
    }
  }
  for (Edge e : d.severed) {
    if (!current.contains(e)) {
      return fail("severed match " + EdgeText(game, e) +
                  " is not in the current matching");
    }
    if (InsideCount(game, inside, e) != 1) {
      return fail("severed match " + EdgeText(game, e) +
                  " must have exactly one endpoint in the coalition");
    }
  }

  std::vector<char> acted(static_cast<std::size_t>(game.num_agents()), 0);
  auto mark = [&](Edge e) {
    acted[static_cast<std::size_t>(game.ManAgent(e.man))] = 1;
    acted[static_cast<std::size_t>(game.WomanAgent(e.woman))] = 1;
  };
  for (Edge e : d.internal) {
    if (!current.contains(e)) mark(e);
  }
  for (Edge e : d.severed) mark(e);
  for (Edge e : current) {
    if (InsideCount(game, inside, e) == 2 && !d.internal.contains(e)) mark(e);
  }
  for (int z : d.coalition) {
    if (!acted[static_cast<std::size_t>(z)]) {
      return fail("member " + game.label(z) + " performs no action");
    }
  }

  Matching realized = d.internal;
  for (Edge e : current) {
    const int count = InsideCount(game, inside, e);
    if (count == 0 || (count == 1 && !d.severed.contains(e))) realized.insert(e);
  }
  if (!IsValidMatching(game, realized)) {
    return fail("resulting matching violates one-to-one constraints");
  }
  return {};
}

Matching RealizedMatching(const Game& game, const Matching& current,
                          const Deviation& d) {
  const Legality legality = CheckDeviation(game, current, d);
  if (!legality) throw PreconditionError("illegal deviation: " + legality.reason);
  const std::vector<char> inside = Membership(game, d.coalition);
  Matching realized = d.internal;
  for (Edge e : current) {
    const int count = InsideCount(game, inside, e);
    if (count == 0 || (count == 1 && !d.severed.contains(e))) realized.insert(e);
  }
  return realized;
}

Rational Estimate(const Game& game, const Matching& current,
                  const Deviation& d, int agent, Attitude attitude) {
  const Legality legality = CheckDeviation(game, current, d);
  if (!legality) throw PreconditionError("illegal deviation: " + legality.reason);
  if (!std::binary_search(d.coalition.begin(), d.coalition.end(), agent)) {
    throw PreconditionError("agent is not a coalition member");
  }
  if (attitude == Attitude::kRestrictedPessimistic &&
      game.mode() != Mode::kOneToOne) {
    throw PreconditionError(
        "restricted-pessimistic estimates exist only in one-to-one games");
  }
  return game.scale().FromTicks(EstimateTicks(game, current, d, agent, attitude));
}

bool Improves(const std::vector<Rational>& before,
              const std::vector<Rational>& after, Strength strength) {
  bool strict = false;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (after[i] < before[i]) return false;
    if (after[i] > before[i]) {
      strict = true;
    } else if (strength == Strength::kWeak) {
      return false;
    }
  }
  return strict;
}

bool IsBlocking(const Game& game, const Matching& current, const Deviation& d,
                Attitude attitude, Strength strength) {
  std::vector<Rational> before;
  std::vector<Rational> after;
  for (int z : d.coalition) {
    after.push_back(Estimate(game, current, d, z, attitude));
    before.push_back(Utility(game, current, z));
  }
  return Improves(before, after, strength);
}

void CheckSearchGuard(const Game& game, const SearchLimits& limits) {
  const int agents = game.num_agents();
  const int edges = game.num_edges();
  if (agents > internal::kMaxKernelAgents || edges > internal::kMaxKernelEdges) {
    throw GuardError("exhaustive search supports at most " +
                     std::to_string(internal::kMaxKernelAgents) + " agents and " +
                     std::to_string(internal::kMaxKernelEdges) + " possible matches");
  }
  if (!limits.override &&
      (agents > limits.max_agents || edges > limits.max_edges)) {
    throw GuardError("game has " + std::to_string(agents) + " agents and " +
                     std::to_string(edges) +
                     " possible matches; exhaustive search is limited to " +
                     std::to_string(limits.max_agents) + " agents and " +
                     std::to_string(limits.max_edges) +
                     " matches (raise with --max-agents)");
  }
}

void ForEachDeviation(const Game& game, const Matching& current,
                      int max_coalition, bool corewise,
                      const std::function<bool(const Deviation&)>& visit) {
  const int n = game.num_agents();
  bool keep_going = true;
  for (int k = 1; k <= std::min(max_coalition, n) && keep_going; ++k) {
    Combinations(n, k, [&](const std::vector<int>& coalition) {
      const std::vector<char> inside = Membership(game, coalition);
      std::vector<Edge> inner;
      for (int index = 0; index < game.num_edges(); ++index) {
        const Edge e = game.EdgeAt(index);
        if (InsideCount(game, inside, e) == 2) inner.push_back(e);
      }
      std::vector<Edge> cross;
      for (Edge e : current) {
        if (InsideCount(game, inside, e) == 1) cross.push_back(e);
      }
      if (inner.size() >= 63 || cross.size() >= 63) {
        throw GuardError("coalition too large for deviation enumeration");
      }
      const std::uint64_t inner_count = std::uint64_t{1} << inner.size();
      const std::uint64_t cross_all = (std::uint64_t{1} << cross.size()) - 1;
      for (std::uint64_t im = 0; im < inner_count; ++im) {
        Deviation d;
        d.coalition = coalition;
        for (std::size_t i = 0; i < inner.size(); ++i) {
          if (im >> i & 1) d.internal.insert(inner[i]);
        }
        for (std::uint64_t sm = corewise ? cross_all : 0; sm <= cross_all; ++sm) {
          d.severed = Matching{};
          for (std::size_t i = 0; i < cross.size(); ++i) {
            if (sm >> i & 1) d.severed.insert(cross[i]);
          }
          if (!CheckDeviation(game, current, d)) continue;
          if (!visit(d)) return false;
        }
      }
      return true;
    }, keep_going);
  }
}

std::vector<Deviation> EnumerateDeviations(const Game& game,
                                           const Matching& current,
                                           int max_coalition,
                                           const SearchLimits& limits) {
  CheckSearchGuard(game, limits);
  std::vector<Deviation> out;
  ForEachDeviation(game, current, max_coalition, /*corewise=*/false,
                   [&](const Deviation& d) {
                     out.push_back(d);
                     return true;
                   });
  return out;
}

}  // namespace extmatch
