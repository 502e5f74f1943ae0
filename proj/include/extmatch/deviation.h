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

#ifndef EXTMATCH_DEVIATION_H_
#define EXTMATCH_DEVIATION_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extmatch/game.h"
#include "extmatch/rational.h"

namespace extmatch {

enum class Attitude { kNeutral, kOptimistic, kPessimistic, kRestrictedPessimistic };
enum class Strength { kStrong, kWeak };
enum class Concept { kSetwise, kCorewise, kPairwise };

std::string_view AttitudeName(Attitude attitude);
std::string_view StrengthName(Strength strength);
std::string_view ConceptName(Concept concept_kind);
std::optional<Attitude> ParseAttitude(std::string_view name);
std::optional<Strength> ParseStrength(std::string_view name);
std::optional<Concept> ParseConcept(std::string_view name);

struct Deviation {
  std::vector<int> coalition;  // sorted global agent indices
  Matching internal;           // edges with both endpoints in the coalition
  Matching severed;            // current edges with exactly one endpoint inside

  bool operator==(const Deviation&) const = default;
};

struct Legality {
  bool legal = true;
  std::string reason;

  explicit operator bool() const { return legal; }
};

Legality CheckDeviation(const Game& game, const Matching& current,
                        const Deviation& deviation);

// Internal edges, retained cross edges and the untouched outside part.
// Throws PreconditionError if the deviation is illegal.
Matching RealizedMatching(const Game& game, const Matching& current,
                          const Deviation& deviation);

// The utility `agent` (a coalition member) expects after the deviation.
// Throws PreconditionError for illegal deviations, non-members, or the
// restricted-pessimistic attitude on a many-to-many game.
Rational Estimate(const Game& game, const Matching& current,
                  const Deviation& deviation, int agent, Attitude attitude);

bool Improves(const std::vector<Rational>& before,
              const std::vector<Rational>& after, Strength strength);

bool IsBlocking(const Game& game, const Matching& current,
                const Deviation& deviation, Attitude attitude,
                Strength strength);

struct SearchLimits {
  int max_agents = 10;
  int max_edges = 16;
  int max_side = 6;       // one-to-one matching enumeration
  bool override = false;  // lifts the limits up to the kernel's hard caps
};

// Throws GuardError when exhaustive deviation search is refused.
void CheckSearchGuard(const Game& game, const SearchLimits& limits);

// Visits legal deviations with |B| <= max_coalition in canonical order:
// coalition size, then lexicographic coalition, then internal edge subset
// and severed subset as ascending bitmasks. With `corewise`, every current
// cross edge of the coalition is severed. Stops when `visit` returns false.
void ForEachDeviation(const Game& game, const Matching& current,
                      int max_coalition, bool corewise,
                      const std::function<bool(const Deviation&)>& visit);

std::vector<Deviation> EnumerateDeviations(const Game& game,
                                           const Matching& current,
                                           int max_coalition,
                                           const SearchLimits& limits = {});

}  // namespace extmatch

#endif  // EXTMATCH_DEVIATION_H_
