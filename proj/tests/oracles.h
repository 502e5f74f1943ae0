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

// Brute-force reference implementations used as test oracles. They work
// straight from the definitions on small games and share no code with the
// library beyond the data model.

#ifndef EXTMATCH_TESTS_ORACLES_H_
#define EXTMATCH_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "extmatch/deviation.h"
#include "extmatch/game.h"
#include "extmatch/rational.h"

namespace extmatch::oracle {

inline std::vector<Edge> AllEdges(const Game& game) {
  std::vector<Edge> edges;
  for (int m = 0; m < game.num_men(); ++m) {
    for (int w = 0; w < game.num_women(); ++w) edges.push_back({m, w});
  }
  return edges;
}

inline bool OneToOne(const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].man == edges[j].man || edges[i].woman == edges[j].woman) return false;
    }
  }
  return true;
}

inline std::vector<Edge> Pick(const std::vector<Edge>& pool, std::uint64_t mask) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask >> i & 1) out.push_back(pool[i]);
  }
  return out;
}

// Every subset of `pool`, optionally restricted to one-to-one subsets.
inline std::vector<std::vector<Edge>> Subsets(const std::vector<Edge>& pool,
                                              bool one_to_one) {
  std::vector<std::vector<Edge>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<Edge> s = Pick(pool, mask);
    if (!one_to_one || OneToOne(s)) out.push_back(s);
  }
  return out;
}

inline std::vector<Matching> AllMatchings(const Game& game) {
  std::vector<Matching> out;
  for (const auto& s : Subsets(AllEdges(game), game.mode() == Mode::kOneToOne)) {
    out.emplace_back(s);
  }
  return out;
}

inline Rational UtilityOf(const Game& game, const std::vector<Edge>& edges, int z) {
  Rational total = 0;
  for (Edge e : edges) total += game.Value(e, z);
  return total;
}

inline Rational BestUtility(const Game& game, int z) {
  std::optional<Rational> best;
  for (const Matching& m : AllMatchings(game)) {
    const Rational u = UtilityOf(game, {m.begin(), m.end()}, z);
    if (!best || u > *best) best = u;
  }
  return *best;
}

// Optimal one-to-one assignment value by enumeration. Without
// `allow_unmatched`, only assignments of size min(rows, cols) count.
inline Rational AssignmentValue(const std::vector<std::vector<Rational>>& w, bool maximize,
                                bool allow_unmatched) {
  const int rows = static_cast<int>(w.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(w[0].size());
  std::vector<Edge> pool;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) pool.push_back({r, c});
  }
  std::optional<Rational> best;
  for (const auto& s : Subsets(pool, true)) {
    if (!allow_unmatched && static_cast<int>(s.size()) != std::min(rows, cols)) continue;
    Rational v = 0;
    for (Edge e : s) v += w[static_cast<std::size_t>(e.man)][static_cast<std::size_t>(e.woman)];
    if (!best || (maximize ? v > *best : v < *best)) best = v;
  }
  return best.value_or(Rational(0));
}

struct Move {
  std::vector<int> coalition;
  std::vector<Edge> internal;
  std::vector<Edge> severed;
};

inline bool Inside(const std::vector<int>& coalition, int agent) {
  return std::find(coalition.begin(), coalition.end(), agent) != coalition.end();
}

inline int Count(const Game& game, const std::vector<int>& coalition, Edge e) {
  return Inside(coalition, game.ManAgent(e.man)) + Inside(coalition, game.WomanAgent(e.woman));
}

inline bool Has(const std::vector<Edge>& edges, Edge e) {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

inline std::vector<Edge> Realized(const Game& game, const Matching& a, const Move& d) {
  std::vector<Edge> out = d.internal;
  for (Edge e : a) {
    const int c = Count(game, d.coalition, e);
    if (c == 0 || (c == 1 && !Has(d.severed, e))) out.push_back(e);
  }
  return out;
}

// Consent, severance and the one-action-per-member rule.
inline bool Legal(const Game& game, const Matching& a, const Move& d) {
  for (Edge e : d.internal) {
    if (Count(game, d.coalition, e) != 2) return false;
  }
  for (Edge e : d.severed) {
    if (!a.contains(e) || Count(game, d.coalition, e) != 1) return false;
  }
  for (int z : d.coalition) {
    bool acted = false;
    auto touches = [&](Edge e) { return game.IsEndpoint(e, z); };
    for (Edge e : d.internal) acted = acted || (touches(e) && !a.contains(e));
    for (Edge e : d.severed) acted = acted || touches(e);
    for (Edge e : a) {
      acted = acted || (touches(e) && Count(game, d.coalition, e) == 2 && !Has(d.internal, e));
    }
    if (!acted) return false;
  }
  return game.mode() == Mode::kManyToMany || OneToOne(Realized(game, a, d));
}

// z's estimate: the best or worst outcome over every reaction the attitude
// allows the outsiders, enumerated explicitly.
inline Rational Estimate(const Game& game, const Matching& a, const Move& d, int z,
                         Attitude attitude) {
  const std::vector<Edge> realized = Realized(game, a, d);
  if (attitude == Attitude::kNeutral) return UtilityOf(game, realized, z);
  const bool one_to_one = game.mode() == Mode::kOneToOne;
  std::vector<Edge> pool;
  if (one_to_one) {
    for (Edge e : AllEdges(game)) {
      if (Count(game, d.coalition, e) == 0) pool.push_back(e);
    }
  } else if (attitude == Attitude::kOptimistic) {
    for (Edge e : AllEdges(game)) {
      if (Count(game, d.coalition, e) < 2) pool.push_back(e);
    }
  } else {
    for (Edge e : AllEdges(game)) {
      const int c = Count(game, d.coalition, e);
      if (c == 0 || (c == 1 && a.contains(e) && !Has(d.severed, e))) pool.push_back(e);
    }
  }
  const auto reactions = Subsets(pool, one_to_one);
  std::size_t largest = 0;
  for (const auto& r : reactions) largest = std::max(largest, r.size());
  std::optional<Rational> pick;
  for (const auto& r : reactions) {
    if (attitude == Attitude::kRestrictedPessimistic && r.size() != largest) continue;
    std::vector<Edge> after = d.internal;
    after.insert(after.end(), r.begin(), r.end());
    const Rational u = UtilityOf(game, after, z);
    const bool take = attitude == Attitude::kOptimistic ? (!pick || u > *pick)
                                                         : (!pick || u < *pick);
    if (take) pick = u;
  }
  return *pick;
}

inline bool Blocking(const Game& game, const Matching& a, const Move& d, Attitude attitude,
                     Strength strength) {
  bool strict = false;
  for (int z : d.coalition) {
    const Rational before = UtilityOf(game, {a.begin(), a.end()}, z);
    const Rational after = Estimate(game, a, d, z, attitude);
    if (after < before) return false;
    if (after > before) {
      strict = true;
    } else if (strength == Strength::kWeak) {
      return false;
    }
  }
  return strict;
}

// Visits every legal move with at most `max_size` members.
inline void ForEachMove(const Game& game, const Matching& a, int max_size, bool corewise,
                        const std::function<bool(const Move&)>& visit) {
  const int n = game.num_agents();
  for (std::uint32_t bmask = 1; bmask < (std::uint32_t{1} << n); ++bmask) {
    Move d;
    for (int z = 0; z < n; ++z) {
      if (bmask >> z & 1) d.coalition.push_back(z);
    }
    if (static_cast<int>(d.coalition.size()) > max_size) continue;
    std::vector<Edge> inner;
    std::vector<Edge> cross;
    for (Edge e : AllEdges(game)) {
      if (Count(game, d.coalition, e) == 2) inner.push_back(e);
    }
    for (Edge e : a) {
      if (Count(game, d.coalition, e) == 1) cross.push_back(e);
    }
    for (const auto& internal : Subsets(inner, false)) {
      for (const auto& severed : Subsets(cross, false)) {
        if (corewise && severed.size() != cross.size()) continue;
        d.internal = internal;
        d.severed = severed;
        if (Legal(game, a, d) && !visit(d)) return;
      }
    }
  }
}

inline bool Blocked(const Game& game, const Matching& a, Attitude attitude, Strength strength,
                    bool corewise = false, int max_size = 64) {
  bool blocked = false;
  ForEachMove(game, a, max_size, corewise, [&](const Move& d) {
    blocked = Blocking(game, a, d, attitude, strength);
    return !blocked;
  });
  return blocked;
}

inline Move ToMove(const Deviation& d) {
  return {d.coalition, {d.internal.begin(), d.internal.end()},
          {d.severed.begin(), d.severed.end()}};
}

}  // namespace extmatch::oracle

#endif  // EXTMATCH_TESTS_ORACLES_H_
