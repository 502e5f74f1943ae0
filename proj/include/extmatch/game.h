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

#ifndef EXTMATCH_GAME_H_
#define EXTMATCH_GAME_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extmatch/rational.h"

namespace extmatch {

enum class Side { kMen, kWomen };
enum class Mode { kManyToMany, kOneToOne };

std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

// Agents carry a global index: men occupy [0, |M|), women [|M|, |M|+|W|).
// `index` is the position within the agent's own side.
struct AgentId {
  Side side;
  std::string label;
  int index;
};

// A match (m, w), stored by side-local indices.
struct Edge {
  int man = 0;
  int woman = 0;
  auto operator<=>(const Edge&) const = default;
};

// A set of matches. Ordered by (man, woman), so iteration is deterministic.
class Matching {
 public:
  using const_iterator = std::set<Edge>::const_iterator;

  Matching() = default;
  Matching(std::initializer_list<Edge> edges) : edges_(edges) {}
  explicit Matching(const std::vector<Edge>& edges)
      : edges_(edges.begin(), edges.end()) {}

  bool contains(Edge e) const { return edges_.count(e) > 0; }
  bool insert(Edge e) { return edges_.insert(e).second; }
  bool erase(Edge e) { return edges_.erase(e) > 0; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const_iterator begin() const { return edges_.begin(); }
  const_iterator end() const { return edges_.end(); }
  const std::set<Edge>& edges() const { return edges_; }

  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;

 private:
  std::set<Edge> edges_;
};

// Exact values scaled by the game's common denominator. Every sum of table
// values fits without overflow; Game::Create enforces the bound.
using Ticks = std::int64_t;

// Converts a family of rationals to integers over their common denominator.
class TickScale {
 public:
  TickScale() = default;
  // Throws ValidationError if the values are too large for exact int64 sums.
  explicit TickScale(const std::vector<Rational>& values);

  Ticks ToTicks(const Rational& value) const;
  Rational FromTicks(Ticks ticks) const;
  Ticks denominator() const { return denominator_; }

 private:
  Ticks denominator_ = 1;
};

struct ExternalityEntry {
  Edge edge;
  int agent = 0;
  Rational value;
};

// A two-sided matching game with additive externalities: Value(e, z) is what
// agent z receives when match e forms. Immutable once created.
class Game {
 public:
  // Validates labels and entries. Throws ValidationError on duplicate
  // labels, duplicate (m, w, z) keys or out-of-range references.
  static Game Create(Mode mode, std::vector<std::string> men,
                     std::vector<std::string> women,
                     const std::vector<ExternalityEntry>& entries);

  Mode mode() const { return mode_; }
  int num_men() const { return num_men_; }
  int num_women() const { return num_women_; }
  int num_agents() const { return num_men_ + num_women_; }
  int num_edges() const { return num_men_ * num_women_; }

  const AgentId& agent(int a) const;
  const std::string& label(int a) const { return agent(a).label; }
  std::optional<int> FindAgent(std::string_view label) const;
  bool IsMan(int a) const { return a < num_men_; }

  int ManAgent(int man) const { return man; }
  int WomanAgent(int woman) const { return num_men_ + woman; }
  int EdgeIndex(Edge e) const { return e.man * num_women_ + e.woman; }
  Edge EdgeAt(int index) const {
    return Edge{index / num_women_, index % num_women_};
  }
  bool IsEndpoint(Edge e, int a) const {
    return a == ManAgent(e.man) || a == WomanAgent(e.woman);
  }
  // The edge between agent a and opposite-side agent t, in (man, woman) order.
  Edge EdgeBetween(int a, int t) const;

  // Zero when no entry is declared.
  Rational Value(Edge e, int a) const;
  Ticks ValueTicks(int edge_index, int a) const {
    return ticks_[static_cast<std::size_t>(a)][static_cast<std::size_t>(edge_index)];
  }
  // Dense per-agent row indexed by edge index.
  const std::vector<Ticks>& TicksFor(int a) const {
    return ticks_[static_cast<std::size_t>(a)];
  }
  const TickScale& scale() const { return scale_; }

  // Declared entries keyed by (edge index, agent), including explicit zeros.
  const std::map<std::pair<int, int>, Rational>& entries() const {
    return entries_;
  }
  bool HasNegativeEntry() const;

  bool operator==(const Game& other) const;

 private:
  Game() = default;

  Mode mode_ = Mode::kManyToMany;
  int num_men_ = 0;
  int num_women_ = 0;
  std::vector<AgentId> agents_;
  std::map<std::string, int, std::less<>> by_label_;
  std::map<std::pair<int, int>, Rational> entries_;
  TickScale scale_;
  std::vector<std::vector<Ticks>> ticks_;
};

// Sum over e in `matching` of Value(e, agent).
Rational Utility(const Game& game, const Matching& matching, int agent);
Ticks UtilityTicks(const Game& game, const Matching& matching, int agent);

// Highest utility `agent` can reach in any valid matching of the game.
Rational OptBest(const Game& game, int agent);

bool IsValidMatching(const Game& game, const Matching& matching);

// Agent's partners under `matching` (at most one in one-to-one mode).
std::vector<int> Partners(const Game& game, const Matching& matching, int agent);

}  // namespace extmatch

#endif  // EXTMATCH_GAME_H_
