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

#include "extmatch/game.h"

#include <algorithm>
#include <limits>

#include "extmatch/assignment.h"
#include "extmatch/errors.h"

namespace extmatch {
namespace {

// Keeps every partial sum of table values (and the assignment potentials
// derived from them) well inside int64.
const BigInt kMaxTickMass = BigInt(1) << 56;

BigInt Lcm(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

std::vector<Ticks> OutsideBlock(const Game& game, int agent,
                                const std::vector<int>& men,
                                const std::vector<int>& women) {
  std::vector<Ticks> block;
  block.reserve(men.size() * women.size());
  for (int m : men) {
    for (int w : women) {
      block.push_back(game.ValueTicks(game.EdgeIndex({m, w}), agent));
    }
  }
  return block;
}

}  // namespace

std::string_view ModeName(Mode mode) {
  return mode == Mode::kOneToOne ? "one-to-one" : "many-to-many";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "many-to-many") return Mode::kManyToMany;
  if (name == "one-to-one") return Mode::kOneToOne;
  return std::nullopt;
}

TickScale::TickScale(const std::vector<Rational>& values) {
  BigInt denominator = 1;
  for (const Rational& v : values) {
    denominator = Lcm(denominator, boost::multiprecision::denominator(v));
  }
  BigInt mass = 0;
  for (const Rational& v : values) {
    mass += boost::multiprecision::abs(boost::multiprecision::numerator(v)) *
            (denominator / boost::multiprecision::denominator(v));
  }
  if (denominator > kMaxTickMass || mass > kMaxTickMass) {
    throw ValidationError(
        "externality values too large for exact evaluation (common "
        "denominator " + denominator.str() + ")");
  }
  denominator_ = static_cast<Ticks>(denominator);
}

Ticks TickScale::ToTicks(const Rational& value) const {
  Rational scaled = value * denominator_;
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw PreconditionError("value " + ToString(value) +
                            " is not a multiple of 1/" +
                            std::to_string(denominator_));
  }
  const BigInt n = boost::multiprecision::numerator(scaled);
  if (boost::multiprecision::abs(n) > kMaxTickMass) {
    throw PreconditionError("value " + ToString(value) + " out of range");
  }
  return static_cast<Ticks>(n);
}

Rational TickScale::FromTicks(Ticks ticks) const {
  return Rational(BigInt(ticks), BigInt(denominator_));
}

Game Game::Create(Mode mode, std::vector<std::string> men,
                  std::vector<std::string> women,
                  const std::vector<ExternalityEntry>& entries) {
  Game game;
  game.mode_ = mode;
  game.num_men_ = static_cast<int>(men.size());
  game.num_women_ = static_cast<int>(women.size());
  auto add_agent = [&game](Side side, std::string label, int index) {
    if (label.empty()) throw ValidationError("agent labels must be nonempty");
    const int global = static_cast<int>(game.agents_.size());
    if (!game.by_label_.emplace(label, global).second) {
      throw ValidationError("duplicate agent label \"" + label + "\"");
    }
    game.agents_.push_back(AgentId{side, std::move(label), index});
  };
  for (std::size_t i = 0; i < men.size(); ++i) {
    add_agent(Side::kMen, std::move(men[i]), static_cast<int>(i));
  }
  for (std::size_t i = 0; i < women.size(); ++i) {
    add_agent(Side::kWomen, std::move(women[i]), static_cast<int>(i));
  }

  std::vector<Rational> values;
  values.reserve(entries.size());
  for (const ExternalityEntry& entry : entries) {
    if (entry.edge.man < 0 || entry.edge.man >= game.num_men_ ||
        entry.edge.woman < 0 || entry.edge.woman >= game.num_women_ ||
        entry.agent < 0 || entry.agent >= game.num_agents()) {
      throw ValidationError("externality entry references an unknown agent");
    }
    const auto key = std::make_pair(game.EdgeIndex(entry.edge), entry.agent);
    if (!game.entries_.emplace(key, entry.value).second) {
      throw ValidationError(
          "duplicate externality entry (" + game.label(game.ManAgent(entry.edge.man)) +
          ", " + game.label(game.WomanAgent(entry.edge.woman)) + " | " +
          game.label(entry.agent) + ")");
    }
    values.push_back(entry.value);
  }
  game.scale_ = TickScale(values);
  game.ticks_.assign(static_cast<std::size_t>(game.num_agents()),
                     std::vector<Ticks>(static_cast<std::size_t>(game.num_edges()), 0));
  for (const auto& [key, value] : game.entries_) {
    game.ticks_[static_cast<std::size_t>(key.second)]
               [static_cast<std::size_t>(key.first)] = game.scale_.ToTicks(value);
  }
  return game;
}

const AgentId& Game::agent(int a) const {
  if (a < 0 || a >= num_agents()) {
    throw PreconditionError("agent index " + std::to_string(a) +
                            " is not an agent of the game");
  }
  return agents_[static_cast<std::size_t>(a)];
}

std::optional<int> Game::FindAgent(std::string_view label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

Edge Game::EdgeBetween(int a, int t) const {
  if (IsMan(a) == IsMan(t)) {
    throw PreconditionError("agents " + label(a) + " and " + label(t) +
                            " are on the same side");
  }
  return IsMan(a) ? Edge{a, t - num_men_} : Edge{t, a - num_men_};
}

Rational Game::Value(Edge e, int a) const {
  auto it = entries_.find({EdgeIndex(e), a});
  return it == entries_.end() ? Rational(0) : it->second;
}

bool Game::HasNegativeEntry() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.second < 0; });
}

bool Game::operator==(const Game& other) const {
  if (mode_ != other.mode_ || num_men_ != other.num_men_ ||
      num_women_ != other.num_women_ || entries_ != other.entries_) {
    return false;
  }
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i].label != other.agents_[i].label) return false;
  }
  return true;
}

Ticks UtilityTicks(const Game& game, const Matching& matching, int agent) {
  game.agent(agent);  // range check
  const std::vector<Ticks>& row = game.TicksFor(agent);
  Ticks total = 0;
  for (Edge e : matching) total += row[static_cast<std::size_t>(game.EdgeIndex(e))];
  return total;
}

Rational Utility(const Game& game, const Matching& matching, int agent) {
  return game.scale().FromTicks(UtilityTicks(game, matching, agent));
}

Rational OptBest(const Game& game, int agent) {
  game.agent(agent);  // range check
  const std::vector<Ticks>& row = game.TicksFor(agent);
  if (game.mode() == Mode::kManyToMany) {
    Ticks total = 0;
    for (Ticks v : row) total += std::max<Ticks>(v, 0);
    return game.scale().FromTicks(total);
  }
  std::vector<int> men;
  std::vector<int> women;
  for (int m = 0; m < game.num_men(); ++m) {
    if (game.ManAgent(m) != agent) men.push_back(m);
  }
  for (int w = 0; w < game.num_women(); ++w) {
    if (game.WomanAgent(w) != agent) women.push_back(w);
  }
  // Staying single.
  Ticks best = kernel::MaxWeightValue(OutsideBlock(game, agent, men, women),
                                      static_cast<int>(men.size()),
                                      static_cast<int>(women.size()), true);
  const bool is_man = game.IsMan(agent);
  const std::vector<int>& opposite = is_man ? women : men;
  for (int t : opposite) {
    const int partner = is_man ? game.WomanAgent(t) : game.ManAgent(t);
    const Edge own = game.EdgeBetween(agent, partner);
    std::vector<int> rest_men = men;
    std::vector<int> rest_women = women;
    if (is_man) {
      std::erase(rest_women, t);
    } else {
      std::erase(rest_men, t);
    }
    const Ticks candidate =
        row[static_cast<std::size_t>(game.EdgeIndex(own))] +
        kernel::MaxWeightValue(OutsideBlock(game, agent, rest_men, rest_women),
                               static_cast<int>(rest_men.size()),
                               static_cast<int>(rest_women.size()), true);
    best = std::max(best, candidate);
  }
  return game.scale().FromTicks(best);
}

bool IsValidMatching(const Game& game, const Matching& matching) {
  std::vector<int> degree(static_cast<std::size_t>(game.num_agents()), 0);
  for (Edge e : matching) {
    if (e.man < 0 || e.man >= game.num_men() || e.woman < 0 ||
        e.woman >= game.num_women()) {
      return false;
    }
    ++degree[static_cast<std::size_t>(game.ManAgent(e.man))];
    ++degree[static_cast<std::size_t>(game.WomanAgent(e.woman))];
  }
  if (game.mode() == Mode::kOneToOne) {
    return std::all_of(degree.begin(), degree.end(),
                       [](int d) { return d <= 1; });
  }
  return true;
}

std::vector<int> Partners(const Game& game, const Matching& matching,
                          int agent) {
  std::vector<int> partners;
  for (Edge e : matching) {
    if (game.ManAgent(e.man) == agent) partners.push_back(game.WomanAgent(e.woman));
    if (game.WomanAgent(e.woman) == agent) partners.push_back(game.ManAgent(e.man));
  }
  return partners;
}

}  // namespace extmatch
