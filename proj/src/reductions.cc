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

#include "extmatch/reductions.h"

#include <string>

#include "extmatch/errors.h"

namespace extmatch {
namespace {

constexpr std::size_t kMaxBruteForceItems = 20;

std::vector<std::string> Labels(const std::string& prefix, std::size_t count,
                                std::vector<std::string> tail) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

// Entry list keyed by labels; men come first in agent numbering.
class Entries {
 public:
  Entries(const std::vector<std::string>& men, const std::vector<std::string>& women)
      : men_(men), women_(women) {}

  void Add(const std::string& m, const std::string& w, const std::string& z,
           const Rational& value) {
    entries_.push_back({Edge{Find(men_, m), Find(women_, w)}, Agent(z), value});
  }

  const std::vector<ExternalityEntry>& list() const { return entries_; }

 private:
  static int Find(const std::vector<std::string>& side, const std::string& label) {
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (side[i] == label) return static_cast<int>(i);
    }
    return -1;
  }

  int Agent(const std::string& label) const {
    const int m = Find(men_, label);
    return m >= 0 ? m : static_cast<int>(men_.size()) + Find(women_, label);
  }

  const std::vector<std::string>& men_;
  const std::vector<std::string>& women_;
  std::vector<ExternalityEntry> entries_;
};

std::string X(std::size_t i) { return "x" + std::to_string(i); }
std::string Y(std::size_t i) { return "y" + std::to_string(i); }

Rational TotalValue(const KnapsackInstance& instance) {
  Rational total = 0;
  for (const KnapsackItem& item : instance.items) total += item.value;
  return total;
}

}  // namespace

void ValidateKnapsack(const KnapsackInstance& instance) {
  if (instance.items.empty()) throw ValidationError("knapsack needs at least one item");
  for (const KnapsackItem& item : instance.items) {
    if (item.size <= 0 || item.value <= 0) {
      throw ValidationError("knapsack sizes and values must be positive");
    }
  }
  if (instance.budget <= 0 || instance.goal <= 0) {
    throw ValidationError("knapsack budget and goal must be positive");
  }
}

std::optional<std::vector<int>> KnapsackBruteForce(const KnapsackInstance& instance) {
  ValidateKnapsack(instance);
  const std::size_t n = instance.items.size();
  if (n > kMaxBruteForceItems) {
    throw PreconditionError("brute-force knapsack is limited to " +
                            std::to_string(kMaxBruteForceItems) + " items");
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    BigInt size = 0;
    BigInt value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        size += instance.items[i].size;
        value += instance.items[i].value;
      }
    }
    if (size <= instance.budget && value >= instance.goal) {
      std::vector<int> chosen;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) chosen.push_back(static_cast<int>(i));
      }
      return chosen;
    }
  }
  return std::nullopt;
}

NonemptinessReduction ReduceNonemptiness(const KnapsackInstance& instance) {
  ValidateKnapsack(instance);
  const std::size_t n = instance.items.size();
  const auto men = Labels("x", n, {"m1", "m2"});
  const auto women = Labels("y", n, {"w"});
  Entries pi(men, women);
  for (std::size_t i = 1; i <= n; ++i) {
    pi.Add(X(i), Y(i), "m1", -instance.items[i - 1].size);
    pi.Add(X(i), Y(i), "m2", instance.items[i - 1].value);
  }
  pi.Add("m1", "w", "m1", -instance.budget);
  pi.Add("m2", "w", "m2", instance.goal - TotalValue(instance));
  for (std::size_t j = 1; j <= n; ++j) {
    pi.Add(X(j), "w", X(j), -1);
    pi.Add("m1", Y(j), Y(j), -1);
    pi.Add("m2", Y(j), Y(j), -1);
  }
  NonemptinessReduction out{Game::Create(Mode::kManyToMany, men, women, pi.list()),
                            std::nullopt};
  if (n <= kMaxBruteForceItems) {
    if (auto chosen = KnapsackBruteForce(instance)) {
      Matching witness;
      for (int i : *chosen) witness.insert(Edge{i, i});
      out.witness = witness;
    }
  }
  return out;
}

MembershipReduction ReduceMembership(const KnapsackInstance& instance,
                                     const Rational& epsilon) {
  ValidateKnapsack(instance);
  if (!(epsilon > 0 && epsilon < 1)) {
    throw PreconditionError("epsilon must lie strictly between 0 and 1");
  }
  const std::size_t n = instance.items.size();
  const auto men = Labels("x", n, {"m1", "m2"});
  const auto women = Labels("y", n, {"w1", "w2"});
  Entries pi(men, women);
  for (std::size_t i = 1; i <= n; ++i) {
    pi.Add(X(i), Y(i), "m1", -instance.items[i - 1].size);
    pi.Add(X(i), Y(i), "w1", instance.items[i - 1].value);
  }
  pi.Add("m2", "w2", "m1", -instance.budget - epsilon);
  pi.Add("m2", "w2", "w1", instance.goal - epsilon);
  for (const std::string& w : women) {
    if (w != "w1") pi.Add("m1", w, w, -1);
  }
  for (const std::string& m : men) {
    if (m != "m1") pi.Add(m, "w1", m, -1);
  }
  const Edge distinguished{static_cast<int>(n) + 1, static_cast<int>(n) + 1};
  return {Game::Create(Mode::kManyToMany, men, women, pi.list()),
          Matching{distinguished}};
}

MembershipReduction ReduceOneToOnePessimisticMembership(
    const KnapsackInstance& instance) {
  ValidateKnapsack(instance);
  const std::size_t n = instance.items.size();
  const auto men = Labels("x", 2 * n, {"m1", "m2"});
  const auto women = Labels("y", 2 * n, {"w"});
  Entries pi(men, women);
  for (std::size_t i = 1; i <= n; ++i) {
    const KnapsackItem& item = instance.items[i - 1];
    pi.Add(X(i), Y(i), "m1", -item.size);
    pi.Add(X(i), Y(n + i), "m1", -item.size);
    pi.Add(X(i), Y(i), "w", item.value);
    pi.Add(X(i), Y(n + i), "w", item.value);
  }
  pi.Add("m1", "w", "m1", -instance.budget);
  pi.Add("m2", "w", "m2", instance.goal - TotalValue(instance));
  for (std::size_t j = 1; j <= 2 * n; ++j) {
    pi.Add(X(j), "w", X(j), -1);
    pi.Add("m1", Y(j), Y(j), -1);
    pi.Add("m2", Y(j), Y(j), -1);
  }
  return {Game::Create(Mode::kOneToOne, men, women, pi.list()), Matching{}};
}

}  // namespace extmatch
