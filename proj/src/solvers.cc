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

#include "extmatch/solvers.h"

#include "extmatch/enumeration.h"
#include "extmatch/errors.h"
#include "extmatch/stability.h"

namespace extmatch {
namespace {

FptResult Exhaustive(const Game& game, Strength strength,
                     const SearchLimits& limits, std::uint64_t checked) {
  FptResult result;
  result.route = FptRoute::kExhaustive;
  result.candidates_checked = checked;
  ForEachMatching(game, [&](const Matching& m) {
    ++result.candidates_checked;
    if (OptimisticSetwiseMembershipPoly(game, m, strength).stable) {
      result.matching = m;
      return false;
    }
    return true;
  }, limits);
  return result;
}

void RequireOneToOne(const Game& game) {
  if (game.mode() != Mode::kOneToOne) {
    throw PreconditionError("this solver requires a one-to-one game");
  }
}

}  // namespace

std::string_view EdgeClassName(EdgeClass edge_class) {
  switch (edge_class) {
    case EdgeClass::kR: return "R";
    case EdgeClass::kF: return "F";
    case EdgeClass::kFN: return "FN";
    case EdgeClass::kFP: return "FP";
    case EdgeClass::kC: return "C";
  }
  return "";
}

std::vector<int> EdgeClassification::EdgesOf(EdgeClass edge_class) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == edge_class) out.push_back(static_cast<int>(i));
  }
  return out;
}

EdgeClassification ClassifyEdges(const Game& game) {
  EdgeClassification result;
  for (int index = 0; index < game.num_edges(); ++index) {
    const Edge e = game.EdgeAt(index);
    const int m = game.ManAgent(e.man);
    const int w = game.WomanAgent(e.woman);
    const Ticks own_m = game.ValueTicks(index, m);
    const Ticks own_w = game.ValueTicks(index, w);
    if (own_m < 0 || own_w < 0) {
      result.classes.push_back(EdgeClass::kF);
      continue;
    }
    if (own_m + own_w > 0) {
      result.classes.push_back(EdgeClass::kR);
      continue;
    }
    bool helps = false;
    bool hurts = false;
    for (int z = 0; z < game.num_agents(); ++z) {
      if (z == m || z == w) continue;
      const Ticks v = game.ValueTicks(index, z);
      helps = helps || v > 0;
      hurts = hurts || v < 0;
    }
    result.classes.push_back(!hurts ? EdgeClass::kFP
                             : !helps ? EdgeClass::kFN
                                      : EdgeClass::kC);
  }
  return result;
}

FptResult FptOptimisticNonemptiness(const Game& game, Strength strength,
                                    const FptOptions& options) {
  const EdgeClassification classes = ClassifyEdges(game);
  const std::vector<int> controversial = classes.EdgesOf(EdgeClass::kC);
  if (static_cast<int>(controversial.size()) > options.max_controversial) {
    throw PreconditionError(
        std::to_string(controversial.size()) +
        " controversial matches exceed the limit of " +
        std::to_string(options.max_controversial));
  }
  if (strength == Strength::kWeak) {
    return Exhaustive(game, strength, options.limits, 0);
  }
  Matching base;
  for (int index : classes.EdgesOf(EdgeClass::kR)) base.insert(game.EdgeAt(index));
  for (int index : classes.EdgesOf(EdgeClass::kFP)) base.insert(game.EdgeAt(index));

  FptResult result;
  const std::uint64_t subsets = std::uint64_t{1} << controversial.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    Matching candidate = base;
    for (std::size_t i = 0; i < controversial.size(); ++i) {
      if (s >> i & 1) candidate.insert(game.EdgeAt(controversial[i]));
    }
    if (!IsValidMatching(game, candidate)) continue;
    ++result.candidates_checked;
    if (OptimisticSetwiseMembershipPoly(game, candidate, strength).stable) {
      result.matching = std::move(candidate);
      return result;
    }
  }
  if (game.mode() == Mode::kOneToOne) {
    return Exhaustive(game, strength, options.limits, result.candidates_checked);
  }
  return result;
}

Matching SolveNeutralPairwiseGs(const Game& game) {
  RequireOneToOne(game);
  if (game.HasNegativeEntry()) {
    throw PreconditionError("this solver requires every entry to be non-negative");
  }
  PreferenceTable prefs(game.num_men(), game.num_women());
  for (int m = 0; m < game.num_men(); ++m) {
    for (int w = 0; w < game.num_women(); ++w) {
      const Edge e{m, w};
      prefs.SetManScore(m, w, game.Value(e, game.ManAgent(m)));
      prefs.SetWomanScore(w, m, game.Value(e, game.WomanAgent(w)));
    }
  }
  return GaleShapley(prefs);
}

RestrictedPessimisticSolution SolveRestrictedPessimistic(const Game& game) {
  RequireOneToOne(game);
  PreferenceTable prefs(game.num_men(), game.num_women());
  // Worst value for z of a largest matching among everyone but z and t.
  auto score = [&game](int z, int t) {
    const Edge own = game.EdgeBetween(z, t);
    std::vector<Ticks> block;
    for (int m = 0; m < game.num_men(); ++m) {
      if (game.ManAgent(m) == z || game.ManAgent(m) == t) continue;
      for (int w = 0; w < game.num_women(); ++w) {
        if (game.WomanAgent(w) == z || game.WomanAgent(w) == t) continue;
        block.push_back(game.ValueTicks(game.EdgeIndex({m, w}), z));
      }
    }
    // z and t sit on opposite sides, so one agent leaves each side.
    const int rows = game.num_men() - 1;
    const int cols = game.num_women() - 1;
    const Ticks total = game.ValueTicks(game.EdgeIndex(own), z) +
                        kernel::MinWeightMaxCardinalityValue(block, rows, cols);
    return game.scale().FromTicks(total);
  };
  for (int m = 0; m < game.num_men(); ++m) {
    for (int w = 0; w < game.num_women(); ++w) {
      prefs.SetManScore(m, w, score(game.ManAgent(m), game.WomanAgent(w)));
      prefs.SetWomanScore(w, m, score(game.WomanAgent(w), game.ManAgent(m)));
    }
  }
  return {GaleShapley(prefs), prefs};
}

}  // namespace extmatch
