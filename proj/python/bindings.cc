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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extmatch/assignment.h"
#include "extmatch/deviation.h"
#include "extmatch/enumeration.h"
#include "extmatch/errors.h"
#include "extmatch/fixtures.h"
#include "extmatch/game.h"
#include "extmatch/io.h"
#include "extmatch/random_game.h"
#include "extmatch/reductions.h"
#include "extmatch/solvers.h"
#include "extmatch/stability.h"

namespace py = pybind11;

namespace extmatch {
namespace {

using LabelPair = std::pair<std::string, std::string>;

py::object ToFraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(ToString(value));
}

// Accepts int, str and fractions.Fraction.
Rational FromPython(const py::handle& value) {
  return ParseRational(py::str(value).cast<std::string>());
}

int AgentOf(const Game& game, const std::string& label) {
  const auto agent = game.FindAgent(label);
  if (!agent) throw ValidationError("unknown agent \"" + label + "\"");
  return *agent;
}

Matching ToMatching(const Game& game, const std::vector<LabelPair>& pairs) {
  Matching matching;
  for (const auto& [m, w] : pairs) {
    const int a = AgentOf(game, m);
    const int b = AgentOf(game, w);
    if (!game.IsMan(a) || game.IsMan(b)) {
      throw ValidationError("match (" + m + ", " + w + ") must list a man then a woman");
    }
    matching.insert(game.EdgeBetween(a, b));
  }
  return matching;
}

std::vector<LabelPair> FromMatching(const Game& game, const Matching& matching) {
  std::vector<LabelPair> out;
  for (Edge e : matching) {
    out.emplace_back(game.label(game.ManAgent(e.man)),
                     game.label(game.WomanAgent(e.woman)));
  }
  return out;
}

template <typename T>
T Parsed(const std::optional<T>& value, const std::string& what,
         const std::string& text) {
  if (!value) throw ValidationError("unknown " + what + " \"" + text + "\"");
  return *value;
}

SearchLimits Limits(std::optional<int> max_agents) {
  SearchLimits limits;
  if (max_agents) {
    limits.max_agents = *max_agents;
    limits.max_edges = std::max(limits.max_edges, *max_agents * *max_agents / 4);
    limits.max_side = std::max(limits.max_side, *max_agents);
  }
  return limits;
}

py::dict VerdictDict(const Game& game, const StabilityVerdict& verdict) {
  py::dict out;
  out["stable"] = verdict.stable;
  if (verdict.deviation) {
    py::list coalition;
    for (int z : verdict.deviation->coalition) coalition.append(game.label(z));
    out["coalition"] = coalition;
    out["internal"] = FromMatching(game, verdict.deviation->internal);
    out["severed"] = FromMatching(game, verdict.deviation->severed);
    py::list estimates;
    for (const MemberEstimate& e : verdict.estimates) {
      estimates.append(py::make_tuple(game.label(e.agent), ToFraction(e.before),
                                      ToFraction(e.after)));
    }
    out["estimates"] = estimates;
  }
  return out;
}

KnapsackInstance Knapsack(const std::vector<std::pair<std::int64_t, std::int64_t>>& items,
                          std::int64_t budget, std::int64_t goal) {
  KnapsackInstance instance;
  for (const auto& [size, value] : items) instance.items.push_back({size, value});
  instance.budget = budget;
  instance.goal = goal;
  return instance;
}

}  // namespace
}  // namespace extmatch

PYBIND11_MODULE(_core, m) {
  using namespace extmatch;
  m.doc() = "Stable matchings with externalities";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<GuardError>(m, "GuardError", base.ptr());

  py::class_<Game>(m, "Game")
      .def_static("from_json", [](const std::string& text) { return ParseGame(text); },
                  py::arg("text"))
      .def_static(
          "example",
          [](const std::string& name, py::object epsilon, py::object big_delta,
             py::object delta, py::object externality) {
            FixtureParams params;
            if (!epsilon.is_none()) params.epsilon = FromPython(epsilon);
            if (!big_delta.is_none()) params.big_delta = FromPython(big_delta);
            if (!delta.is_none()) params.delta = FromPython(delta);
            if (!externality.is_none()) params.externality = FromPython(externality);
            return BuiltinExample(Parsed(ParseFixture(name), "example", name), params);
          },
          py::arg("name"), py::arg("epsilon") = py::none(),
          py::arg("big_delta") = py::none(), py::arg("delta") = py::none(),
          py::arg("externality") = py::none())
      .def_static(
          "random",
          [](std::uint64_t seed, int men, int women, const std::string& mode,
             double density, std::int64_t min_value, std::int64_t max_value) {
            RandomGameOptions options;
            options.seed = seed;
            options.men = men;
            options.women = women;
            options.mode = Parsed(ParseMode(mode), "mode", mode);
            options.density = density;
            options.min_value = min_value;
            options.max_value = max_value;
            return RandomGame(options);
          },
          py::arg("seed"), py::arg("men") = 2, py::arg("women") = 2,
          py::arg("mode") = "many-to-many", py::arg("density") = 1.0,
          py::arg("min_value") = -3, py::arg("max_value") = 3)
      .def("to_json", [](const Game& g) { return SerializeGame(g); })
      .def_property_readonly("mode", [](const Game& g) { return std::string(ModeName(g.mode())); })
      .def_property_readonly("men", [](const Game& g) {
        std::vector<std::string> out;
        for (int i = 0; i < g.num_men(); ++i) out.push_back(g.label(g.ManAgent(i)));
        return out;
      })
      .def_property_readonly("women", [](const Game& g) {
        std::vector<std::string> out;
        for (int i = 0; i < g.num_women(); ++i) out.push_back(g.label(g.WomanAgent(i)));
        return out;
      })
      .def("value", [](const Game& g, const std::string& man, const std::string& woman,
                       const std::string& agent) {
        return ToFraction(g.Value(*ToMatching(g, {{man, woman}}).begin(), AgentOf(g, agent)));
      }, py::arg("man"), py::arg("woman"), py::arg("agent"))
      .def("utility", [](const Game& g, const std::vector<LabelPair>& matching,
                         const std::string& agent) {
        return ToFraction(Utility(g, ToMatching(g, matching), AgentOf(g, agent)));
      }, py::arg("matching"), py::arg("agent"))
      .def("opt_best", [](const Game& g, const std::string& agent) {
        return ToFraction(OptBest(g, AgentOf(g, agent)));
      }, py::arg("agent"))
      .def("is_valid_matching", [](const Game& g, const std::vector<LabelPair>& matching) {
        return IsValidMatching(g, ToMatching(g, matching));
      }, py::arg("matching"))
      .def("__eq__", [](const Game& a, const Game& b) { return a == b; });

  m.def("check", [](const Game& g, const std::vector<LabelPair>& matching,
                    const std::string& attitude, const std::string& concept_kind,
                    const std::string& strength, std::optional<int> max_agents) {
    const StabilityVerdict verdict = CheckMembership(
        g, ToMatching(g, matching), Parsed(ParseAttitude(attitude), "attitude", attitude),
        Parsed(ParseConcept(concept_kind), "concept", concept_kind),
        Parsed(ParseStrength(strength), "strength", strength), Limits(max_agents));
    return VerdictDict(g, verdict);
  }, py::arg("game"), py::arg("matching"), py::arg("attitude") = "neutral",
     py::arg("concept") = "setwise", py::arg("strength") = "strong",
     py::arg("max_agents") = py::none());

  m.def("stable_set", [](const Game& g, const std::string& attitude,
                         const std::string& concept_kind, const std::string& strength,
                         std::optional<int> max_agents) {
    const StableSetReport report = StableSet(
        g, Parsed(ParseAttitude(attitude), "attitude", attitude),
        Parsed(ParseConcept(concept_kind), "concept", concept_kind),
        Parsed(ParseStrength(strength), "strength", strength), Limits(max_agents));
    std::vector<std::vector<LabelPair>> out;
    for (const Matching& member : report.members) out.push_back(FromMatching(g, member));
    return out;
  }, py::arg("game"), py::arg("attitude") = "neutral", py::arg("concept") = "setwise",
     py::arg("strength") = "strong", py::arg("max_agents") = py::none());

  m.def("inclusion_audit", [](const Game& g, const std::string& strength) {
    const InclusionAudit audit =
        AuditInclusions(g, Parsed(ParseStrength(strength), "strength", strength));
    py::dict out;
    auto list = [&](const std::vector<Matching>& members) {
      std::vector<std::vector<LabelPair>> v;
      for (const Matching& x : members) v.push_back(FromMatching(g, x));
      return v;
    };
    out["optimistic"] = list(audit.optimistic);
    out["neutral"] = list(audit.neutral);
    out["pessimistic"] = list(audit.pessimistic);
    out["violations"] = audit.violations;
    out["holds"] = audit.holds();
    return out;
  }, py::arg("game"), py::arg("strength") = "strong");

  m.def("classify_edges", [](const Game& g) {
    const EdgeClassification classes = ClassifyEdges(g);
    py::dict out;
    for (std::size_t i = 0; i < classes.classes.size(); ++i) {
      const Edge e = g.EdgeAt(static_cast<int>(i));
      out[py::make_tuple(g.label(g.ManAgent(e.man)), g.label(g.WomanAgent(e.woman)))] =
          std::string(EdgeClassName(classes.classes[i]));
    }
    return out;
  }, py::arg("game"));

  m.def("solve_gs_neutral", [](const Game& g) {
    return FromMatching(g, SolveNeutralPairwiseGs(g));
  }, py::arg("game"));

  m.def("solve_restricted_pessimistic", [](const Game& g) {
    const RestrictedPessimisticSolution s = SolveRestrictedPessimistic(g);
    py::dict table;
    for (int a = 0; a < g.num_men(); ++a) {
      for (int b = 0; b < g.num_women(); ++b) {
        const std::string man = g.label(g.ManAgent(a));
        const std::string woman = g.label(g.WomanAgent(b));
        table[py::make_tuple(man, woman)] = ToFraction(s.estimates.ManScore(a, b));
        table[py::make_tuple(woman, man)] = ToFraction(s.estimates.WomanScore(b, a));
      }
    }
    return py::make_tuple(FromMatching(g, s.matching), table);
  }, py::arg("game"));

  m.def("fpt_optimistic", [](const Game& g, const std::string& strength)
            -> std::optional<std::vector<LabelPair>> {
    const FptResult r =
        FptOptimisticNonemptiness(g, Parsed(ParseStrength(strength), "strength", strength));
    if (!r.matching) return std::nullopt;
    return FromMatching(g, *r.matching);
  }, py::arg("game"), py::arg("strength") = "strong");

  m.def("knapsack_bruteforce", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& items,
                                  std::int64_t budget, std::int64_t goal) {
    return KnapsackBruteForce(Knapsack(items, budget, goal));
  }, py::arg("items"), py::arg("budget"), py::arg("goal"));

  m.def("reduce_knapsack", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& items,
                              std::int64_t budget, std::int64_t goal,
                              const std::string& variant, py::object epsilon)
            -> std::pair<Game, std::optional<std::vector<LabelPair>>> {
    const KnapsackInstance instance = Knapsack(items, budget, goal);
    if (variant == "nonempty") {
      NonemptinessReduction r = ReduceNonemptiness(instance);
      std::optional<std::vector<LabelPair>> witness;
      if (r.witness) witness = FromMatching(r.game, *r.witness);
      return {r.game, witness};
    }
    if (variant == "membership") {
      MembershipReduction r = ReduceMembership(
          instance, epsilon.is_none() ? Rational(1, 2) : FromPython(epsilon));
      return {r.game, FromMatching(r.game, r.distinguished)};
    }
    if (variant == "pessimistic-membership") {
      MembershipReduction r = ReduceOneToOnePessimisticMembership(instance);
      return {r.game, FromMatching(r.game, r.distinguished)};
    }
    throw ValidationError("unknown variant \"" + variant + "\"");
  }, py::arg("items"), py::arg("budget"), py::arg("goal"),
     py::arg("variant") = "nonempty", py::arg("epsilon") = py::none());

  m.def("max_weight_assignment", [](const std::vector<std::vector<py::object>>& weights,
                                    bool allow_unmatched) {
    const int rows = static_cast<int>(weights.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(weights[0].size());
    WeightTable table(rows, cols);
    for (int r = 0; r < rows; ++r) {
      if (static_cast<int>(weights[static_cast<std::size_t>(r)].size()) != cols) {
        throw ValidationError("weight rows must have equal length");
      }
      for (int c = 0; c < cols; ++c) {
        table.set(r, c, FromPython(weights[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
      }
    }
    const Assignment a = MaxWeightAssignment(table, allow_unmatched);
    std::vector<std::pair<int, int>> pairs;
    for (Edge e : a.matching) pairs.emplace_back(e.man, e.woman);
    return py::make_tuple(pairs, ToFraction(a.value));
  }, py::arg("weights"), py::arg("allow_unmatched") = true);
}
