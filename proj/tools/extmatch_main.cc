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

// Command-line front end. Exit codes: 0 stable / nonempty, 1 unstable or
// audit violation, 2 usage or input error, 3 size guard, 4 proven empty.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "extmatch/deviation.h"
#include "extmatch/enumeration.h"
#include "extmatch/errors.h"
#include "extmatch/fixtures.h"
#include "extmatch/io.h"
#include "extmatch/random_game.h"
#include "extmatch/reductions.h"
#include "extmatch/solvers.h"
#include "extmatch/stability.h"

namespace extmatch {
namespace {

constexpr int kExitStable = 0;
constexpr int kExitUnstable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitEmpty = 4;

struct Common {
  std::string attitude = "neutral";
  std::string concept_kind = "setwise";
  std::string strength = "strong";
  std::optional<int> max_agents;
  std::string out;
};

SearchLimits LimitsFrom(const Common& c) {
  SearchLimits limits;
  if (c.max_agents) {
    const int n = *c.max_agents;
    limits.max_agents = n;
    limits.max_edges = std::max(limits.max_edges, n * n / 4);
    limits.max_side = std::max(limits.max_side, n);
  }
  return limits;
}

void Emit(const Common& c, const Json& doc) {
  const std::string text = Dump(doc);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    WriteFileAtomic(c.out, text);
  }
}

Attitude AttitudeOf(const Common& c) { return *ParseAttitude(c.attitude); }
Concept ConceptOf(const Common& c) { return *ParseConcept(c.concept_kind); }
Strength StrengthOf(const Common& c) { return *ParseStrength(c.strength); }

Rational ParseFlagValue(const std::string& text) { return ParseRational(text); }

std::vector<KnapsackItem> ParseItems(const std::string& text) {
  std::vector<KnapsackItem> items;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw ValidationError("items are size:value pairs separated by commas");
    }
    try {
      std::size_t used = 0;
      KnapsackItem item;
      item.size = std::stoll(token.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(token);
      const std::string rest = token.substr(colon + 1);
      item.value = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(token);
      items.push_back(item);
    } catch (const std::logic_error&) {
      throw ValidationError("malformed item \"" + token + "\"");
    }
  }
  return items;
}

void AddCommon(CLI::App* cmd, Common& c, bool attitude, bool concept_kind,
               bool strength) {
  if (attitude) {
    cmd->add_option("--attitude", c.attitude, "Reaction of non-deviating agents")
        ->check(CLI::IsMember({"neutral", "optimistic", "pessimistic",
                               "restricted-pessimistic"}));
  }
  if (concept_kind) {
    cmd->add_option("--concept", c.concept_kind, "Blocking coalitions considered")
        ->check(CLI::IsMember({"setwise", "corewise", "pairwise"}));
  }
  if (strength) {
    cmd->add_option("--strength", c.strength, "strong: nobody loses, someone gains; weak: all gain")
        ->check(CLI::IsMember({"strong", "weak"}));
  }
  cmd->add_option("--max-agents", c.max_agents,
                  "Raise the exhaustive-search size guard to this many agents")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "Write output here instead of stdout");
}

int Run(int argc, char** argv) {
  CLI::App app{"Stable matchings with externalities"};
  app.require_subcommand(1);
  Common c;
  int exit_code = kExitStable;

  // check
  std::string game_path;
  std::string matching_path;
  std::string replay_path;
  auto* check = app.add_subcommand("check", "Test a matching for stability");
  check->add_option("game", game_path, "Game file")->required();
  check->add_option("matching", matching_path, "Matching file")->required();
  check->add_option("--replay", replay_path,
                    "Re-evaluate the deviation stored in a certificate file");
  AddCommon(check, c, true, true, true);
  check->callback([&] {
    const Game game = ParseGame(ReadFile(game_path));
    const Matching matching = ParseMatching(game, ReadFile(matching_path));
    if (!IsValidMatching(game, matching)) {
      throw ValidationError("matching violates the game's one-to-one constraint");
    }
    if (!replay_path.empty()) {
      const Deviation d = DeviationFromJson(game, ParseJson(ReadFile(replay_path)));
      const Legality legality = CheckDeviation(game, matching, d);
      Json doc;
      doc["legal"] = legality.legal;
      if (!legality) {
        doc["reason"] = legality.reason;
        Emit(c, doc);
        exit_code = kExitUsage;
        return;
      }
      const bool blocking =
          IsBlocking(game, matching, d, AttitudeOf(c), StrengthOf(c));
      doc["blocking"] = blocking;
      Emit(c, doc);
      exit_code = blocking ? kExitUnstable : kExitStable;
      return;
    }
    const StabilityVerdict verdict = CheckMembership(
        game, matching, AttitudeOf(c), ConceptOf(c), StrengthOf(c), LimitsFrom(c));
    Emit(c, VerdictToJson(game, verdict, AttitudeOf(c), ConceptOf(c), StrengthOf(c)));
    exit_code = verdict.stable ? kExitStable : kExitUnstable;
  });

  // solve
  std::string algorithm;
  auto* solve = app.add_subcommand("solve", "Construct a stable matching");
  solve->add_option("game", game_path, "Game file")->required();
  solve->add_option("--algorithm", algorithm)
      ->required()
      ->check(CLI::IsMember({"gs-neutral", "restricted-pessimistic", "fpt-optimistic"}));
  AddCommon(solve, c, false, false, true);
  solve->callback([&] {
    const Game game = ParseGame(ReadFile(game_path));
    if (algorithm == "gs-neutral") {
      Emit(c, MatchingToJson(game, SolveNeutralPairwiseGs(game)));
    } else if (algorithm == "restricted-pessimistic") {
      if (game.HasNegativeEntry()) {
        std::cerr << "warning: game has negative entries; the restricted "
                     "pessimistic guarantee is stated for non-negative games\n";
      }
      Emit(c, RestrictedSolutionToJson(game, SolveRestrictedPessimistic(game)));
    } else {
      FptOptions options;
      options.limits = LimitsFrom(c);
      const FptResult result = FptOptimisticNonemptiness(game, StrengthOf(c), options);
      Json doc;
      doc["empty"] = !result.matching.has_value();
      doc["route"] = result.route == FptRoute::kCandidates ? "candidates" : "exhaustive";
      doc["candidates_checked"] = result.candidates_checked;
      if (result.matching) doc["matches"] = EdgesToJson(game, *result.matching);
      Emit(c, doc);
      exit_code = result.matching ? kExitStable : kExitEmpty;
    }
  });

  // stable-set
  auto* stable = app.add_subcommand("stable-set", "Enumerate a stable set");
  stable->add_option("game", game_path, "Game file")->required();
  AddCommon(stable, c, true, true, true);
  stable->callback([&] {
    const Game game = ParseGame(ReadFile(game_path));
    const StableSetReport report = StableSet(game, AttitudeOf(c), ConceptOf(c),
                                             StrengthOf(c), LimitsFrom(c));
    Emit(c, StableSetToJson(game, report));
    exit_code = report.members.empty() ? kExitEmpty : kExitStable;
  });

  // inclusion-audit
  auto* audit = app.add_subcommand(
      "inclusion-audit", "Check optimistic within neutral within pessimistic stable sets");
  audit->add_option("game", game_path, "Game file")->required();
  AddCommon(audit, c, false, false, true);
  audit->callback([&] {
    const Game game = ParseGame(ReadFile(game_path));
    const InclusionAudit result = AuditInclusions(game, StrengthOf(c), LimitsFrom(c));
    Emit(c, AuditToJson(game, result));
    exit_code = result.holds() ? kExitStable : kExitUnstable;
  });

  // classify-edges
  auto* classify = app.add_subcommand("classify-edges", "Label every possible match");
  classify->add_option("game", game_path, "Game file")->required();
  AddCommon(classify, c, false, false, false);
  classify->callback([&] {
    const Game game = ParseGame(ReadFile(game_path));
    Emit(c, ClassificationToJson(game, ClassifyEdges(game)));
  });

  // reduce
  std::string source;
  std::string items;
  std::int64_t budget = 0;
  std::int64_t goal = 0;
  std::string variant = "nonempty";
  std::string epsilon = "1/2";
  std::string game_out;
  std::string matching_out;
  auto* reduce = app.add_subcommand("reduce", "Build a game from a knapsack instance");
  reduce->add_option("source", source)->required()->check(CLI::IsMember({"knapsack"}));
  reduce->add_option("--items", items, "size:value,size:value,...")->required();
  reduce->add_option("--budget", budget)->required();
  reduce->add_option("--goal", goal)->required();
  reduce->add_option("--variant", variant)
      ->check(CLI::IsMember({"nonempty", "membership", "pessimistic-membership"}));
  reduce->add_option("--epsilon", epsilon, "Slack for the membership variant");
  reduce->add_option("--game-out", game_out);
  reduce->add_option("--matching-out", matching_out);
  AddCommon(reduce, c, false, false, false);
  reduce->callback([&] {
    KnapsackInstance instance{ParseItems(items), budget, goal};
    std::optional<Game> game;
    std::optional<Matching> matching;
    if (variant == "nonempty") {
      NonemptinessReduction r = ReduceNonemptiness(instance);
      game = r.game;
      matching = r.witness;
    } else if (variant == "membership") {
      MembershipReduction r = ReduceMembership(instance, ParseFlagValue(epsilon));
      game = r.game;
      matching = r.distinguished;
    } else {
      MembershipReduction r = ReduceOneToOnePessimisticMembership(instance);
      game = r.game;
      matching = r.distinguished;
    }
    const bool solvable = KnapsackBruteForce(instance).has_value();
    if (!game_out.empty() || !matching_out.empty()) {
      if (!game_out.empty()) WriteFileAtomic(game_out, SerializeGame(*game));
      if (!matching_out.empty() && matching) {
        WriteFileAtomic(matching_out, Dump(MatchingToJson(*game, *matching)));
      }
      return;
    }
    Json doc;
    doc["variant"] = variant;
    doc["solvable"] = solvable;
    doc["game"] = GameToJson(*game);
    doc["matching"] = matching ? MatchingToJson(*game, *matching) : Json(nullptr);
    Emit(c, doc);
  });

  // random
  RandomGameOptions random_options;
  std::string mode = "many-to-many";
  auto* random = app.add_subcommand("random", "Draw a seeded random game");
  random->add_option("--seed", random_options.seed)->required();
  random->add_option("--men", random_options.men)->check(CLI::NonNegativeNumber);
  random->add_option("--women", random_options.women)->check(CLI::NonNegativeNumber);
  random->add_option("--mode", mode)->check(CLI::IsMember({"many-to-many", "one-to-one"}));
  random->add_option("--density", random_options.density)->check(CLI::Range(0.0, 1.0));
  random->add_option("--min", random_options.min_value);
  random->add_option("--max", random_options.max_value);
  AddCommon(random, c, false, false, false);
  random->callback([&] {
    random_options.mode = *ParseMode(mode);
    Emit(c, GameToJson(RandomGame(random_options)));
  });

  // example
  std::string example_name;
  std::string eps_flag, big_delta_flag, delta_flag, externality_flag;
  auto* example = app.add_subcommand("example", "Emit a built-in example game");
  example->add_option("name", example_name)
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2", "ex3", "ex4", "ex5"}));
  example->add_option("--epsilon", eps_flag);
  example->add_option("--big-delta", big_delta_flag);
  example->add_option("--delta", delta_flag);
  example->add_option("--externality", externality_flag);
  AddCommon(example, c, false, false, false);
  example->callback([&] {
    FixtureParams params;
    if (!eps_flag.empty()) params.epsilon = ParseFlagValue(eps_flag);
    if (!big_delta_flag.empty()) params.big_delta = ParseFlagValue(big_delta_flag);
    if (!delta_flag.empty()) params.delta = ParseFlagValue(delta_flag);
    if (!externality_flag.empty()) params.externality = ParseFlagValue(externality_flag);
    Emit(c, GameToJson(BuiltinExample(*ParseFixture(example_name), params)));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitStable : kExitUsage;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace
}  // namespace extmatch

int main(int argc, char** argv) { return extmatch::Run(argc, argv); }
