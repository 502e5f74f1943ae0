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

#ifndef EXTMATCH_IO_H_
#define EXTMATCH_IO_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "extmatch/deviation.h"
#include "extmatch/enumeration.h"
#include "extmatch/game.h"
#include "extmatch/solvers.h"
#include "extmatch/stability.h"

namespace extmatch {

using Json = nlohmann::ordered_json;

// Game documents: {"mode", "men", "women", "externalities": [{"match":
// [m, w], "agent": z, "value": "p/q"}]}. Parsing throws ValidationError.
Game GameFromJson(const Json& doc);
Json GameToJson(const Game& game);
Game ParseGame(std::string_view text);
std::string SerializeGame(const Game& game);

// Matching documents: {"matches": [[m, w], ...]}.
Matching MatchingFromJson(const Game& game, const Json& doc);
Json MatchingToJson(const Game& game, const Matching& matching);
Matching ParseMatching(const Game& game, std::string_view text);

Json EdgeToJson(const Game& game, Edge edge);
Json EdgesToJson(const Game& game, const Matching& edges);

// Reads the coalition, internal and severed fields of a certificate.
Deviation DeviationFromJson(const Game& game, const Json& doc);

Json VerdictToJson(const Game& game, const StabilityVerdict& verdict,
                   Attitude attitude, Concept concept_kind, Strength strength);
Json StableSetToJson(const Game& game, const StableSetReport& report);
Json AuditToJson(const Game& game, const InclusionAudit& audit);
Json ClassificationToJson(const Game& game, const EdgeClassification& classes);
Json RestrictedSolutionToJson(const Game& game,
                              const RestrictedPessimisticSolution& solution);

Json ParseJson(std::string_view text);
// Two-space indentation plus a trailing newline.
std::string Dump(const Json& doc);

std::string ReadFile(const std::string& path);
// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::string& path, const std::string& content);

}  // namespace extmatch

#endif  // EXTMATCH_IO_H_
