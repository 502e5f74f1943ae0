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

#include "extmatch/io.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "extmatch/errors.h"

namespace extmatch {
namespace {

const Json& Field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::string Text(const Json& value, const char* what) {
  if (!value.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

std::vector<std::string> Labels(const Json& list, const char* what) {
  if (!list.is_array()) throw ValidationError(std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const Json& item : list) out.push_back(Text(item, "agent label"));
  return out;
}

Rational ValueOf(const Json& value) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw ValidationError("malformed value literal");
}

int AgentNamed(const Game& game, const Json& value) {
  const std::string label = Text(value, "agent label");
  const auto agent = game.FindAgent(label);
  if (!agent) throw ValidationError("unknown agent \"" + label + "\"");
  return *agent;
}

Edge EdgeFromJson(const Game& game, const Json& pair) {
  if (!pair.is_array() || pair.size() != 2) {
    throw ValidationError("a match must be a [man, woman] pair");
  }
  const int m = AgentNamed(game, pair[0]);
  const int w = AgentNamed(game, pair[1]);
  if (!game.IsMan(m) || game.IsMan(w)) {
    throw ValidationError("match [" + game.label(m) + ", " + game.label(w) +
                          "] must list a man then a woman");
  }
  return game.EdgeBetween(m, w);
}

Matching EdgeSet(const Game& game, const Json& list, const char* what) {
  if (!list.is_array()) throw ValidationError(std::string(what) + " must be a list");
  Matching out;
  for (const Json& pair : list) {
    const Edge e = EdgeFromJson(game, pair);
    if (!out.insert(e)) {
      throw ValidationError("duplicate match [" + game.label(game.ManAgent(e.man)) +
                            ", " + game.label(game.WomanAgent(e.woman)) + "]");
    }
  }
  return out;
}

Json MatchingsToJson(const Game& game, const std::vector<Matching>& list) {
  Json out = Json::array();
  for (const Matching& m : list) out.push_back(EdgesToJson(game, m));
  return out;
}

}  // namespace

Game GameFromJson(const Json& doc) {
  const std::string mode_name = Text(Field(doc, "mode"), "mode");
  const auto mode = ParseMode(mode_name);
  if (!mode) throw ValidationError("unknown mode \"" + mode_name + "\"");
  std::vector<std::string> men = Labels(Field(doc, "men"), "men");
  std::vector<std::string> women = Labels(Field(doc, "women"), "women");

  // Resolve labels before the game exists; Game::Create rejects duplicates.
  std::map<std::string, int, std::less<>> index;
  for (std::size_t i = 0; i < men.size(); ++i) index.emplace(men[i], static_cast<int>(i));
  for (std::size_t i = 0; i < women.size(); ++i) {
    index.emplace(women[i], static_cast<int>(men.size() + i));
  }
  auto find = [&](const Json& value) {
    const std::string label = Text(value, "agent label");
    auto it = index.find(label);
    if (it == index.end()) throw ValidationError("unknown agent \"" + label + "\"");
    return it->second;
  };
  const int num_men = static_cast<int>(men.size());
  std::vector<ExternalityEntry> entries;
  const Json& list = doc.contains("externalities") ? doc.at("externalities") : Json::array();
  if (!list.is_array()) throw ValidationError("externalities must be a list");
  for (const Json& item : list) {
    const Json& match = Field(item, "match");
    if (!match.is_array() || match.size() != 2) {
      throw ValidationError("a match must be a [man, woman] pair");
    }
    const int m = find(match[0]);
    const int w = find(match[1]);
    if (m >= num_men || w < num_men) {
      throw ValidationError("match must list a man then a woman");
    }
    entries.push_back({Edge{m, w - num_men}, find(Field(item, "agent")),
                       ValueOf(Field(item, "value"))});
  }
  return Game::Create(*mode, std::move(men), std::move(women), entries);
}

Json GameToJson(const Game& game) {
  Json doc;
  doc["mode"] = std::string(ModeName(game.mode()));
  Json men = Json::array();
  Json women = Json::array();
  for (int m = 0; m < game.num_men(); ++m) men.push_back(game.label(game.ManAgent(m)));
  for (int w = 0; w < game.num_women(); ++w) women.push_back(game.label(game.WomanAgent(w)));
  doc["men"] = men;
  doc["women"] = women;
  Json list = Json::array();
  for (const auto& [key, value] : game.entries()) {
    Json entry;
    entry["match"] = EdgeToJson(game, game.EdgeAt(key.first));
    entry["agent"] = game.label(key.second);
    entry["value"] = ToString(value);
    list.push_back(entry);
  }
  doc["externalities"] = list;
  return doc;
}

Game ParseGame(std::string_view text) { return GameFromJson(ParseJson(text)); }

std::string SerializeGame(const Game& game) { return Dump(GameToJson(game)); }

Matching MatchingFromJson(const Game& game, const Json& doc) {
  return EdgeSet(game, Field(doc, "matches"), "matches");
}

Json MatchingToJson(const Game& game, const Matching& matching) {
  Json doc;
  doc["matches"] = EdgesToJson(game, matching);
  return doc;
}

Matching ParseMatching(const Game& game, std::string_view text) {
  return MatchingFromJson(game, ParseJson(text));
}

Json EdgeToJson(const Game& game, Edge edge) {
  return Json::array({game.label(game.ManAgent(edge.man)),
                      game.label(game.WomanAgent(edge.woman))});
}

Json EdgesToJson(const Game& game, const Matching& edges) {
  Json out = Json::array();
  for (Edge e : edges) out.push_back(EdgeToJson(game, e));
  return out;
}

Deviation DeviationFromJson(const Game& game, const Json& doc) {
  Deviation d;
  const Json& coalition = Field(doc, "coalition");
  if (!coalition.is_array()) throw ValidationError("coalition must be a list");
  for (const Json& label : coalition) d.coalition.push_back(AgentNamed(game, label));
  std::sort(d.coalition.begin(), d.coalition.end());
  d.internal = EdgeSet(game, Field(doc, "internal"), "internal");
  d.severed = EdgeSet(game, Field(doc, "severed"), "severed");
  return d;
}

Json VerdictToJson(const Game& game, const StabilityVerdict& verdict,
                   Attitude attitude, Concept concept_kind, Strength strength) {
  Json doc;
  doc["stable"] = verdict.stable;
  doc["attitude"] = std::string(AttitudeName(attitude));
  doc["concept"] = std::string(ConceptName(concept_kind));
  doc["strength"] = std::string(StrengthName(strength));
  if (verdict.deviation) {
    Json coalition = Json::array();
    for (int z : verdict.deviation->coalition) coalition.push_back(game.label(z));
    doc["coalition"] = coalition;
    doc["internal"] = EdgesToJson(game, verdict.deviation->internal);
    doc["severed"] = EdgesToJson(game, verdict.deviation->severed);
    Json estimates = Json::array();
    for (const MemberEstimate& e : verdict.estimates) {
      Json row;
      row["agent"] = game.label(e.agent);
      row["before"] = ToString(e.before);
      row["after"] = ToString(e.after);
      estimates.push_back(row);
    }
    doc["estimates"] = estimates;
  }
  return doc;
}

Json StableSetToJson(const Game& game, const StableSetReport& report) {
  Json doc;
  doc["attitude"] = std::string(AttitudeName(report.attitude));
  doc["concept"] = std::string(ConceptName(report.concept_kind));
  doc["strength"] = std::string(StrengthName(report.strength));
  doc["searched"] = report.searched;
  doc["count"] = report.members.size();
  doc["members"] = MatchingsToJson(game, report.members);
  return doc;
}

Json AuditToJson(const Game& game, const InclusionAudit& audit) {
  Json doc;
  doc["strength"] = std::string(StrengthName(audit.strength));
  doc["searched"] = audit.searched;
  doc["holds"] = audit.holds();
  doc["optimistic"] = MatchingsToJson(game, audit.optimistic);
  doc["neutral"] = MatchingsToJson(game, audit.neutral);
  doc["pessimistic"] = MatchingsToJson(game, audit.pessimistic);
  doc["violations"] = audit.violations;
  return doc;
}

Json ClassificationToJson(const Game& game, const EdgeClassification& classes) {
  Json doc;
  Json edges = Json::array();
  for (std::size_t i = 0; i < classes.classes.size(); ++i) {
    Json row;
    row["match"] = EdgeToJson(game, game.EdgeAt(static_cast<int>(i)));
    row["class"] = std::string(EdgeClassName(classes.classes[i]));
    edges.push_back(row);
  }
  doc["edges"] = edges;
  Json counts;
  for (EdgeClass c : {EdgeClass::kR, EdgeClass::kF, EdgeClass::kFN,
                      EdgeClass::kFP, EdgeClass::kC}) {
    counts[std::string(EdgeClassName(c))] = classes.EdgesOf(c).size();
  }
  doc["counts"] = counts;
  return doc;
}

Json RestrictedSolutionToJson(const Game& game,
                              const RestrictedPessimisticSolution& solution) {
  Json doc;
  doc["matches"] = EdgesToJson(game, solution.matching);
  Json table = Json::array();
  for (int m = 0; m < game.num_men(); ++m) {
    for (int w = 0; w < game.num_women(); ++w) {
      Json row;
      row["agent"] = game.label(game.ManAgent(m));
      row["partner"] = game.label(game.WomanAgent(w));
      row["value"] = ToString(solution.estimates.ManScore(m, w));
      table.push_back(row);
    }
  }
  for (int w = 0; w < game.num_women(); ++w) {
    for (int m = 0; m < game.num_men(); ++m) {
      Json row;
      row["agent"] = game.label(game.WomanAgent(w));
      row["partner"] = game.label(game.ManAgent(m));
      row["value"] = ToString(solution.estimates.WomanScore(w, m));
      table.push_back(row);
    }
  }
  doc["estimates"] = table;
  return doc;
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileAtomic(const std::string& path, const std::string& content) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + temp);
    out << content;
    if (!out.flush()) throw Error("cannot write " + temp);
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::remove(temp.c_str());
    throw Error("cannot replace " + path + ": " + ec.message());
  }
}

}  // namespace extmatch
