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

#include "extmatch/fixtures.h"

#include <string>
#include <vector>

#include "extmatch/errors.h"

namespace extmatch {
namespace {

Rational Or(const std::optional<Rational>& value, int fallback) {
  return value ? *value : Rational(fallback);
}

// Builds entries by label so each example reads like its definition.
class Builder {
 public:
  Builder(Mode mode, std::vector<std::string> men, std::vector<std::string> women)
      : mode_(mode), men_(std::move(men)), women_(std::move(women)) {}

  void Set(const std::string& m, const std::string& w, const std::string& z,
           const Rational& value) {
    entries_.push_back({Edge{IndexOf(men_, m), IndexOf(women_, w)},
                        AgentOf(z), value});
  }

  Game Build() const { return Game::Create(mode_, men_, women_, entries_); }

  const std::vector<std::string>& men() const { return men_; }
  const std::vector<std::string>& women() const { return women_; }

 private:
  static int IndexOf(const std::vector<std::string>& side, const std::string& label) {
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (side[i] == label) return static_cast<int>(i);
    }
    throw Error("unknown fixture label " + label);
  }

  int AgentOf(const std::string& label) const {
    for (std::size_t i = 0; i < men_.size(); ++i) {
      if (men_[i] == label) return static_cast<int>(i);
    }
    return static_cast<int>(men_.size()) + IndexOf(women_, label);
  }

  Mode mode_;
  std::vector<std::string> men_;
  std::vector<std::string> women_;
  std::vector<ExternalityEntry> entries_;
};

// Every edge gets `own` for both endpoints and `other` for everyone else.
Game Uniform(Mode mode, const Rational& own, const Rational& other) {
  Builder b(mode, {"m1", "m2"}, {"w1", "w2"});
  std::vector<std::string> all = b.men();
  all.insert(all.end(), b.women().begin(), b.women().end());
  for (const std::string& m : b.men()) {
    for (const std::string& w : b.women()) {
      for (const std::string& z : all) {
        b.Set(m, w, z, (z == m || z == w) ? own : other);
      }
    }
  }
  return b.Build();
}

Game Example1(const FixtureParams& params) {
  const Rational eps = Or(params.epsilon, 1);
  const Rational big = Or(params.big_delta, 2);
  if (!(big > eps && eps > 0)) {
    throw PreconditionError("ex1 requires big_delta > epsilon > 0");
  }
  Builder b(Mode::kManyToMany, {"m"}, {"w1", "w2"});
  b.Set("m", "w1", "m", 0);
  b.Set("m", "w2", "m", 0);
  b.Set("m", "w1", "w1", eps);
  b.Set("m", "w2", "w2", eps);
  b.Set("m", "w1", "w2", -big);
  b.Set("m", "w2", "w1", -big);
  return b.Build();
}

Game Example2(const FixtureParams& params) {
  const Rational eps = Or(params.epsilon, 1);
  const Rational delta = Or(params.delta, 100);
  if (!(eps > 0 && delta > 0 && eps != delta)) {
    throw PreconditionError("ex2 requires positive epsilon != delta");
  }
  return Uniform(Mode::kManyToMany, -eps, delta);
}

Game Example3() {
  Builder b(Mode::kManyToMany, {"x1", "x2", "m1", "m2"}, {"y1", "y2", "w1", "w2"});
  b.Set("x1", "y1", "m1", -3);
  b.Set("x2", "y2", "m1", -5);
  b.Set("x1", "y1", "m2", 2);
  b.Set("x2", "y2", "m2", 10);
  b.Set("m1", "w1", "m1", -4);
  b.Set("m2", "w2", "m2", -7);
  for (const char* i : {"1", "2"}) {
    for (const char* j : {"1", "2"}) {
      b.Set(std::string("m") + i, std::string("y") + j, std::string("y") + j, -1);
      b.Set(std::string("x") + i, std::string("w") + j, std::string("x") + i, -1);
    }
  }
  return b.Build();
}

Game Example4(const FixtureParams& params) {
  const Rational eps = Or(params.epsilon, 1);
  const Rational ext = Or(params.externality, 100);
  if (!(ext > eps && eps > 0)) {
    throw PreconditionError("ex4 requires externality > epsilon > 0");
  }
  return Uniform(Mode::kOneToOne, -eps, ext);
}

}  // namespace

std::optional<Fixture> ParseFixture(std::string_view name) {
  if (name == "ex1") return Fixture::kEx1;
  if (name == "ex2") return Fixture::kEx2;
  if (name == "ex3") return Fixture::kEx3;
  if (name == "ex4") return Fixture::kEx4;
  if (name == "ex5") return Fixture::kEx5;
  return std::nullopt;
}

std::string_view FixtureName(Fixture fixture) {
  switch (fixture) {
    case Fixture::kEx1: return "ex1";
    case Fixture::kEx2: return "ex2";
    case Fixture::kEx3: return "ex3";
    case Fixture::kEx4: return "ex4";
    case Fixture::kEx5: return "ex5";
  }
  return "";
}

Game BuiltinExample(Fixture fixture, const FixtureParams& params) {
  switch (fixture) {
    case Fixture::kEx1: return Example1(params);
    case Fixture::kEx2: return Example2(params);
    case Fixture::kEx3: return Example3();
    case Fixture::kEx4: return Example4(params);
    case Fixture::kEx5: return Uniform(Mode::kOneToOne, 1, -1);
  }
  throw PreconditionError("unknown fixture");
}

}  // namespace extmatch
