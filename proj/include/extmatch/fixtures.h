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

#ifndef EXTMATCH_FIXTURES_H_
#define EXTMATCH_FIXTURES_H_

#include <optional>
#include <string_view>

#include "extmatch/game.h"
#include "extmatch/rational.h"

namespace extmatch {

enum class Fixture { kEx1, kEx2, kEx3, kEx4, kEx5 };

std::optional<Fixture> ParseFixture(std::string_view name);
std::string_view FixtureName(Fixture fixture);

// Unset parameters take the example's default: ex1 epsilon=1, big_delta=2;
// ex2 epsilon=1, delta=100; ex4 epsilon=1, externality=100.
struct FixtureParams {
  std::optional<Rational> epsilon;
  std::optional<Rational> big_delta;
  std::optional<Rational> delta;
  std::optional<Rational> externality;
};

// Throws PreconditionError when the parameters leave the example's regime
// (ex1 needs big_delta > epsilon > 0, ex2 positive epsilon != delta,
// ex4 externality > epsilon > 0).
Game BuiltinExample(Fixture fixture, const FixtureParams& params = {});

}  // namespace extmatch

#endif  // EXTMATCH_FIXTURES_H_
