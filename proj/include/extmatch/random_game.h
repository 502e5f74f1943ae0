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

#ifndef EXTMATCH_RANDOM_GAME_H_
#define EXTMATCH_RANDOM_GAME_H_

#include <cstdint>

#include "extmatch/game.h"

namespace extmatch {

struct RandomGameOptions {
  std::uint64_t seed = 0;
  int men = 2;
  int women = 2;
  Mode mode = Mode::kManyToMany;
  double density = 1.0;  // probability that an (edge, agent) entry is declared
  std::int64_t min_value = -3;
  std::int64_t max_value = 3;
};

// Agents are m1.., w1..; entries are drawn edge by edge, agent by agent,
// from a 64-bit Mersenne Twister with portable integer and coin mappings,
// so a seed yields the same game on every platform.
Game RandomGame(const RandomGameOptions& options);

}  // namespace extmatch

#endif  // EXTMATCH_RANDOM_GAME_H_
