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

#include "extmatch/random_game.h"

#include <random>
#include <string>
#include <vector>

#include "extmatch/errors.h"

namespace extmatch {
namespace {

// Unbiased draw from [0, span) by rejection; `span` > 0.
std::uint64_t Below(std::mt19937_64& rng, std::uint64_t span) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % span;
}

bool Coin(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

}  // namespace

Game RandomGame(const RandomGameOptions& options) {
  if (options.men < 0 || options.women < 0) {
    throw PreconditionError("side sizes must be non-negative");
  }
  if (!(options.density >= 0.0 && options.density <= 1.0)) {
    throw PreconditionError("density must lie in [0, 1]");
  }
  if (options.min_value > options.max_value) {
    throw PreconditionError("empty value range");
  }
  std::vector<std::string> men;
  std::vector<std::string> women;
  for (int i = 1; i <= options.men; ++i) men.push_back("m" + std::to_string(i));
  for (int i = 1; i <= options.women; ++i) women.push_back("w" + std::to_string(i));

  std::mt19937_64 rng(options.seed);
  const std::uint64_t span = static_cast<std::uint64_t>(options.max_value) -
                             static_cast<std::uint64_t>(options.min_value) + 1;
  std::vector<ExternalityEntry> entries;
  const int agents = options.men + options.women;
  for (int m = 0; m < options.men; ++m) {
    for (int w = 0; w < options.women; ++w) {
      for (int z = 0; z < agents; ++z) {
        if (!Coin(rng, options.density)) continue;
        const std::uint64_t offset = span == 0 ? rng() : Below(rng, span);
        const auto value = static_cast<std::int64_t>(
            static_cast<std::uint64_t>(options.min_value) + offset);
        entries.push_back({Edge{m, w}, z, Rational(value)});
      }
    }
  }
  return Game::Create(options.mode, men, women, entries);
}

}  // namespace extmatch
