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

#ifndef EXTMATCH_SRC_BLOCKING_SEARCH_H_
#define EXTMATCH_SRC_BLOCKING_SEARCH_H_

#include <optional>
#include <vector>

#include "extmatch/deviation.h"
#include "extmatch/game.h"

namespace extmatch::internal {

inline constexpr int kMaxKernelAgents = 32;
inline constexpr int kMaxKernelEdges = 64;

// How the agents outside the coalition rearrange themselves, as valued by z,
// in a one-to-one game. `inside` flags coalition members.
Ticks OneToOneReaction(const Game& game, const Matching& current,
                       const std::vector<char>& inside, int z,
                       Attitude attitude);

struct BlockingCertificate {
  Deviation deviation;
  std::vector<Rational> before;  // per coalition member
  std::vector<Rational> after;
};

// First blocking deviation in the canonical order of ForEachDeviation.
// Requires at most kMaxKernelAgents agents and kMaxKernelEdges edges.
std::optional<BlockingCertificate> FindBlockingDeviation(
    const Game& game, const Matching& current, Attitude attitude,
    Strength strength, bool corewise, int max_coalition);

}  // namespace extmatch::internal

#endif  // EXTMATCH_SRC_BLOCKING_SEARCH_H_
