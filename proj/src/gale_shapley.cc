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
#include <deque>
#include <vector>

#include "extmatch/assignment.h"
#include "extmatch/errors.h"

namespace extmatch {

PreferenceTable::PreferenceTable(int men, int women)
    : men_(men), women_(women),
      man_scores_(static_cast<std::size_t>(men) * static_cast<std::size_t>(women)),
      woman_scores_(static_cast<std::size_t>(men) * static_cast<std::size_t>(women)) {
  if (men < 0 || women < 0) throw PreconditionError("negative table size");
}

const Rational& PreferenceTable::ManScore(int man, int woman) const {
  return man_scores_.at(static_cast<std::size_t>(man * women_ + woman));
}

const Rational& PreferenceTable::WomanScore(int woman, int man) const {
  return woman_scores_.at(static_cast<std::size_t>(woman * men_ + man));
}

void PreferenceTable::SetManScore(int man, int woman, Rational score) {
  man_scores_.at(static_cast<std::size_t>(man * women_ + woman)) = std::move(score);
}

void PreferenceTable::SetWomanScore(int woman, int man, Rational score) {
  woman_scores_.at(static_cast<std::size_t>(woman * men_ + man)) = std::move(score);
}

Matching GaleShapley(const PreferenceTable& prefs) {
  const int men = prefs.men();
  const int women = prefs.women();
  // Proposal order: score descending, then declaration order.
  std::vector<std::vector<int>> order(static_cast<std::size_t>(men));
  for (int m = 0; m < men; ++m) {
    auto& list = order[static_cast<std::size_t>(m)];
    for (int w = 0; w < women; ++w) list.push_back(w);
    std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
      return prefs.ManScore(m, a) > prefs.ManScore(m, b);
    });
  }
  auto woman_prefers = [&](int w, int a, int b) {
    const Rational& sa = prefs.WomanScore(w, a);
    const Rational& sb = prefs.WomanScore(w, b);
    return sa != sb ? sa > sb : a < b;
  };

  std::vector<int> next(static_cast<std::size_t>(men), 0);
  std::vector<int> holder(static_cast<std::size_t>(women), -1);
  std::deque<int> free_men;
  for (int m = 0; m < men; ++m) free_men.push_back(m);
  while (!free_men.empty()) {
    const int m = free_men.front();
    free_men.pop_front();
    auto& cursor = next[static_cast<std::size_t>(m)];
    if (cursor >= women) continue;
    const int w = order[static_cast<std::size_t>(m)][static_cast<std::size_t>(cursor++)];
    int& current = holder[static_cast<std::size_t>(w)];
    if (current < 0) {
      current = m;
    } else if (woman_prefers(w, m, current)) {
      free_men.push_front(current);
      current = m;
    } else {
      free_men.push_front(m);
    }
  }
  Matching matching;
  for (int w = 0; w < women; ++w) {
    if (holder[static_cast<std::size_t>(w)] >= 0) {
      matching.insert(Edge{holder[static_cast<std::size_t>(w)], w});
    }
  }
  return matching;
}

}  // namespace extmatch
