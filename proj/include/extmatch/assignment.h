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

#ifndef EXTMATCH_ASSIGNMENT_H_
#define EXTMATCH_ASSIGNMENT_H_

#include <span>
#include <vector>

#include "extmatch/game.h"
#include "extmatch/rational.h"

namespace extmatch {

// Dense rows x cols table of rational weights, zero by default. Rows play the
// M side and columns the W side.
class WeightTable {
 public:
  WeightTable(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int row, int col) const;
  void set(int row, int col, Rational value);

 private:
  int rows_;
  int cols_;
  std::vector<Rational> weights_;
};

struct Assignment {
  Matching matching;  // Edge{row, col}
  Rational value;
};

// One-to-one matching of maximum total weight. With `allow_unmatched`, agents
// may stay single and non-positive edges are never used; otherwise every
// agent of the smaller side is matched. Among optimal matchings, rows are
// fixed in declaration order, each taking the earliest column that still
// admits an optimum.
Assignment MaxWeightAssignment(const WeightTable& table, bool allow_unmatched);

// Among matchings of cardinality min(rows, cols), one of minimum total
// weight. Tie-break as above, applied to the smaller side.
Assignment MinWeightMaxCardinalityAssignment(const WeightTable& table);

// Cardinal scores for deferred acceptance: higher is preferred.
class PreferenceTable {
 public:
  PreferenceTable(int men, int women);

  int men() const { return men_; }
  int women() const { return women_; }
  const Rational& ManScore(int man, int woman) const;
  const Rational& WomanScore(int woman, int man) const;
  void SetManScore(int man, int woman, Rational score);
  void SetWomanScore(int woman, int man, Rational score);

 private:
  int men_;
  int women_;
  std::vector<Rational> man_scores_;    // man * women + woman
  std::vector<Rational> woman_scores_;  // woman * men + man
};

// Men-proposing deferred acceptance over complete lists. Ties in scores are
// broken by declaration order of the opposite side. Every agent of the
// smaller side ends up matched.
Matching GaleShapley(const PreferenceTable& prefs);

namespace kernel {

// Value-only solvers over a row-major weight block. They share the
// semantics of the public functions above.
Ticks MaxWeightValue(std::span<const Ticks> weights, int rows, int cols,
                     bool allow_unmatched);
Ticks MinWeightMaxCardinalityValue(std::span<const Ticks> weights, int rows,
                                   int cols);

}  // namespace kernel
}  // namespace extmatch

#endif  // EXTMATCH_ASSIGNMENT_H_
