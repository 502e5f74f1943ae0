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

#include "extmatch/assignment.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "extmatch/errors.h"

namespace extmatch {
namespace {

constexpr Ticks kInf = std::numeric_limits<Ticks>::max() / 4;

// Minimum-cost assignment of every row to a distinct column, rows <= cols.
// Shortest augmenting paths with potentials; cost is row-major.
Ticks MinCostRowsIntoCols(const std::vector<Ticks>& cost, int rows, int cols) {
  if (rows == 0) return 0;
  const int n = rows;
  const int m = cols;
  std::vector<Ticks> u(n + 1, 0), v(m + 1, 0), minv(m + 1);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  std::vector<char> used(m + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      Ticks delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const Ticks cur =
            cost[static_cast<std::size_t>((i0 - 1) * m + (j - 1))] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Ticks total = 0;
  for (int j = 1; j <= m; ++j) {
    if (p[j] != 0) {
      total += cost[static_cast<std::size_t>((p[j] - 1) * m + (j - 1))];
    }
  }
  return total;
}

std::vector<Ticks> Transpose(std::span<const Ticks> weights, int rows,
                             int cols) {
  std::vector<Ticks> out(weights.size());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      out[static_cast<std::size_t>(c * rows + r)] =
          weights[static_cast<std::size_t>(r * cols + c)];
    }
  }
  return out;
}

// Optimum over a subset of rows and columns of the full table.
struct SubProblem {
  std::span<const Ticks> weights;
  int cols;
  bool maximize;
  bool allow_unmatched;

  Ticks Solve(const std::vector<int>& rows, const std::vector<int>& cs) const {
    std::vector<Ticks> block;
    block.reserve(rows.size() * cs.size());
    for (int r : rows) {
      for (int c : cs) block.push_back(weights[static_cast<std::size_t>(r * cols + c)]);
    }
    const int nr = static_cast<int>(rows.size());
    const int nc = static_cast<int>(cs.size());
    return maximize ? kernel::MaxWeightValue(block, nr, nc, allow_unmatched)
                    : kernel::MinWeightMaxCardinalityValue(block, nr, nc);
  }
};

// Picks, row by row, the earliest column that still admits an optimal
// completion. Requires rows <= cols unless unmatched rows are allowed.
std::vector<Edge> CanonicalEdges(const SubProblem& problem, int rows,
                                 int cols) {
  std::vector<int> open_cols(static_cast<std::size_t>(cols));
  std::iota(open_cols.begin(), open_cols.end(), 0);
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    std::vector<int> rest_rows;
    for (int k = r + 1; k < rows; ++k) rest_rows.push_back(k);
    std::vector<int> here = rest_rows;
    here.insert(here.begin(), r);
    const Ticks target = problem.Solve(here, open_cols);
    bool placed = false;
    for (std::size_t k = 0; k < open_cols.size(); ++k) {
      const int c = open_cols[k];
      const Ticks w = problem.weights[static_cast<std::size_t>(r * problem.cols + c)];
      if (problem.allow_unmatched && w <= 0) continue;
      std::vector<int> rest_cols = open_cols;
      rest_cols.erase(rest_cols.begin() + static_cast<std::ptrdiff_t>(k));
      if (w + problem.Solve(rest_rows, rest_cols) == target) {
        edges.push_back(Edge{r, c});
        open_cols = std::move(rest_cols);
        placed = true;
        break;
      }
    }
    if (!placed && !problem.allow_unmatched) {
      throw Error("assignment reconstruction failed");
    }
  }
  return edges;
}

TickScale ScaleOf(const WeightTable& table) {
  std::vector<Rational> values;
  for (int r = 0; r < table.rows(); ++r) {
    for (int c = 0; c < table.cols(); ++c) values.push_back(table.at(r, c));
  }
  return TickScale(values);
}

std::vector<Ticks> TicksOf(const WeightTable& table, const TickScale& scale) {
  std::vector<Ticks> out;
  for (int r = 0; r < table.rows(); ++r) {
    for (int c = 0; c < table.cols(); ++c) {
      out.push_back(scale.ToTicks(table.at(r, c)));
    }
  }
  return out;
}

Assignment Reconstruct(const WeightTable& table, bool maximize,
                       bool allow_unmatched) {
  const TickScale scale = ScaleOf(table);
  std::vector<Ticks> weights = TicksOf(table, scale);
  int rows = table.rows();
  int cols = table.cols();
  const bool transposed = !allow_unmatched && rows > cols;
  if (transposed) {
    weights = Transpose(weights, rows, cols);
    std::swap(rows, cols);
  }
  const SubProblem problem{weights, cols, maximize, allow_unmatched};
  Assignment result;
  Ticks total = 0;
  for (Edge e : CanonicalEdges(problem, rows, cols)) {
    total += weights[static_cast<std::size_t>(e.man * cols + e.woman)];
    result.matching.insert(transposed ? Edge{e.woman, e.man} : e);
  }
  result.value = scale.FromTicks(total);
  return result;
}

}  // namespace

WeightTable::WeightTable(int rows, int cols)
    : rows_(rows), cols_(cols),
      weights_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative table size");
}

const Rational& WeightTable::at(int row, int col) const {
  return weights_.at(static_cast<std::size_t>(row * cols_ + col));
}

void WeightTable::set(int row, int col, Rational value) {
  weights_.at(static_cast<std::size_t>(row * cols_ + col)) = std::move(value);
}

Assignment MaxWeightAssignment(const WeightTable& table, bool allow_unmatched) {
  return Reconstruct(table, /*maximize=*/true, allow_unmatched);
}

Assignment MinWeightMaxCardinalityAssignment(const WeightTable& table) {
  return Reconstruct(table, /*maximize=*/false, /*allow_unmatched=*/false);
}

namespace kernel {

Ticks MaxWeightValue(std::span<const Ticks> weights, int rows, int cols,
                     bool allow_unmatched) {
  if (rows == 0 || cols == 0) return 0;
  std::vector<Ticks> cost(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cost[i] = allow_unmatched ? -std::max<Ticks>(weights[i], 0) : -weights[i];
  }
  if (rows > cols) {
    cost = Transpose(cost, rows, cols);
    std::swap(rows, cols);
  }
  return -MinCostRowsIntoCols(cost, rows, cols);
}

Ticks MinWeightMaxCardinalityValue(std::span<const Ticks> weights, int rows,
                                   int cols) {
  if (rows == 0 || cols == 0) return 0;
  std::vector<Ticks> cost(weights.begin(), weights.end());
  if (rows > cols) {
    cost = Transpose(cost, rows, cols);
    std::swap(rows, cols);
  }
  return MinCostRowsIntoCols(cost, rows, cols);
}

}  // namespace kernel
}  // namespace extmatch
