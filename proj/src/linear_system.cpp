// Copyright 2026 The Preplay Authors
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

#include "preplay/linear_system.hpp"

#include <stdexcept>
#include <utility>

namespace preplay {

std::optional<LinearSolution> solve_exact(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("right-hand side length mismatch");

  std::vector<std::size_t> pivot_col_of_row;
  std::vector<std::size_t> free_columns;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) {
      free_columns.push_back(c);
      continue;
    }
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(r, k));
      std::swap(b[pivot], b[r]);
    }

    // Normalize the pivot row; the row is sparse, so skip zero entries.
    const Rational inv = Rational(1) / a(r, c);
    std::vector<std::size_t> support;
    for (std::size_t k = c; k < cols; ++k) {
      if (a(r, k).is_zero()) continue;
      a(r, k) *= inv;
      support.push_back(k);
    }
    b[r] *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational factor = a(i, c);
      for (const std::size_t k : support) a(i, k) -= factor * a(r, k);
      b[i] -= factor * b[r];
    }
    pivot_col_of_row.push_back(c);
    ++r;
    if (r == rows) {
      for (std::size_t k = c + 1; k < cols; ++k) free_columns.push_back(k);
      break;
    }
  }

  // Remaining rows are all-zero on the left; any nonzero right side is a contradiction.
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }

  LinearSolution solution;
  solution.values.assign(cols, Rational());
  solution.rank = r;
  for (std::size_t i = 0; i < r; ++i) solution.values[pivot_col_of_row[i]] = b[i];
  solution.free_columns = std::move(free_columns);
  return solution;
}

}  // namespace preplay
