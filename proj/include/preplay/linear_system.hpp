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

#ifndef PREPLAY_LINEAR_SYSTEM_HPP
#define PREPLAY_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "preplay/rational.hpp"

namespace preplay {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct LinearSolution {
  std::vector<Rational> values;
  /// Columns left without a pivot; their values are pinned to zero.
  std::vector<std::size_t> free_columns;
  std::size_t rank = 0;
};

/// Solves A x = b exactly by Gauss-Jordan elimination. Pivots are taken in
/// column order, so the free variables are the rightmost dependent columns.
/// Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_exact(RationalMatrix a, std::vector<Rational> b);

}  // namespace preplay

#endif  // PREPLAY_LINEAR_SYSTEM_HPP
