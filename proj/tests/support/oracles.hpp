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

// Reference completions used to cross-check the library. Both return the
// difference values (completed minus source), laid out profile-major with
// one entry per player.

#ifndef PREPLAY_TESTS_SUPPORT_ORACLES_HPP
#define PREPLAY_TESTS_SUPPORT_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "preplay/complete.hpp"
#include "preplay/game.hpp"
#include "preplay/rational.hpp"

namespace preplay::testing {

inline std::vector<Rational> seed_differences(const Game& source, const Seed& seed,
                                              std::vector<bool>* known = nullptr) {
  const GameShape& shape = source.shape();
  const std::size_t n = shape.player_count();
  std::vector<Rational> diff(shape.profile_count() * n);
  if (known) known->assign(shape.profile_count(), false);
  for (const auto& [p, values] : seed.assignments) {
    const std::size_t flat = shape.flat_index(p);
    for (std::size_t j = 0; j < n; ++j) diff[flat * n + j] = values[j] - source.payoff(p, j);
    if (known) (*known)[flat] = true;
  }
  return diff;
}

// Sweeps fronts of increasing total distance from the base, stepping back
// along the last two differing axes.
inline std::vector<Rational> diagonal_front_completion(const Game& source, const Seed& seed) {
  const GameShape& shape = source.shape();
  const std::size_t n = shape.player_count();
  std::vector<bool> known;
  std::vector<Rational> diff = seed_differences(source, seed, &known);

  auto back = [&](Profile p, std::size_t axis) {
    p[axis] += p[axis] < seed.base[axis] ? 1 : -1;
    return p;
  };
  std::vector<std::pair<std::size_t, std::size_t>> by_distance;
  for (std::size_t flat = 0; flat < shape.profile_count(); ++flat) {
    const Profile p = shape.profile_at(flat);
    std::size_t l1 = 0;
    for (std::size_t k = 0; k < n; ++k) l1 += p[k] > seed.base[k] ? p[k] - seed.base[k] : seed.base[k] - p[k];
    by_distance.emplace_back(l1, flat);
  }
  std::stable_sort(by_distance.begin(), by_distance.end());

  for (const auto& [l1, flat] : by_distance) {
    if (known[flat]) continue;
    const Profile p = shape.profile_at(flat);
    std::vector<std::size_t> differing;
    for (std::size_t k = 0; k < n; ++k) {
      if (p[k] != seed.base[k]) differing.push_back(k);
    }
    const std::size_t a = differing[differing.size() - 2];
    const std::size_t b = differing.back();
    const std::size_t fa = shape.flat_index(back(p, a));
    const std::size_t fb = shape.flat_index(back(p, b));
    const std::size_t fab = shape.flat_index(back(back(p, a), b));
    if (!known[fa] || !known[fb] || !known[fab]) return {};  // order bug
    for (std::size_t j = 0; j < n; ++j) {
      diff[flat * n + j] = diff[fa * n + j] + diff[fb * n + j] - diff[fab * n + j];
    }
    known[flat] = true;
  }
  return diff;
}

// Separable form: the difference at p is the sum of the star differences
// along each coordinate, minus (N - 1) times the difference at the base.
inline std::vector<Rational> closed_form_completion(const Game& source, const Seed& seed) {
  const GameShape& shape = source.shape();
  const std::size_t n = shape.player_count();
  const std::vector<Rational> star = seed_differences(source, seed);
  const std::size_t base_flat = shape.flat_index(seed.base);
  std::vector<Rational> diff(star.size());
  for (std::size_t flat = 0; flat < shape.profile_count(); ++flat) {
    const Profile p = shape.profile_at(flat);
    for (std::size_t j = 0; j < n; ++j) {
      Rational value = -Rational(static_cast<std::int64_t>(n - 1)) * star[base_flat * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        Profile arm = seed.base;
        arm[k] = p[k];
        value += star[shape.flat_index(arm) * n + j];
      }
      diff[flat * n + j] = value;
    }
  }
  return diff;
}

}  // namespace preplay::testing

#endif  // PREPLAY_TESTS_SUPPORT_ORACLES_HPP
