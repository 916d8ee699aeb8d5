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

#include "preplay/complete.hpp"

#include <algorithm>
#include <stdexcept>

#include "preplay/characterize.hpp"
#include "preplay/error.hpp"

namespace preplay {

namespace {

std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

Profile toward(Profile profile, std::size_t axis, const Profile& base) {
  if (profile[axis] > base[axis]) {
    --profile[axis];
  } else {
    ++profile[axis];
  }
  return profile;
}

void require_base(const GameShape& shape, const Profile& base) {
  if (!shape.contains(base)) {
    throw Error(ErrorKind::kInvalidProfile,
                "base " + format_profile(base) + " is not a profile of the game");
  }
}

}  // namespace

bool on_star(const Profile& profile, const Profile& base) {
  std::size_t differing = 0;
  for (std::size_t k = 0; k < profile.size(); ++k) differing += profile[k] != base[k] ? 1 : 0;
  return differing <= 1;
}

std::vector<Profile> star_profiles(const GameShape& shape, const Profile& base) {
  require_base(shape, base);
  std::vector<Profile> star{base};
  for (std::size_t k = 0; k < shape.player_count(); ++k) {
    for (std::size_t s = 0; s < shape.strategy_count(k); ++s) {
      if (s == base[k]) continue;
      Profile p = base;
      p[k] = s;
      star.push_back(std::move(p));
    }
  }
  return star;
}

Seed seed_from_game(const Game& game, const Profile& base) {
  Seed seed{base, {}};
  for (const auto& p : star_profiles(game.shape(), base)) {
    const auto values = game.payoffs(p);
    seed.assignments.emplace(p, std::vector<Rational>(values.begin(), values.end()));
  }
  return seed;
}

Seed seed_from_player_values(const Game& source, const Profile& base, std::size_t player,
                             const std::map<Profile, Rational>& values) {
  if (source.player_count() != 2) {
    throw Error(ErrorKind::kInvalidShape, "single-player seeds need a two-player game");
  }
  if (player > 1) throw Error(ErrorKind::kIndexOutOfRange, "no player " + std::to_string(player + 1));
  require_base(source.shape(), base);
  Seed seed{base, {}};
  for (const auto& [profile, value] : values) {
    if (!source.shape().contains(profile)) {
      throw Error(ErrorKind::kOffStarSeed, format_profile(profile) + " is not a profile of the game");
    }
    std::vector<Rational> vector(2);
    vector[player] = value;
    vector[1 - player] = source.payoff_sum(profile) - value;
    seed.assignments.emplace(profile, std::move(vector));
  }
  return seed;
}

void validate_seed(const Game& source, const Seed& seed) {
  const GameShape& shape = source.shape();
  shape.require_transformable();
  require_base(shape, seed.base);
  for (const auto& [profile, values] : seed.assignments) {
    if (!shape.contains(profile) || !on_star(profile, seed.base)) {
      throw Error(ErrorKind::kOffStarSeed, format_profile(profile) + " is not on the star through " +
                                               format_profile(seed.base));
    }
    if (values.size() != source.player_count()) {
      throw Error(ErrorKind::kArityMismatch, "seed outcome " + format_profile(profile) + " has " +
                                                 std::to_string(values.size()) + " payoffs");
    }
    Rational sum;
    for (const auto& v : values) sum += v;
    if (sum != source.payoff_sum(profile)) {
      throw Error(ErrorKind::kSeedSumViolation,
                  "outcome " + format_profile(profile) + " sums to " + sum.to_string() +
                      " but the source sums to " + source.payoff_sum(profile).to_string());
    }
  }
  for (const auto& p : star_profiles(shape, seed.base)) {
    if (!seed.assignments.contains(p)) {
      throw Error(ErrorKind::kIncompleteSeed, "no seed payoffs for outcome " + format_profile(p));
    }
  }
}

Game complete_from_seed(const Game& source, const Seed& seed) {
  validate_seed(source, seed);
  const GameShape& shape = source.shape();
  const std::size_t n = shape.player_count();
  const Profile& base = seed.base;

  std::vector<Rational> diff(shape.profile_count() * n);
  auto cell = [&](const Profile& p, std::size_t j) -> Rational& {
    return diff[shape.flat_index(p) * n + j];
  };

  for (const auto& [profile, values] : seed.assignments) {
    for (std::size_t j = 0; j < n; ++j) cell(profile, j) = values[j] - source.payoff(profile, j);
  }

  std::vector<std::pair<std::vector<std::size_t>, Profile>> order;
  order.reserve(shape.profile_count());
  Profile p(n, 0);
  do {
    std::vector<std::size_t> dist(n);
    for (std::size_t k = 0; k < n; ++k) dist[k] = distance(p[k], base[k]);
    order.emplace_back(std::move(dist), p);
  } while (shape.next(p));
  std::sort(order.begin(), order.end());

  for (const auto& [dist, profile] : order) {
    if (on_star(profile, base)) continue;
    std::size_t a = n;
    std::size_t b = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (dist[k] == 0) continue;
      if (a == n) {
        a = k;
      } else {
        b = k;
        break;
      }
    }
    const Profile pa = toward(profile, a, base);
    const Profile pb = toward(profile, b, base);
    const Profile pab = toward(pa, b, base);
    for (std::size_t j = 0; j < n; ++j) cell(profile, j) = cell(pa, j) + cell(pb, j) - cell(pab, j);
  }

  std::vector<Rational> table = source.payoff_table();
  for (std::size_t i = 0; i < table.size(); ++i) table[i] += diff[i];
  Game completed = source.with_payoffs(std::move(table));

  if (!check_equivalence(source, completed).equivalent) {
    throw std::logic_error("completed game is not reachable from the source");
  }
  return completed;
}

}  // namespace preplay
