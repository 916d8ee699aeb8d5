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

#ifndef PREPLAY_COMPLETE_HPP
#define PREPLAY_COMPLETE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "preplay/game.hpp"
#include "preplay/rational.hpp"

namespace preplay {

/// A partially specified target: full payoff vectors on the coordinate star
/// through `base`, i.e. every profile that differs from `base` in at most one
/// coordinate.
struct Seed {
  Profile base;
  std::map<Profile, std::vector<Rational>> assignments;
};

/// All profiles of the star through `base`, the base first, then each axis in
/// order.
std::vector<Profile> star_profiles(const GameShape& shape, const Profile& base);

bool on_star(const Profile& profile, const Profile& base);

/// Reads the star through `base` off a complete game.
Seed seed_from_game(const Game& game, const Profile& base);

/// Two-player convenience: the star values of one player only; the other
/// player's values follow from keeping each outcome sum unchanged.
Seed seed_from_player_values(const Game& source, const Profile& base, std::size_t player,
                             const std::map<Profile, Rational>& values);

/// Checks that the seed covers exactly the star with sum-preserving vectors.
/// Throws kInvalidProfile, kOffStarSeed, kIncompleteSeed, kArityMismatch or
/// kSeedSumViolation.
void validate_seed(const Game& source, const Seed& seed);

/// Extends the seed to the unique game that agrees with it on the star and is
/// reachable from `source` by offers.
///
/// Differences are filled in order of the per-axis distance vector
/// |p_k - base_k| compared lexicographically; each off-star profile takes
///
///   c(p) = c(p - e_a) + c(p - e_b) - c(p - e_a - e_b)
///
/// where a < b are the first two axes on which p leaves the base, and "- e"
/// means one step back toward the base. With base (1,...,1) this is a plain
/// row-major sweep.
Game complete_from_seed(const Game& source, const Seed& seed);

}  // namespace preplay

#endif  // PREPLAY_COMPLETE_HPP
