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

#ifndef PREPLAY_GAME_HPP
#define PREPLAY_GAME_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "preplay/rational.hpp"

namespace preplay {

/// A pure strategy profile: one 0-based strategy index per player.
/// User-facing text renders these 1-based.
using Profile = std::vector<std::size_t>;

/// Number of strategies of each player.
class GameShape {
 public:
  GameShape() = default;
  explicit GameShape(std::vector<std::size_t> strategy_counts);

  std::size_t player_count() const { return counts_.size(); }
  std::size_t strategy_count(std::size_t player) const { return counts_.at(player); }
  const std::vector<std::size_t>& strategy_counts() const { return counts_; }

  /// Number of pure strategy profiles (product of the strategy counts).
  std::size_t profile_count() const { return profile_count_; }

  bool contains(const Profile& profile) const;

  /// Row-major position of a profile, player 0 outermost.
  std::size_t flat_index(const Profile& profile) const;
  Profile profile_at(std::size_t flat) const;

  /// Advances to the next profile in row-major order; false after the last.
  bool next(Profile& profile) const;

  /// Throws kInvalidShape unless there are at least two players.
  void require_transformable() const;

  friend bool operator==(const GameShape&, const GameShape&) = default;

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> strides_;
  std::size_t profile_count_ = 0;
};

/// A finite N-person normal-form game with exact rational payoffs.
///
/// The payoff tensor is dense: profile p owns the N consecutive values at
/// flat_index(p) * N. Instances are immutable; transformations build new games.
class Game {
 public:
  /// Validates names and tensor size. Throws Error on duplicate names, an empty
  /// strategy list, or a payoff table whose length is not profile_count * N.
  Game(std::vector<std::string> players, std::vector<std::vector<std::string>> strategies,
       std::vector<Rational> payoffs);

  const GameShape& shape() const { return shape_; }
  std::size_t player_count() const { return players_.size(); }
  std::size_t strategy_count(std::size_t player) const { return shape_.strategy_count(player); }

  const std::vector<std::string>& players() const { return players_; }
  const std::vector<std::vector<std::string>>& strategies() const { return strategies_; }
  const std::string& player_name(std::size_t player) const { return players_.at(player); }
  const std::string& strategy_name(std::size_t player, std::size_t strategy) const {
    return strategies_.at(player).at(strategy);
  }

  std::optional<std::size_t> find_player(std::string_view name) const;
  std::optional<std::size_t> find_strategy(std::size_t player, std::string_view name) const;

  /// Throws kIndexOutOfRange for an invalid profile or player.
  const Rational& payoff(const Profile& profile, std::size_t player) const;
  std::span<const Rational> payoffs(const Profile& profile) const;

  /// Exact sum of every player's payoff at one outcome.
  Rational payoff_sum(const Profile& profile) const;

  /// The flat payoff table (profile-major, then player).
  const std::vector<Rational>& payoff_table() const { return payoffs_; }

  /// Same players and strategies, different payoffs.
  Game with_payoffs(std::vector<Rational> payoffs) const;

  /// True when both games have identical names in identical order.
  bool same_names(const Game& other) const;

  /// Renders a profile as "(C,D)" using strategy names.
  std::string describe(const Profile& profile) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  void check_profile(const Profile& profile) const;

  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  GameShape shape_;
  std::vector<Rational> payoffs_;
};

/// One outcome entry for make_game: a profile and its payoff vector.
struct PayoffEntry {
  Profile profile;
  std::vector<Rational> payoffs;
};

/// Builds a game from an unordered list of outcome entries, checking that
/// the entries cover every profile exactly once with N values each.
Game make_game(std::vector<std::string> players, std::vector<std::vector<std::string>> strategies,
               const std::vector<PayoffEntry>& entries);

/// Builds a two-player game from a row-major matrix of payoff pairs.
Game make_bimatrix(std::vector<std::string> players,
                   std::vector<std::vector<std::string>> strategies,
                   const std::vector<std::vector<std::pair<Rational, Rational>>>& cells);

/// Renders a profile 1-based: "(1,2,1)".
std::string format_profile(const Profile& profile);

}  // namespace preplay

#endif  // PREPLAY_GAME_HPP
