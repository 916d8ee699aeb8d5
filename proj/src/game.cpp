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

#include "preplay/game.hpp"

#include <set>
#include <sstream>

#include "preplay/error.hpp"

namespace preplay {

GameShape::GameShape(std::vector<std::size_t> strategy_counts)
    : counts_(std::move(strategy_counts)), strides_(counts_.size()) {
  if (counts_.empty()) throw Error(ErrorKind::kInvalidShape, "a game needs at least one player");
  profile_count_ = 1;
  for (std::size_t k = counts_.size(); k-- > 0;) {
    if (counts_[k] == 0) {
      throw Error(ErrorKind::kInvalidShape,
                  "player " + std::to_string(k + 1) + " has no strategies");
    }
    strides_[k] = profile_count_;
    profile_count_ *= counts_[k];
  }
}

bool GameShape::contains(const Profile& profile) const {
  if (profile.size() != counts_.size()) return false;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (profile[k] >= counts_[k]) return false;
  }
  return true;
}

std::size_t GameShape::flat_index(const Profile& profile) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < counts_.size(); ++k) flat += profile[k] * strides_[k];
  return flat;
}

Profile GameShape::profile_at(std::size_t flat) const {
  Profile profile(counts_.size());
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    profile[k] = flat / strides_[k];
    flat %= strides_[k];
  }
  return profile;
}

bool GameShape::next(Profile& profile) const {
  for (std::size_t k = counts_.size(); k-- > 0;) {
    if (++profile[k] < counts_[k]) return true;
    profile[k] = 0;
  }
  return false;
}

void GameShape::require_transformable() const {
  if (player_count() < 2) {
    throw Error(ErrorKind::kInvalidShape, "offer transformations need at least two players");
  }
}

namespace {

void check_unique(const std::vector<std::string>& names, const std::string& scope) {
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw Error(ErrorKind::kDuplicateName, "\"" + name + "\" repeated in " + scope);
    }
  }
}

std::vector<std::size_t> counts_of(const std::vector<std::vector<std::string>>& strategies) {
  std::vector<std::size_t> counts;
  counts.reserve(strategies.size());
  for (const auto& list : strategies) counts.push_back(list.size());
  return counts;
}

}  // namespace

Game::Game(std::vector<std::string> players, std::vector<std::vector<std::string>> strategies,
           std::vector<Rational> payoffs)
    : players_(std::move(players)),
      strategies_(std::move(strategies)),
      payoffs_(std::move(payoffs)) {
  if (players_.size() != strategies_.size()) {
    throw Error(ErrorKind::kArityMismatch, std::to_string(players_.size()) + " players but " +
                                               std::to_string(strategies_.size()) +
                                               " strategy lists");
  }
  check_unique(players_, "player list");
  for (std::size_t k = 0; k < players_.size(); ++k) {
    check_unique(strategies_[k], "strategies of " + players_[k]);
  }
  shape_ = GameShape(counts_of(strategies_));
  if (payoffs_.size() != shape_.profile_count() * players_.size()) {
    throw Error(ErrorKind::kArityMismatch,
                "payoff table has " + std::to_string(payoffs_.size()) + " values, expected " +
                    std::to_string(shape_.profile_count() * players_.size()));
  }
}

std::optional<std::size_t> Game::find_player(std::string_view name) const {
  for (std::size_t k = 0; k < players_.size(); ++k) {
    if (players_[k] == name) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> Game::find_strategy(std::size_t player, std::string_view name) const {
  const auto& list = strategies_.at(player);
  for (std::size_t s = 0; s < list.size(); ++s) {
    if (list[s] == name) return s;
  }
  return std::nullopt;
}

void Game::check_profile(const Profile& profile) const {
  if (!shape_.contains(profile)) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "profile " + format_profile(profile) + " is outside the game");
  }
}

const Rational& Game::payoff(const Profile& profile, std::size_t player) const {
  check_profile(profile);
  if (player >= players_.size()) {
    throw Error(ErrorKind::kIndexOutOfRange, "no player " + std::to_string(player + 1));
  }
  return payoffs_[shape_.flat_index(profile) * players_.size() + player];
}

std::span<const Rational> Game::payoffs(const Profile& profile) const {
  check_profile(profile);
  return std::span<const Rational>(payoffs_).subspan(shape_.flat_index(profile) * players_.size(),
                                                     players_.size());
}

Rational Game::payoff_sum(const Profile& profile) const {
  Rational sum;
  for (const auto& value : payoffs(profile)) sum += value;
  return sum;
}

Game Game::with_payoffs(std::vector<Rational> payoffs) const {
  return Game(players_, strategies_, std::move(payoffs));
}

bool Game::same_names(const Game& other) const {
  return players_ == other.players_ && strategies_ == other.strategies_;
}

std::string Game::describe(const Profile& profile) const {
  std::string out = "(";
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (k > 0) out += ',';
    out += strategy_name(k, profile[k]);
  }
  return out + ")";
}

Game make_game(std::vector<std::string> players, std::vector<std::vector<std::string>> strategies,
               const std::vector<PayoffEntry>& entries) {
  const std::size_t n = players.size();
  if (n != strategies.size()) {
    throw Error(ErrorKind::kArityMismatch, "player and strategy lists differ in length");
  }
  const GameShape shape(counts_of(strategies));
  std::vector<Rational> table(shape.profile_count() * n);
  std::vector<bool> filled(shape.profile_count(), false);
  for (const auto& entry : entries) {
    if (!shape.contains(entry.profile)) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "profile " + format_profile(entry.profile) + " is outside the game");
    }
    if (entry.payoffs.size() != n) {
      throw Error(ErrorKind::kArityMismatch, "outcome " + format_profile(entry.profile) + " has " +
                                                 std::to_string(entry.payoffs.size()) +
                                                 " payoffs, expected " + std::to_string(n));
    }
    const std::size_t flat = shape.flat_index(entry.profile);
    if (filled[flat]) {
      throw Error(ErrorKind::kDuplicateOutcome,
                  "outcome " + format_profile(entry.profile) + " listed twice");
    }
    filled[flat] = true;
    std::copy(entry.payoffs.begin(), entry.payoffs.end(), table.begin() + flat * n);
  }
  for (std::size_t flat = 0; flat < filled.size(); ++flat) {
    if (!filled[flat]) {
      throw Error(ErrorKind::kMissingOutcome,
                  "no payoffs for outcome " + format_profile(shape.profile_at(flat)));
    }
  }
  return Game(std::move(players), std::move(strategies), std::move(table));
}

Game make_bimatrix(std::vector<std::string> players,
                   std::vector<std::vector<std::string>> strategies,
                   const std::vector<std::vector<std::pair<Rational, Rational>>>& cells) {
  std::vector<PayoffEntry> entries;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      entries.push_back({{i, j}, {cells[i][j].first, cells[i][j].second}});
    }
  }
  return make_game(std::move(players), std::move(strategies), entries);
}

std::string format_profile(const Profile& profile) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (k > 0) out << ',';
    out << profile[k] + 1;
  }
  out << ')';
  return out.str();
}

}  // namespace preplay
