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

#ifndef PREPLAY_ANALYZE_HPP
#define PREPLAY_ANALYZE_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "preplay/game.hpp"
#include "preplay/rational.hpp"

namespace preplay {

/// (dominating strategy, dominated strategy)
using StrategyPair = std::pair<std::size_t, std::size_t>;

/// Dominance among one player's strategies. `weak` contains every pair that
/// is >= at every opponent profile and > at some; `strict` is the subset that
/// is > everywhere.
struct Dominance {
  std::set<StrategyPair> strict;
  std::set<StrategyPair> weak;

  friend bool operator==(const Dominance&, const Dominance&) = default;
};

struct AnalysisReport {
  std::vector<Profile> pure_nash;
  std::vector<Dominance> dominance;  // one per player
  std::optional<Rational> constant_sum;
  std::vector<Profile> pareto_optimal;
  std::optional<Profile> strictly_dominant_profile;
};

/// Profiles where no player gains by deviating alone, in row-major order.
std::vector<Profile> pure_nash(const Game& game);

/// Throws kUnknownPlayer for an out-of-range player.
Dominance dominance(const Game& game, std::size_t player);

/// The common payoff sum, if every outcome has the same one.
std::optional<Rational> constant_sum(const Game& game);

/// Profiles whose payoff vector no other outcome weakly improves for all
/// players and strictly for one.
std::vector<Profile> pareto_optimal(const Game& game);

/// The profile of strategies that each strictly dominate all alternatives,
/// if every player has one.
std::optional<Profile> strictly_dominant_profile(const Game& game);

AnalysisReport analyze(const Game& game);

}  // namespace preplay

#endif  // PREPLAY_ANALYZE_HPP
