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

#include "preplay/analyze.hpp"

#include "preplay/error.hpp"

namespace preplay {

std::vector<Profile> pure_nash(const Game& game) {
  const GameShape& shape = game.shape();
  const std::size_t n = shape.player_count();
  std::vector<Profile> equilibria;
  Profile p(n, 0);
  do {
    bool stable = true;
    for (std::size_t k = 0; k < n && stable; ++k) {
      const Rational& current = game.payoff(p, k);
      Profile q = p;
      for (std::size_t s = 0; s < shape.strategy_count(k); ++s) {
        q[k] = s;
        if (game.payoff(q, k) > current) {
          stable = false;
          break;
        }
      }
    }
    if (stable) equilibria.push_back(p);
  } while (shape.next(p));
  return equilibria;
}

Dominance dominance(const Game& game, std::size_t player) {
  const GameShape& shape = game.shape();
  if (player >= shape.player_count()) {
    throw Error(ErrorKind::kUnknownPlayer, "no player " + std::to_string(player + 1));
  }
  const std::size_t m = shape.strategy_count(player);
  Dominance result;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      if (s == t) continue;
      bool all_greater = true;
      bool all_geq = true;
      bool some_greater = false;
      Profile p(shape.player_count(), 0);
      do {
        if (p[player] != 0) continue;
        Profile ps = p;
        Profile pt = p;
        ps[player] = s;
        pt[player] = t;
        const Rational& us = game.payoff(ps, player);
        const Rational& ut = game.payoff(pt, player);
        if (us > ut) {
          some_greater = true;
        } else {
          all_greater = false;
          if (us < ut) all_geq = false;
        }
      } while (all_geq && shape.next(p));
      if (all_geq && some_greater) result.weak.insert({s, t});
      if (all_greater) result.strict.insert({s, t});
    }
  }
  return result;
}

std::optional<Rational> constant_sum(const Game& game) {
  const GameShape& shape = game.shape();
  Profile p(shape.player_count(), 0);
  const Rational first = game.payoff_sum(p);
  while (shape.next(p)) {
    if (game.payoff_sum(p) != first) return std::nullopt;
  }
  return first;
}

std::vector<Profile> pareto_optimal(const Game& game) {
  const GameShape& shape = game.shape();
  const std::size_t n = shape.player_count();
  std::vector<Profile> profiles;
  Profile p(n, 0);
  do profiles.push_back(p);
  while (shape.next(p));

  auto dominates = [&](const Profile& a, const Profile& b) {
    bool strictly = false;
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& ua = game.payoff(a, k);
      const Rational& ub = game.payoff(b, k);
      if (ua < ub) return false;
      if (ua > ub) strictly = true;
    }
    return strictly;
  };

  std::vector<Profile> optimal;
  for (const auto& candidate : profiles) {
    bool dominated = false;
    for (const auto& other : profiles) {
      if (dominates(other, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) optimal.push_back(candidate);
  }
  return optimal;
}

std::optional<Profile> strictly_dominant_profile(const Game& game) {
  const std::size_t n = game.player_count();
  Profile profile(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t m = game.strategy_count(k);
    const Dominance d = dominance(game, k);
    bool found = false;
    for (std::size_t s = 0; s < m && !found; ++s) {
      bool beats_all = true;
      for (std::size_t t = 0; t < m; ++t) {
        if (t != s && !d.strict.contains({s, t})) {
          beats_all = false;
          break;
        }
      }
      if (beats_all) {
        profile[k] = s;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return profile;
}

AnalysisReport analyze(const Game& game) {
  AnalysisReport report;
  report.pure_nash = pure_nash(game);
  for (std::size_t k = 0; k < game.player_count(); ++k) report.dominance.push_back(dominance(game, k));
  report.constant_sum = constant_sum(game);
  report.pareto_optimal = pareto_optimal(game);
  report.strictly_dominant_profile = strictly_dominant_profile(game);
  return report;
}

}  // namespace preplay
