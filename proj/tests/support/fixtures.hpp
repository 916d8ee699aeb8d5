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

// Worked games and a seeded random corpus shared by the test binaries.

#ifndef PREPLAY_TESTS_SUPPORT_FIXTURES_HPP
#define PREPLAY_TESTS_SUPPORT_FIXTURES_HPP

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "preplay/game.hpp"
#include "preplay/offers.hpp"
#include "preplay/rational.hpp"

namespace preplay::testing {

using Cells = std::vector<std::vector<std::pair<Rational, Rational>>>;
using Triple = std::vector<Rational>;
using Slice = std::vector<std::vector<Triple>>;

inline Game bimatrix(const Cells& cells, std::vector<std::string> rows = {},
                     std::vector<std::string> cols = {}) {
  if (rows.empty()) {
    for (std::size_t i = 0; i < cells.size(); ++i) rows.push_back("A" + std::to_string(i + 1));
  }
  if (cols.empty()) {
    for (std::size_t j = 0; j < cells.front().size(); ++j) cols.push_back("B" + std::to_string(j + 1));
  }
  return make_bimatrix({"A", "B"}, {rows, cols}, cells);
}

// Prisoners' Dilemma and the two games reached by the narrated offers.
inline Game pd_m0() {
  return make_bimatrix({"I", "II"}, {{"C", "D"}, {"C", "D"}}, {{{4, 4}, {0, 5}}, {{5, 0}, {1, 1}}});
}
inline Game pd_m1() {
  return make_bimatrix({"I", "II"}, {{"C", "D"}, {"C", "D"}}, {{{2, 6}, {0, 5}}, {{3, 2}, {1, 1}}});
}
inline Game pd_m2() {
  return make_bimatrix({"I", "II"}, {{"C", "D"}, {"C", "D"}}, {{{4, 4}, {2, 3}}, {{3, 2}, {1, 1}}});
}

inline Game matching_pennies() {
  return make_bimatrix({"I", "II"}, {{"H", "T"}, {"H", "T"}},
                       {{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}});
}

// The 2x2 source and the three candidate targets of the reachability example.
inline Game reach_source() { return bimatrix({{{4, 4}, {0, 5}}, {{3, 0}, {1, 1}}}); }
inline Game reach_good() { return bimatrix({{{2, 6}, {2, 3}}, {{0, 3}, {2, 0}}}); }
inline Game reach_bad1() { return bimatrix({{{2, 6}, {2, 3}}, {{0, 3}, {1, 1}}}); }
inline Game reach_bad2() { return bimatrix({{{2, 6}, {3, 2}}, {{0, 3}, {2, 0}}}); }

// 4x3 completion example: source, and the completed target.
inline Game example4_source() {
  return bimatrix({{{4, 4}, {6, 2}, {0, 6}},
                   {{2, 6}, {1, 1}, {2, 2}},
                   {{5, 0}, {0, 1}, {1, 5}},
                   {{0, 0}, {2, 3}, {3, 0}}});
}
inline Game example4_completed() {
  return bimatrix({{{1, 7}, {4, 4}, {2, 4}},
                   {{7, 1}, {7, -5}, {12, -8}},
                   {{3, 2}, {-1, 2}, {4, 2}},
                   {{0, 0}, {3, 2}, {8, -5}}});
}

// 3x3x2 game given as two slices, one per strategy of the third player.
inline Game three_player(const Slice& first, const Slice& second) {
  std::vector<PayoffEntry> entries;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      entries.push_back({{i, j, 0}, first[i][j]});
      entries.push_back({{i, j, 1}, second[i][j]});
    }
  }
  return make_game({"A1", "A2", "A3"},
                   {{"A11", "A12", "A13"}, {"A21", "A22", "A23"}, {"A31", "A32"}}, entries);
}

inline Game example5_source() {
  return three_player({{{1, 2, 0}, {2, 3, 1}, {3, 1, 2}},
                       {{2, 3, 3}, {3, 4, 4}, {4, 2, 5}},
                       {{6, 5, 6}, {7, 6, 7}, {5, 7, 8}}},
                      {{{1, 1, 8}, {2, 2, 7}, {3, 3, 6}},
                       {{1, 2, 5}, {2, 3, 4}, {3, 4, 3}},
                       {{2, 1, 2}, {3, 2, 1}, {1, 3, 0}}});
}
inline Game example5_completed() {
  return three_player({{{0, 5, -2}, {1, 2, 3}, {-1, 5, 2}},
                       {{4, 4, 0}, {5, 1, 5}, {3, 4, 4}},
                       {{7, 7, 3}, {8, 4, 8}, {3, 10, 7}}},
                      {{{-1, 7, 4}, {0, 4, 7}, {-2, 10, 4}},
                       {{2, 6, 0}, {3, 3, 3}, {1, 9, 0}},
                       {{2, 6, -3}, {3, 3, 0}, {-2, 9, -3}}});
}
// Star around outcome (2,2,1), 0-based {1,1,0}.
inline Profile example5_base() { return {1, 1, 0}; }

/// Deterministic generator of small games and offer sets.
class Corpus {
 public:
  explicit Corpus(std::uint32_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  GameShape shape(std::size_t min_players = 2, std::size_t max_players = 3,
                  std::size_t min_strategies = 2, std::size_t max_strategies = 4) {
    std::vector<std::size_t> counts(uniform(min_players, max_players));
    for (auto& c : counts) c = uniform(min_strategies, max_strategies);
    return GameShape(counts);
  }

  Game game(const GameShape& shape) {
    std::vector<std::string> players;
    std::vector<std::vector<std::string>> strategies;
    for (std::size_t k = 0; k < shape.player_count(); ++k) {
      players.push_back("P" + std::to_string(k + 1));
      strategies.emplace_back();
      for (std::size_t s = 0; s < shape.strategy_count(k); ++s) {
        strategies.back().push_back("s" + std::to_string(k + 1) + std::to_string(s + 1));
      }
    }
    std::vector<Rational> table(shape.profile_count() * shape.player_count());
    for (auto& v : table) v = Rational(integer(-9, 9));
    return Game(players, strategies, table);
  }

  Game game() { return game(shape()); }

  // Amounts are integers or halves in [-5, 5], zeros included.
  Offer offer(const GameShape& shape) {
    const std::size_t n = shape.player_count();
    const std::size_t payer = uniform(0, n - 1);
    std::size_t payee = uniform(0, n - 2);
    if (payee >= payer) ++payee;
    const std::size_t strategy = uniform(0, shape.strategy_count(payee) - 1);
    const Rational amount = uniform(0, 3) == 0 ? Rational(integer(-10, 10), 2) : Rational(integer(-5, 5));
    return Offer{payer, payee, strategy, amount};
  }

  OfferSet offers(const GameShape& shape, std::size_t max_count = 6) {
    OfferSet set;
    const std::size_t count = uniform(0, max_count);
    for (std::size_t i = 0; i < count; ++i) set.add(offer(shape));
    return set;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace preplay::testing

#endif  // PREPLAY_TESTS_SUPPORT_FIXTURES_HPP
