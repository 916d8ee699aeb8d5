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

#include <gtest/gtest.h>

#include <set>

#include "preplay/error.hpp"
#include "support/errors.hpp"
#include "support/fixtures.hpp"

namespace preplay {
namespace {

using testing::pd_m0;
const auto kind_of = testing::error_kind_of;

TEST(GameTest, BuildsPrisonersDilemma) {
  const Game game = pd_m0();
  EXPECT_EQ(game.player_count(), 2u);
  EXPECT_EQ(game.payoff({0, 1}, 0), Rational(0));
  EXPECT_EQ(game.payoff({0, 1}, 1), Rational(5));
  EXPECT_EQ(game.payoff({1, 0}, 0), Rational(5));
  EXPECT_EQ(game.describe({1, 1}), "(D,D)");
}

TEST(GameTest, PayoffSums) {
  const Game game = pd_m0();
  EXPECT_EQ(game.payoff_sum({0, 0}), Rational(8));
  EXPECT_EQ(game.payoff_sum({1, 1}), Rational(2));
  const Game pennies = testing::matching_pennies();
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(pennies.payoff_sum({i, j}), Rational(0));
  }
  EXPECT_EQ(kind_of([&] { game.payoff_sum({2, 0}); }), ErrorKind::kIndexOutOfRange);
  EXPECT_EQ(kind_of([&] { game.payoff_sum({0}); }), ErrorKind::kIndexOutOfRange);
}

TEST(GameTest, MakeGameRejectsBadEntries) {
  const std::vector<std::vector<std::string>> cd{{"C", "D"}, {"C", "D"}};
  std::vector<PayoffEntry> entries{
      {{0, 0}, {4, 4}}, {{0, 1}, {0, 5}}, {{1, 0}, {5, 0}}, {{1, 1}, {1, 1}}};
  EXPECT_NO_THROW(make_game({"I", "II"}, cd, entries));

  auto duplicated = entries;
  duplicated.push_back({{0, 0}, {4, 4}});
  EXPECT_EQ(kind_of([&] { make_game({"I", "II"}, cd, duplicated); }), ErrorKind::kDuplicateOutcome);

  auto missing = entries;
  missing.pop_back();
  EXPECT_EQ(kind_of([&] { make_game({"I", "II"}, cd, missing); }), ErrorKind::kMissingOutcome);

  auto short_vector = entries;
  short_vector[2].payoffs.pop_back();
  EXPECT_EQ(kind_of([&] { make_game({"I", "II"}, cd, short_vector); }), ErrorKind::kArityMismatch);

  EXPECT_EQ(kind_of([&] { make_game({"I", "I"}, cd, entries); }), ErrorKind::kDuplicateName);
  EXPECT_EQ(kind_of([&] { make_game({"I", "II"}, {{"C", "C"}, {"C", "D"}}, entries); }),
            ErrorKind::kDuplicateName);
  EXPECT_EQ(kind_of([&] { make_game({"I", "II"}, {{"C", "D"}, {}}, {}); }), ErrorKind::kInvalidShape);
}

TEST(GameTest, SinglePlayerGamesAreNotTransformable) {
  const Game solo = make_game({"I"}, {{"a", "b"}}, {{{0}, {1}}, {{1}, {2}}});
  EXPECT_EQ(kind_of([&] { solo.shape().require_transformable(); }), ErrorKind::kInvalidShape);
  EXPECT_NO_THROW(pd_m0().shape().require_transformable());
}

TEST(GameTest, IndexingIsABijection) {
  testing::Corpus corpus(11);
  for (int trial = 0; trial < 50; ++trial) {
    const GameShape shape = corpus.shape(1, 4, 1, 4);
    std::set<std::size_t> seen;
    Profile p(shape.player_count(), 0);
    std::size_t visited = 0;
    do {
      const std::size_t flat = shape.flat_index(p);
      EXPECT_EQ(flat, visited);  // row-major, player 1 outermost
      EXPECT_EQ(shape.profile_at(flat), p);
      EXPECT_TRUE(seen.insert(flat).second);
      ++visited;
    } while (shape.next(p));
    EXPECT_EQ(visited, shape.profile_count());
  }
}

TEST(GameTest, FormatsProfilesOneBased) { EXPECT_EQ(format_profile({0, 2, 1}), "(1,3,2)"); }

}  // namespace
}  // namespace preplay
