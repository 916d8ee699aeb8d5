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

#include "preplay/offers.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "preplay/analyze.hpp"
#include "support/errors.hpp"
#include "support/fixtures.hpp"

namespace preplay {
namespace {

using testing::Corpus;
using testing::pd_m0;
using testing::pd_m1;
using testing::pd_m2;

constexpr std::size_t kI = 0;
constexpr std::size_t kII = 1;
constexpr std::size_t kC = 0;

TEST(ApplyOfferTest, PrisonersDilemmaChain) {
  const Game m1 = apply_offer(pd_m0(), Offer{kI, kII, kC, 2});
  EXPECT_EQ(m1, pd_m1());
  EXPECT_EQ(apply_offer(m1, Offer{kII, kI, kC, 2}), pd_m2());
  EXPECT_EQ(apply_offer_set(pd_m0(), {{kI, kII, kC, 2}, {kII, kI, kC, 2}}), pd_m2());
}

TEST(ApplyOfferTest, ZeroAmountAndEmptySetAreIdentity) {
  EXPECT_EQ(apply_offer(pd_m0(), Offer{kI, kII, 1, 0}), pd_m0());
  EXPECT_EQ(apply_offer_set(pd_m0(), {}), pd_m0());
}

TEST(ApplyOfferTest, SplitOfferEqualsSummedOffer) {
  EXPECT_EQ(apply_offer_set(pd_m0(), {{kI, kII, kC, 1}, {kI, kII, kC, 1}}),
            apply_offer(pd_m0(), Offer{kI, kII, kC, 2}));
}

TEST(ApplyOfferTest, RejectsInvalidOffers) {
  const auto kind_of = testing::error_kind_of;
  EXPECT_EQ(kind_of([] { apply_offer(pd_m0(), Offer{kI, kI, kC, 1}); }), ErrorKind::kSelfOffer);
  EXPECT_EQ(kind_of([] { apply_offer(pd_m0(), Offer{2, kI, kC, 1}); }), ErrorKind::kUnknownPlayer);
  EXPECT_EQ(kind_of([] { apply_offer(pd_m0(), Offer{kI, 5, kC, 1}); }), ErrorKind::kUnknownPlayer);
  EXPECT_EQ(kind_of([] { apply_offer(pd_m0(), Offer{kI, kII, 2, 1}); }), ErrorKind::kUnknownStrategy);
  EXPECT_EQ(kind_of([] { require_nonnegative({{kI, kII, kC, -1}}); }), ErrorKind::kNegativeAmount);
}

TEST(CanonicalizeTest, SumsPerSlotAndDropsZeros) {
  EXPECT_EQ(canonicalize({{kI, kII, kC, 1}, {kI, kII, kC, 2}}), OfferSet({{kI, kII, kC, 3}}));
  EXPECT_EQ(canonicalize({}), OfferSet());
  EXPECT_EQ(canonicalize({{kI, kII, kC, 2}, {kI, kII, kC, -2}}), OfferSet());
}

TEST(CanonicalizeTest, OrdersByPayerPayeeStrategy) {
  const OfferSet messy{{kII, kI, 1, 1}, {kI, kII, 1, 1}, {kII, kI, 0, 1}, {kI, kII, 0, 1}};
  const OfferSet canonical = canonicalize(messy);
  ASSERT_EQ(canonical.size(), 4u);
  EXPECT_TRUE(std::is_sorted(canonical.begin(), canonical.end(),
                             [](const Offer& a, const Offer& b) { return a.key() < b.key(); }));
  EXPECT_EQ(canonical.offers().front().key(), (OfferKey{kI, kII, 0}));
}

TEST(InvertOfferTest, BuildsNonnegativeCancellation) {
  const GameShape shape({2, 2});
  // A->B 2 on B_1 is cancelled by A->B 2 on B_2 plus B->A 2 on each A strategy.
  const OfferSet expected{{0, 1, 1, 2}, {1, 0, 0, 2}, {1, 0, 1, 2}};
  EXPECT_EQ(invert_offer(Offer{0, 1, 0, 2}, shape), expected);
  EXPECT_TRUE(invert_offer(Offer{0, 1, 0, 0}, shape).empty());

  const Offer offer{kI, kII, kC, 2};
  EXPECT_EQ(apply_offer_set(apply_offer(pd_m0(), offer), invert_offer(offer, pd_m0().shape())), pd_m0());
}

TEST(InvertOfferTest, SetInverse) {
  const GameShape shape = pd_m0().shape();
  EXPECT_TRUE(invert_offer_set({}, shape).empty());
  const OfferSet both{{kI, kII, kC, 2}, {kII, kI, kC, 2}};
  EXPECT_EQ(apply_offer_set(apply_offer_set(pd_m0(), both), invert_offer_set(both, shape)), pd_m0());
  const Offer single{kII, kI, 1, Rational(3, 2)};
  EXPECT_EQ(invert_offer_set({single}, shape), invert_offer(single, shape));
}

// Group laws over a seeded random corpus.
class OfferPropertyTest : public ::testing::Test {
 protected:
  Corpus corpus_{20260101};
};

TEST_F(OfferPropertyTest, ApplicationIsOrderIndependent) {
  for (int trial = 0; trial < 150; ++trial) {
    const Game game = corpus_.game();
    const OfferSet first = corpus_.offers(game.shape());
    const OfferSet second = corpus_.offers(game.shape());
    const Game one_then_two = apply_offer_set(apply_offer_set(game, first), second);
    const Game two_then_one = apply_offer_set(apply_offer_set(game, second), first);
    EXPECT_EQ(one_then_two, two_then_one);
    EXPECT_EQ(one_then_two, apply_offer_set(game, compose(first, second)));

    std::vector<Offer> shuffled = first.offers();
    std::shuffle(shuffled.begin(), shuffled.end(), corpus_.engine());
    Game folded = game;
    for (const auto& offer : shuffled) folded = apply_offer(folded, offer);
    EXPECT_EQ(folded, apply_offer_set(game, first));
  }
}

TEST_F(OfferPropertyTest, CanonicalizationPreservesEffect) {
  for (int trial = 0; trial < 150; ++trial) {
    const Game game = corpus_.game();
    const OfferSet offers = corpus_.offers(game.shape(), 10);
    const OfferSet canonical = canonicalize(offers);
    EXPECT_EQ(apply_offer_set(game, offers), apply_offer_set(game, canonical));
    EXPECT_EQ(canonicalize(canonical), canonical);
    for (const auto& offer : canonical) EXPECT_FALSE(offer.amount.is_zero());
  }
}

TEST_F(OfferPropertyTest, InverseRestoresEveryGame) {
  for (int trial = 0; trial < 150; ++trial) {
    const Game game = corpus_.game();
    const OfferSet offers = corpus_.offers(game.shape());
    const OfferSet inverse = invert_offer_set(offers, game.shape());
    EXPECT_EQ(apply_offer_set(apply_offer_set(game, offers), inverse), game);
    EXPECT_EQ(apply_offer_set(apply_offer_set(game, inverse), offers), game);
  }
}

TEST_F(OfferPropertyTest, ConservesOutcomeSums) {
  for (int trial = 0; trial < 150; ++trial) {
    const Game game = corpus_.game();
    const Game moved = apply_offer_set(game, corpus_.offers(game.shape()));
    Profile p(game.player_count(), 0);
    do EXPECT_EQ(game.payoff_sum(p), moved.payoff_sum(p));
    while (game.shape().next(p));
  }
}

TEST_F(OfferPropertyTest, OwnOffersKeepOwnDominance) {
  for (int trial = 0; trial < 150; ++trial) {
    const Game game = corpus_.game();
    const std::size_t payer = corpus_.uniform(0, game.player_count() - 1);
    OfferSet own;
    for (const auto& offer : corpus_.offers(game.shape(), 8)) {
      if (offer.payer == payer) own.add(offer);
    }
    // Make sure the payer offers something in most trials.
    Offer extra = corpus_.offer(game.shape());
    if (extra.payer == payer) own.add(extra);
    EXPECT_EQ(dominance(game, payer), dominance(apply_offer_set(game, own), payer));
  }
}

}  // namespace
}  // namespace preplay
