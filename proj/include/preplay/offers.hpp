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

#ifndef PREPLAY_OFFERS_HPP
#define PREPLAY_OFFERS_HPP

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "preplay/game.hpp"
#include "preplay/rational.hpp"

namespace preplay {

/// Identifies the (payer, payee, payee strategy) slot an offer occupies.
/// All indices are 0-based.
struct OfferKey {
  std::size_t payer = 0;
  std::size_t payee = 0;
  std::size_t strategy = 0;

  friend auto operator<=>(const OfferKey&, const OfferKey&) = default;
};

/// A binding preplay offer: `payer` pays `amount` to `payee` after the game
/// whenever the payee plays `strategy`. Amounts may be negative; a negative
/// amount is a threat, which nonnegative_decomposition() can rewrite.
struct Offer {
  std::size_t payer = 0;
  std::size_t payee = 0;
  std::size_t strategy = 0;
  Rational amount;

  OfferKey key() const { return {payer, payee, strategy}; }

  friend bool operator==(const Offer&, const Offer&) = default;
};

/// A multiset of offers. Application order is irrelevant, so the canonical
/// form (one summed amount per key, zeros dropped, sorted by key) is the
/// normal form used for comparisons.
class OfferSet {
 public:
  OfferSet() = default;
  OfferSet(std::initializer_list<Offer> offers) : offers_(offers) {}
  explicit OfferSet(std::vector<Offer> offers) : offers_(std::move(offers)) {}

  const std::vector<Offer>& offers() const { return offers_; }
  std::size_t size() const { return offers_.size(); }
  bool empty() const { return offers_.empty(); }
  auto begin() const { return offers_.begin(); }
  auto end() const { return offers_.end(); }

  void add(Offer offer) { offers_.push_back(std::move(offer)); }
  void add(const OfferSet& other);

  /// Syntactic equality. Compare canonical forms for semantic equality.
  friend bool operator==(const OfferSet&, const OfferSet&) = default;

 private:
  std::vector<Offer> offers_;
};

OfferSet canonicalize(const OfferSet& offers);

/// Union of two offer sets in canonical form (composition of their effects).
OfferSet compose(const OfferSet& first, const OfferSet& second);

/// Checks an offer against a shape. Throws kUnknownPlayer, kUnknownStrategy
/// or kSelfOffer.
void validate_offer(const Offer& offer, const GameShape& shape);

/// Throws kNegativeAmount if any offer has a negative amount.
void require_nonnegative(const OfferSet& offers);

/// Moves `amount` from payer to payee in every outcome where the payee plays
/// the offer's strategy.
Game apply_offer(const Game& game, const Offer& offer);

/// Applies every member offer; the result does not depend on order.
Game apply_offer_set(const Game& game, const OfferSet& offers);

/// Nonnegative cancellation of one offer: the payer repeats the amount on
/// every other strategy of the payee and the payee refunds it on every
/// strategy of the payer. Returned in canonical form.
OfferSet invert_offer(const Offer& offer, const GameShape& shape);

/// Canonical union of the member inverses.
OfferSet invert_offer_set(const OfferSet& offers, const GameShape& shape);

/// "I->II 2 on C" using names from the game.
std::string describe_offer(const Game& game, const Offer& offer);

}  // namespace preplay

#endif  // PREPLAY_OFFERS_HPP
