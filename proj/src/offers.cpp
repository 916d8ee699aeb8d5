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

#include <map>

#include "preplay/error.hpp"

namespace preplay {

void OfferSet::add(const OfferSet& other) {
  offers_.insert(offers_.end(), other.offers_.begin(), other.offers_.end());
}

OfferSet canonicalize(const OfferSet& offers) {
  std::map<OfferKey, Rational> net;
  for (const auto& offer : offers) net[offer.key()] += offer.amount;
  OfferSet result;
  for (const auto& [key, amount] : net) {
    if (!amount.is_zero()) result.add(Offer{key.payer, key.payee, key.strategy, amount});
  }
  return result;
}

OfferSet compose(const OfferSet& first, const OfferSet& second) {
  OfferSet all = first;
  all.add(second);
  return canonicalize(all);
}

void validate_offer(const Offer& offer, const GameShape& shape) {
  shape.require_transformable();
  const std::size_t n = shape.player_count();
  if (offer.payer >= n) {
    throw Error(ErrorKind::kUnknownPlayer, "no payer " + std::to_string(offer.payer + 1));
  }
  if (offer.payee >= n) {
    throw Error(ErrorKind::kUnknownPlayer, "no payee " + std::to_string(offer.payee + 1));
  }
  if (offer.payer == offer.payee) {
    throw Error(ErrorKind::kSelfOffer,
                "player " + std::to_string(offer.payer + 1) + " cannot pay themself");
  }
  if (offer.strategy >= shape.strategy_count(offer.payee)) {
    throw Error(ErrorKind::kUnknownStrategy,
                "payee " + std::to_string(offer.payee + 1) + " has no strategy " +
                    std::to_string(offer.strategy + 1));
  }
}

void require_nonnegative(const OfferSet& offers) {
  for (const auto& offer : offers) {
    if (offer.amount.sign() < 0) {
      throw Error(ErrorKind::kNegativeAmount,
                  "offer amount " + offer.amount.to_string() + " is negative");
    }
  }
}

namespace {

void transfer(const GameShape& shape, const Offer& offer, std::vector<Rational>& table) {
  const std::size_t n = shape.player_count();
  Profile profile(n, 0);
  do {
    if (profile[offer.payee] != offer.strategy) continue;
    const std::size_t base = shape.flat_index(profile) * n;
    table[base + offer.payer] -= offer.amount;
    table[base + offer.payee] += offer.amount;
  } while (shape.next(profile));
}

}  // namespace

Game apply_offer(const Game& game, const Offer& offer) {
  validate_offer(offer, game.shape());
  std::vector<Rational> table = game.payoff_table();
  transfer(game.shape(), offer, table);
  return game.with_payoffs(std::move(table));
}

Game apply_offer_set(const Game& game, const OfferSet& offers) {
  game.shape().require_transformable();
  for (const auto& offer : offers) validate_offer(offer, game.shape());
  std::vector<Rational> table = game.payoff_table();
  for (const auto& offer : offers) transfer(game.shape(), offer, table);
  return game.with_payoffs(std::move(table));
}

OfferSet invert_offer(const Offer& offer, const GameShape& shape) {
  validate_offer(offer, shape);
  OfferSet inverse;
  for (std::size_t s = 0; s < shape.strategy_count(offer.payee); ++s) {
    if (s != offer.strategy) inverse.add(Offer{offer.payer, offer.payee, s, offer.amount});
  }
  for (std::size_t s = 0; s < shape.strategy_count(offer.payer); ++s) {
    inverse.add(Offer{offer.payee, offer.payer, s, offer.amount});
  }
  return canonicalize(inverse);
}

OfferSet invert_offer_set(const OfferSet& offers, const GameShape& shape) {
  OfferSet inverse;
  for (const auto& offer : offers) inverse.add(invert_offer(offer, shape));
  return canonicalize(inverse);
}

std::string describe_offer(const Game& game, const Offer& offer) {
  return game.player_name(offer.payer) + "->" + game.player_name(offer.payee) + " " +
         offer.amount.to_string() + " on " + game.strategy_name(offer.payee, offer.strategy);
}

}  // namespace preplay
