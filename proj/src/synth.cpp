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

#include "preplay/synth.hpp"

#include <optional>
#include <stdexcept>

#include "preplay/characterize.hpp"
#include "preplay/error.hpp"
#include "preplay/linear_system.hpp"

namespace preplay {

namespace {

// Column layout of the unknowns, ordered by (payee, payer, strategy).
class UnknownIndex {
 public:
  explicit UnknownIndex(const GameShape& shape) : n_(shape.player_count()) {
    offsets_.assign(n_ * n_, 0);
    for (std::size_t payee = 0; payee < n_; ++payee) {
      for (std::size_t payer = 0; payer < n_; ++payer) {
        if (payer == payee) continue;
        offsets_[payee * n_ + payer] = keys_.size();
        for (std::size_t s = 0; s < shape.strategy_count(payee); ++s) {
          keys_.push_back({payer, payee, s});
        }
      }
    }
  }

  std::size_t column(std::size_t payer, std::size_t payee, std::size_t strategy) const {
    return offsets_[payee * n_ + payer] + strategy;
  }
  const std::vector<OfferKey>& keys() const { return keys_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<OfferKey> keys_;
};

}  // namespace

SynthesisResult synthesize_offers(const Game& source, const Game& target) {
  EquivalenceVerdict verdict = check_equivalence(source, target);
  if (!verdict.equivalent) {
    const std::string detail = describe_violation(source, *verdict.violation);
    throw NotEquivalentError(std::move(verdict), detail);
  }

  const GameShape& shape = source.shape();
  const std::size_t n = shape.player_count();
  const DiffTensor diff = diff_tensor(source, target);
  const UnknownIndex unknowns(shape);

  RationalMatrix system(n * shape.profile_count(), unknowns.keys().size());
  std::vector<Rational> rhs(system.rows());
  std::size_t row = 0;
  Profile profile(n, 0);
  do {
    for (std::size_t j = 0; j < n; ++j, ++row) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        system(row, unknowns.column(k, j, profile[j])) += Rational(1);
        system(row, unknowns.column(j, k, profile[k])) -= Rational(1);
      }
      rhs[row] = diff.at(profile, j);
    }
  } while (shape.next(profile));

  const auto solution = solve_exact(std::move(system), std::move(rhs));
  if (!solution) {
    // Unreachable when the equivalence check passed.
    throw std::logic_error("offer system inconsistent for equivalent games");
  }

  SynthesisResult result;
  OfferSet offers;
  for (std::size_t c = 0; c < unknowns.keys().size(); ++c) {
    const OfferKey& key = unknowns.keys()[c];
    offers.add(Offer{key.payer, key.payee, key.strategy, solution->values[c]});
  }
  result.offers = canonicalize(offers);
  for (const std::size_t c : solution->free_columns) result.pinned.push_back(unknowns.keys()[c]);

  if (apply_offer_set(source, result.offers) != target) {
    throw std::logic_error("synthesized offers do not reproduce the target");
  }
  return result;
}

OfferSet nonnegative_decomposition(const OfferSet& offers, const GameShape& shape) {
  OfferSet result;
  for (const auto& offer : canonicalize(offers)) {
    if (offer.amount.sign() >= 0) {
      validate_offer(offer, shape);
      result.add(offer);
    } else {
      result.add(invert_offer(Offer{offer.payer, offer.payee, offer.strategy, -offer.amount}, shape));
    }
  }
  return canonicalize(result);
}

OfferSet make_profile_dominant(const Game& game, const Profile& profile, const Rational& margin) {
  const GameShape& shape = game.shape();
  shape.require_transformable();
  if (!shape.contains(profile)) {
    throw Error(ErrorKind::kInvalidProfile, format_profile(profile) + " is not a profile of the game");
  }
  if (margin.sign() <= 0) {
    throw Error(ErrorKind::kNonpositiveMargin, "margin must be positive, got " + margin.to_string());
  }

  const std::size_t n = shape.player_count();
  OfferSet offers;
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<Rational> worst_gap;
    Profile others(n, 0);
    do {
      if (others[k] != 0) continue;  // enumerate opponent profiles once
      Profile designated = others;
      designated[k] = profile[k];
      const Rational& own = game.payoff(designated, k);
      for (std::size_t alt = 0; alt < shape.strategy_count(k); ++alt) {
        if (alt == profile[k]) continue;
        Profile deviation = others;
        deviation[k] = alt;
        const Rational gap = game.payoff(deviation, k) - own;
        if (!worst_gap || gap > *worst_gap) worst_gap = gap;
      }
    } while (shape.next(others));

    if (!worst_gap) continue;  // a single strategy dominates vacuously
    const Rational amount = *worst_gap + margin;
    if (amount.sign() > 0) offers.add(Offer{(k + 1) % n, k, profile[k], amount});
  }
  return canonicalize(offers);
}

}  // namespace preplay
