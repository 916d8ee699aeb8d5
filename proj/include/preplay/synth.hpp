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

#ifndef PREPLAY_SYNTH_HPP
#define PREPLAY_SYNTH_HPP

#include <vector>

#include "preplay/game.hpp"
#include "preplay/offers.hpp"
#include "preplay/rational.hpp"

namespace preplay {

struct SynthesisResult {
  /// Canonical offers turning the source into the target; amounts may be negative.
  OfferSet offers;
  /// Offer slots left undetermined by the system and fixed to zero.
  std::vector<OfferKey> pinned;
};

/// Finds offers that transform `source` into `target`.
///
/// Unknowns are the net offers x[payer, payee, s] for every ordered pair of
/// distinct players and every strategy s of the payee. For each player j and
/// profile p the change in j's payoff must equal
///
///   sum_k x[k, j, p_j] - sum_k x[j, k, p_k].
///
/// The system is solved exactly with unknowns ordered by (payee, payer,
/// strategy); free unknowns are pinned to zero. For two players this is the
/// classic system in the row player's incoming and the column player's
/// incoming offers with the column player's last strategy pinned.
///
/// Throws NotEquivalentError when the target is not reachable.
SynthesisResult synthesize_offers(const Game& source, const Game& target);

/// Rewrites an offer set so every amount is nonnegative without changing
/// its effect on any game of `shape`. A net threat of -d on payee strategy s
/// becomes the cancellation of a +d offer: the payer offers d on each other
/// strategy of the payee and the payee refunds d on every payer strategy.
OfferSet nonnegative_decomposition(const OfferSet& offers, const GameShape& shape);

/// Nonnegative offers after which each player's strategy in `profile`
/// strictly dominates every alternative by at least `margin`.
///
/// Player k's incentive comes from the next player (k + 1 mod N), contingent
/// on k playing profile[k]. The amount is the largest shortfall of the
/// designated strategy against any alternative, plus `margin`, floored at
/// zero. Offers a player makes never change their own preferences, so each
/// player's incentive is fixed by the single incoming offer.
///
/// Throws kInvalidProfile or kNonpositiveMargin.
OfferSet make_profile_dominant(const Game& game, const Profile& profile, const Rational& margin);

}  // namespace preplay

#endif  // PREPLAY_SYNTH_HPP
