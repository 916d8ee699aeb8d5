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

#ifndef PREPLAY_DOCUMENT_HPP
#define PREPLAY_DOCUMENT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "preplay/analyze.hpp"
#include "preplay/complete.hpp"
#include "preplay/game.hpp"
#include "preplay/offers.hpp"

namespace preplay {

inline constexpr int kSchemaVersion = 1;

/// Malformed input. The message names the source and the JSON location
/// (line/column for syntax errors, a JSON pointer for structural ones).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Game documents look like
//
//   {
//     "schema_version": 1,
//     "players": ["I", "II"],
//     "strategies": [["C", "D"], ["C", "D"]],
//     "payoffs": [
//       [["4", "4"], ["0", "5"]],
//       [["5", "0"], ["1", "1"]]
//     ]
//   }
//
// with one nesting level per player. Payoff values are JSON integers or
// strings holding an integer, a decimal ("0.5") or a fraction ("-3/4").

Game parse_game(std::string_view text, std::string_view source_name = "<input>");
std::string serialize_game(const Game& game);

/// Offer documents: {"schema_version": 1, "offers": [{"payer": "I",
/// "payee": "II", "strategy": "C", "amount": "2"}, ...]}. A bare array of
/// offers is also accepted. Names resolve against `game`; with `strict`
/// negative amounts are rejected.
OfferSet parse_offers(std::string_view text, const Game& game,
                      std::string_view source_name = "<input>", bool strict = false);
std::string serialize_offers(const Game& game, const OfferSet& offers);

/// Seed documents use the game grammar with null for unspecified outcomes.
/// Players and strategies must match `source`.
Seed parse_seed(std::string_view text, const Game& source, const Profile& base,
                std::string_view source_name = "<input>");

/// "C,D" -> 0-based profile, resolving names in player order.
Profile parse_profile(std::string_view text, const Game& game);

/// Human-readable payoff tables; games with more than two players print one
/// table per combination of the remaining players' strategies.
std::string render_game(const Game& game);

std::string render_analysis(const Game& game, const AnalysisReport& report);
std::string serialize_analysis(const Game& game, const AnalysisReport& report);

}  // namespace preplay

#endif  // PREPLAY_DOCUMENT_HPP
