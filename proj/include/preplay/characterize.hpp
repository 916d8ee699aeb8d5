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

#ifndef PREPLAY_CHARACTERIZE_HPP
#define PREPLAY_CHARACTERIZE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "preplay/error.hpp"
#include "preplay/game.hpp"
#include "preplay/rational.hpp"

namespace preplay {

/// Per-player payoff change between two games of the same shape:
/// at(p, k) = target payoff of player k at p minus source payoff.
class DiffTensor {
 public:
  DiffTensor(GameShape shape, std::vector<Rational> values);

  const GameShape& shape() const { return shape_; }
  const Rational& at(const Profile& profile, std::size_t player) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  GameShape shape_;
  std::vector<Rational> values_;
};

/// Throws kShapeMismatch or kNameMismatch unless both games share shape and names.
void require_comparable(const Game& source, const Game& target);

DiffTensor diff_tensor(const Game& source, const Game& target);

enum class Condition { kSumPreserved, kStepInvariant };

/// The first failing equality found by check_equivalence.
///
/// kSumPreserved: the outcome sum at profiles[0] changed.
/// kStepInvariant: for `player`, the step along `axis` from profiles[0] to
/// profiles[1] changes that player's difference by a different amount than
/// the reference step from profiles[2] to profiles[3].
struct Violation {
  Condition condition = Condition::kSumPreserved;
  std::optional<std::size_t> player;
  std::optional<std::size_t> axis;
  std::vector<Profile> profiles;
};

struct EquivalenceVerdict {
  bool equivalent = true;
  std::optional<Violation> violation;
};

/// Decides whether `target` is reachable from `source` by some set of offers:
/// every outcome sum is preserved, and for each player the change in their
/// difference along any axis step is independent of the other coordinates.
EquivalenceVerdict check_equivalence(const Game& source, const Game& target);

/// One-line rendering such as "C2 at (1,2)->(2,2) vs (1,1)->(2,1) [player I, axis I]".
std::string describe_violation(const Game& game, const Violation& violation);

/// Thrown by operations that need equivalent games.
class NotEquivalentError : public Error {
 public:
  NotEquivalentError(EquivalenceVerdict verdict, const std::string& detail)
      : Error(ErrorKind::kNotEquivalent, detail), verdict_(std::move(verdict)) {}

  const EquivalenceVerdict& verdict() const { return verdict_; }

 private:
  EquivalenceVerdict verdict_;
};

}  // namespace preplay

#endif  // PREPLAY_CHARACTERIZE_HPP
