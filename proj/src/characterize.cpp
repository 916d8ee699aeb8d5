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

#include "preplay/characterize.hpp"

#include <algorithm>

namespace preplay {

DiffTensor::DiffTensor(GameShape shape, std::vector<Rational> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  if (values_.size() != shape_.profile_count() * shape_.player_count()) {
    throw Error(ErrorKind::kArityMismatch, "difference tensor size does not match its shape");
  }
}

const Rational& DiffTensor::at(const Profile& profile, std::size_t player) const {
  if (!shape_.contains(profile) || player >= shape_.player_count()) {
    throw Error(ErrorKind::kIndexOutOfRange, "no difference at " + format_profile(profile));
  }
  return values_[shape_.flat_index(profile) * shape_.player_count() + player];
}

void require_comparable(const Game& source, const Game& target) {
  if (source.shape() != target.shape()) {
    throw Error(ErrorKind::kShapeMismatch, "games have different dimensions");
  }
  if (!source.same_names(target)) {
    throw Error(ErrorKind::kNameMismatch, "games use different player or strategy names");
  }
}

DiffTensor diff_tensor(const Game& source, const Game& target) {
  require_comparable(source, target);
  const auto& a = source.payoff_table();
  const auto& b = target.payoff_table();
  std::vector<Rational> values(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) values[i] = b[i] - a[i];
  return DiffTensor(source.shape(), std::move(values));
}

EquivalenceVerdict check_equivalence(const Game& source, const Game& target) {
  require_comparable(source, target);
  const GameShape& shape = source.shape();
  shape.require_transformable();
  const std::size_t n = shape.player_count();

  Profile profile(n, 0);
  do {
    if (source.payoff_sum(profile) != target.payoff_sum(profile)) {
      return {false, Violation{Condition::kSumPreserved, std::nullopt, std::nullopt, {profile}}};
    }
  } while (shape.next(profile));

  const DiffTensor diff = diff_tensor(source, target);
  for (std::size_t player = 0; player < n; ++player) {
    for (std::size_t axis = 0; axis < n; ++axis) {
      if (shape.strategy_count(axis) < 2) continue;
      std::fill(profile.begin(), profile.end(), 0);
      do {
        if (profile[axis] + 1 >= shape.strategy_count(axis)) continue;
        Profile stepped = profile;
        ++stepped[axis];
        // Reference: the same step taken with every other coordinate at its first strategy.
        Profile ref(n, 0);
        ref[axis] = profile[axis];
        if (ref == profile) continue;
        Profile ref_stepped = ref;
        ++ref_stepped[axis];
        const Rational step = diff.at(stepped, player) - diff.at(profile, player);
        const Rational ref_step = diff.at(ref_stepped, player) - diff.at(ref, player);
        if (step != ref_step) {
          return {false, Violation{Condition::kStepInvariant, player, axis,
                                   {profile, stepped, ref, ref_stepped}}};
        }
      } while (shape.next(profile));
    }
  }
  return {true, std::nullopt};
}

std::string describe_violation(const Game& game, const Violation& violation) {
  if (violation.condition == Condition::kSumPreserved) {
    return "C1 at " + format_profile(violation.profiles.at(0));
  }
  const auto& p = violation.profiles;
  return "C2 at " + format_profile(p.at(0)) + "->" + format_profile(p.at(1)) + " vs " +
         format_profile(p.at(2)) + "->" + format_profile(p.at(3)) + " [player " +
         game.player_name(*violation.player) + ", axis " + game.player_name(*violation.axis) + "]";
}

}  // namespace preplay
