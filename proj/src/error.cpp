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

#include "preplay/error.hpp"

namespace preplay {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateName: return "DuplicateName";
    case ErrorKind::kMissingOutcome: return "MissingOutcome";
    case ErrorKind::kDuplicateOutcome: return "DuplicateOutcome";
    case ErrorKind::kArityMismatch: return "ArityMismatch";
    case ErrorKind::kInvalidShape: return "InvalidShape";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kUnknownPlayer: return "UnknownPlayer";
    case ErrorKind::kUnknownStrategy: return "UnknownStrategy";
    case ErrorKind::kSelfOffer: return "SelfOffer";
    case ErrorKind::kNegativeAmount: return "NegativeAmount";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kNameMismatch: return "NameMismatch";
    case ErrorKind::kNotEquivalent: return "NotEquivalent";
    case ErrorKind::kIncompleteSeed: return "IncompleteSeed";
    case ErrorKind::kOffStarSeed: return "OffStarSeed";
    case ErrorKind::kSeedSumViolation: return "SeedSumViolation";
    case ErrorKind::kInvalidProfile: return "InvalidProfile";
    case ErrorKind::kNonpositiveMargin: return "NonpositiveMargin";
  }
  return "Unknown";
}

}  // namespace preplay
