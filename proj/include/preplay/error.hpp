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

#ifndef PREPLAY_ERROR_HPP
#define PREPLAY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace preplay {

enum class ErrorKind {
  kDuplicateName,
  kMissingOutcome,
  kDuplicateOutcome,
  kArityMismatch,
  kInvalidShape,
  kIndexOutOfRange,
  kUnknownPlayer,
  kUnknownStrategy,
  kSelfOffer,
  kNegativeAmount,
  kShapeMismatch,
  kNameMismatch,
  kNotEquivalent,
  kIncompleteSeed,
  kOffStarSeed,
  kSeedSumViolation,
  kInvalidProfile,
  kNonpositiveMargin,
};

std::string_view to_string(ErrorKind kind);

/// Every domain failure in the library is reported as an Error carrying
/// its kind; the message is meant for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace preplay

#endif  // PREPLAY_ERROR_HPP
