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

#ifndef PREPLAY_CLI_HPP
#define PREPLAY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace preplay::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFailure = 1;
inline constexpr int kExitInputFailure = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Returns 0, 1 (domain failure) or 2 (bad input).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace preplay::cli

#endif  // PREPLAY_CLI_HPP
