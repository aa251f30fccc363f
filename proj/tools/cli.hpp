// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MHOM_TOOLS_CLI_HPP_
#define MHOM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mhom::cli {

// Exit codes: 0 the property holds, 1 valid input but the property fails,
// 2 invalid input or a guard was hit.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kInvalid = 2;

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mhom::cli

#endif  // MHOM_TOOLS_CLI_HPP_
