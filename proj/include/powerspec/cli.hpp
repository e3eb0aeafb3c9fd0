// Copyright 2026 The powerspec Authors
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


#ifndef POWERSPEC_CLI_HPP_
#define POWERSPEC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace powerspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFalsified = 2;

// Entry point of the powerspec tool. args excludes the program name. Data
// goes to out (or the --output file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powerspec::cli

#endif  // POWERSPEC_CLI_HPP_
