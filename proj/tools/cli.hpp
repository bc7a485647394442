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

#ifndef CFTUTTE_TOOLS_CLI_HPP
#define CFTUTTE_TOOLS_CLI_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace cft::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kOracleMismatch = 4;

// Runs the command line `args` (without the program name). `in` backs the
// "-" file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cft::cli

#endif  // CFTUTTE_TOOLS_CLI_HPP
