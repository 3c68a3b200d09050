// Copyright 2026 The tricover Authors
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

#ifndef TRICOVER_TOOLS_CLI_HPP_
#define TRICOVER_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tricover::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

// Environment variable naming the directory searched for relative inputs.
inline constexpr const char* kDataDirEnv = "TRICOVER_DATA_DIR";

/// Runs one command line. args[0] is the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tricover::cli

#endif  // TRICOVER_TOOLS_CLI_HPP_
