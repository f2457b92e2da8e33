// Copyright 2026 The swarmpath Authors.
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

#ifndef SWARMPATH_TOOLS_CLI_H_
#define SWARMPATH_TOOLS_CLI_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace swarmpath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitStrictFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `swarmpath` tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// FNV-1a 64 of a file's bytes, as 16 hex digits.
std::string file_hash(const std::filesystem::path& path);

}  // namespace swarmpath::cli

#endif  // SWARMPATH_TOOLS_CLI_H_
