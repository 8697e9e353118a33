// Copyright 2026 The SmartEmbed Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace smartembed::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line (args[0] is the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a flat `key = value` file ('#' comments) into argv-style
/// `--key value` pairs for the options of `subcommand` that `args` does not
/// already set. Boolean flags take true/false.
std::vector<std::string> configArguments(const std::string& configText, const std::vector<std::string>& args,
                                         const std::vector<std::string>& valueOptions,
                                         const std::vector<std::string>& flagOptions);

}  // namespace smartembed::cli
