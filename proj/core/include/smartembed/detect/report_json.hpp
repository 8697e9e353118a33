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

#include <string>
#include <string_view>

#include "smartembed/detect/detector.hpp"

namespace smartembed::detect {

/// JSON forms of the detection reports, as printed by `--json`. The
/// *FromJson functions invert them and throw InvalidArgument on bad input.
std::string cloneReportToJson(const CloneReport& report);
CloneReport cloneReportFromJson(std::string_view json);

std::string bugReportToJson(const BugReport& report, bool includeAllMatches = false);
BugReport bugReportFromJson(std::string_view json);

/// Pair entries also carry the row ids of `corpus`.
std::string clonePairsToJson(const ClonePairsResult& result, const simindex::EmbeddingMatrix& corpus);
ClonePairsResult clonePairsFromJson(std::string_view json);

}  // namespace smartembed::detect
