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

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>

#include "smartembed/embedding/model.hpp"

namespace smartembed::embedding {

inline constexpr std::uint32_t kModelFormatVersion = 1;

void writeModel(const EmbeddingModel& model, std::ostream& out);
/// Throws IoError on short or corrupt input, FormatVersionMismatch on a
/// version other than kModelFormatVersion.
EmbeddingModel readModel(std::istream& in);

void saveModel(const EmbeddingModel& model, const std::filesystem::path& path);
EmbeddingModel loadModel(const std::filesystem::path& path);

}  // namespace smartembed::embedding
