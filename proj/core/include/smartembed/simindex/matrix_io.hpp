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

#include "smartembed/simindex/matrix.hpp"

namespace smartembed::simindex {

inline constexpr std::uint32_t kMatrixFormatVersion = 1;

void writeMatrix(const EmbeddingMatrix& m, std::ostream& out);
/// Throws IoError on short or corrupt input, FormatVersionMismatch otherwise.
EmbeddingMatrix readMatrix(std::istream& in);

void saveMatrix(const EmbeddingMatrix& m, const std::filesystem::path& path);
EmbeddingMatrix loadMatrix(const std::filesystem::path& path);

}  // namespace smartembed::simindex
