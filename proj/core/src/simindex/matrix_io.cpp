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

#include "smartembed/simindex/matrix_io.hpp"

#include <algorithm>
#include <fstream>

#include "smartembed/error.hpp"
#include "util/binary_io.hpp"

namespace smartembed::simindex {

namespace {

constexpr char kMagic[4] = {'S', 'E', 'M', 'X'};

}  // namespace

void writeMatrix(const EmbeddingMatrix& m, std::ostream& out) {
  util::BinaryWriter w(out);
  w.bytes(kMagic, 4);
  w.u32(kMatrixFormatVersion);
  w.u64(m.size());
  w.u32(static_cast<std::uint32_t>(m.dim()));
  for (const RowMeta& meta : m.metas()) {
    w.str(meta.id);
    w.u8(static_cast<std::uint8_t>(meta.granularity));
    w.str(meta.sourceRef);
    w.str(meta.label);
    w.str(meta.link);
    w.u32(meta.lineCount);
  }
  w.floats(m.rowData().data(), m.rowData().size());
  w.floats(m.norms().data(), m.norms().size());
}

EmbeddingMatrix readMatrix(std::istream& in) {
  util::BinaryReader r(in, "matrix");
  char magic[4];
  r.bytes(magic, 4);
  if (!std::equal(magic, magic + 4, kMagic)) throw IoError("matrix: not a SmartEmbed matrix file");
  const std::uint32_t version = r.u32();
  if (version != kMatrixFormatVersion) throw FormatVersionMismatch(kMatrixFormatVersion, version);
  const std::size_t n = r.count(r.u64(), 1ull << 32);
  const std::size_t d = r.count(r.u32(), 1u << 16);

  std::vector<RowMeta> meta(n);
  for (RowMeta& row : meta) {
    row.id = r.str();
    const std::uint8_t g = r.u8();
    if (g > static_cast<std::uint8_t>(frontend::Granularity::Statement)) {
      throw IoError("matrix: corrupt granularity");
    }
    row.granularity = static_cast<frontend::Granularity>(g);
    row.sourceRef = r.str();
    row.label = r.str();
    row.link = r.str();
    row.lineCount = r.u32();
  }
  std::vector<float> rows(n * d);
  r.floats(rows.data(), rows.size());
  std::vector<float> norms(n);
  r.floats(norms.data(), norms.size());
  r.expectEnd();
  try {
    return EmbeddingMatrix(d, std::move(rows), std::move(meta), std::move(norms));
  } catch (const Error& e) {
    throw IoError(std::string("matrix: ") + e.what());
  }
}

void saveMatrix(const EmbeddingMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  writeMatrix(m, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

EmbeddingMatrix loadMatrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return readMatrix(in);
}

}  // namespace smartembed::simindex
