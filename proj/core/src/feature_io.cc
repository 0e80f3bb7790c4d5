// feature_io.cc

// Copyright 2026  The replayspoof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "replayspoof/feature_io.h"

#include <limits>

#include "byte_io.h"
#include "replayspoof/error.h"

namespace replayspoof {

std::vector<std::uint8_t> EncodeFeatureDump(const FeatureDump &dump) {
  const Matrix &v = dump.values;
  if (v.rows() == 0 || v.cols() == 0)
    throw Error(ErrorCode::kInvalidArgument, "cannot encode an empty feature matrix");
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  if (static_cast<std::uint64_t>(v.rows()) > kMax ||
      static_cast<std::uint64_t>(v.cols()) > kMax)
    throw Error(ErrorCode::kInvalidArgument, "feature matrix too large for RSFT");
  ByteWriter out;
  out.Tag("RSFT");
  out.U8(kFeatureFormatVersion);
  out.U32(static_cast<std::uint32_t>(v.rows()));
  out.U32(static_cast<std::uint32_t>(v.cols()));
  for (Index r = 0; r < v.rows(); ++r)
    for (Index c = 0; c < v.cols(); ++c) out.F32(static_cast<float>(v(r, c)));
  if (!dump.metadata.empty()) {
    std::string text;
    for (const auto &[key, value] : dump.metadata) {
      if (key.find_first_of("=\n") != std::string::npos ||
          value.find('\n') != std::string::npos)
        throw Error(ErrorCode::kInvalidArgument,
                    "metadata key/value contains a reserved character: " + key);
      text += key + "=" + value + "\n";
    }
    out.Tag("META");
    out.U32(static_cast<std::uint32_t>(text.size()));
    out.Bytes(text);
  }
  return out.Take();
}

FeatureDump DecodeFeatureDump(std::span<const std::uint8_t> bytes,
                              const std::string &name) {
  ByteReader in(bytes);
  if (in.Tag() != "RSFT")
    throw Error(ErrorCode::kMalformedInput, name + ": bad RSFT magic");
  const std::uint8_t version = in.U8();
  if (version != kFeatureFormatVersion)
    throw Error(ErrorCode::kMalformedInput,
                name + ": unsupported RSFT version " + std::to_string(version));
  const std::uint32_t rows = in.U32();
  const std::uint32_t cols = in.U32();
  if (rows == 0 || cols == 0)
    throw Error(ErrorCode::kMalformedInput, name + ": empty RSFT matrix");
  if (in.remaining() / 4 / cols < rows)
    throw Error(ErrorCode::kTruncatedData, name + ": RSFT payload truncated");
  FeatureDump dump;
  dump.values.resize(rows, cols);
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) dump.values(r, c) = in.F32();
  if (in.remaining() > 0) {
    if (in.Tag() != "META")
      throw Error(ErrorCode::kMalformedInput, name + ": unknown RSFT trailer");
    const std::string text = in.Bytes(in.U32());
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::size_t end = text.find('\n', pos);
      const std::string line = text.substr(pos, end - pos);
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::kMalformedInput, name + ": bad metadata line");
      dump.metadata[line.substr(0, eq)] = line.substr(eq + 1);
      if (end == std::string::npos) break;
      pos = end + 1;
    }
  }
  return dump;
}

void WriteFeatureDump(const std::filesystem::path &path, const FeatureDump &dump) {
  WriteFileBytes(path, EncodeFeatureDump(dump));
}

FeatureDump ReadFeatureDump(const std::filesystem::path &path) {
  return DecodeFeatureDump(ReadFileBytes(path), path.string());
}

FeatureDump ToDump(const FeatureMatrix &features) {
  FeatureDump dump;
  dump.values = features.values().transpose();
  dump.metadata["name"] = features.name();
  if (!features.fingerprint().empty())
    dump.metadata["fingerprint"] = features.fingerprint();
  return dump;
}

FeatureMatrix FromDump(const FeatureDump &dump) {
  auto it = dump.metadata.find("name");
  auto fp = dump.metadata.find("fingerprint");
  return FeatureMatrix(dump.values.transpose(),
                       it == dump.metadata.end() ? "unknown" : it->second,
                       fp == dump.metadata.end() ? "" : fp->second);
}

}  // namespace replayspoof
