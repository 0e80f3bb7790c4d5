// replayspoof/feature_io.h

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

// RSFT feature container.
//
//   offset  size      field
//   0       4         magic "RSFT"
//   4       1         version (1)
//   5       4         F, rows (uint32 LE)
//   9       4         T, columns (uint32 LE)
//   13      4*F*T     values, row-major float32 LE
//   ...     4         optional trailer magic "META"
//           4         trailer length in bytes (uint32 LE)
//           n         "key=value\n" lines, keys sorted
//
// Spectrogram-like features store frequency rows x time columns. Cepstral
// FeatureMatrix values (frames x dim) are stored transposed, F = dim.

#ifndef REPLAYSPOOF_FEATURE_IO_H_
#define REPLAYSPOOF_FEATURE_IO_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "replayspoof/cepstral.h"
#include "replayspoof/types.h"

namespace replayspoof {

inline constexpr std::uint8_t kFeatureFormatVersion = 1;

struct FeatureDump {
  Matrix values;  // F x T
  std::map<std::string, std::string> metadata;
};

std::vector<std::uint8_t> EncodeFeatureDump(const FeatureDump &dump);
FeatureDump DecodeFeatureDump(std::span<const std::uint8_t> bytes,
                              const std::string &name);

void WriteFeatureDump(const std::filesystem::path &path, const FeatureDump &dump);
FeatureDump ReadFeatureDump(const std::filesystem::path &path);

/// Stores values transposed with metadata name/fingerprint.
FeatureDump ToDump(const FeatureMatrix &features);
/// Inverse of ToDump; name defaults to "unknown" when the trailer is absent.
FeatureMatrix FromDump(const FeatureDump &dump);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_FEATURE_IO_H_
