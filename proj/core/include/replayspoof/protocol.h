// replayspoof/protocol.h

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

#ifndef REPLAYSPOOF_PROTOCOL_H_
#define REPLAYSPOOF_PROTOCOL_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace replayspoof {

enum class Label { kGenuine, kSpoof, kUnknown };

/// "genuine", "spoof" or "unknown".
std::string_view LabelName(Label label);
std::optional<Label> ParseLabel(std::string_view token);

/// One protocol line:
///   trial_id label speaker_id phrase_id environment playback recording
/// Optional tags are empty when the file has "-".
struct Trial {
  std::string trial_id;
  Label label = Label::kUnknown;
  std::string speaker_id;
  std::string phrase_id;
  std::string environment;
  std::string playback;
  std::string recording;

  bool operator==(const Trial &) const = default;
};

std::vector<Trial> ParseProtocol(std::string_view text,
                                 std::string_view source = "<protocol>");
std::vector<Trial> ReadProtocol(const std::filesystem::path &path);
std::string FormatProtocol(const std::vector<Trial> &trials);
void WriteProtocol(const std::vector<Trial> &trials, const std::filesystem::path &path);

/// Buckets keyed by phrase_id, each in input order.
std::map<std::string, std::vector<Trial>> PartitionByPhrase(const std::vector<Trial> &trials);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_PROTOCOL_H_
