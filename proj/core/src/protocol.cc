// protocol.cc

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

#include "replayspoof/protocol.h"

#include <unordered_map>

#include "byte_io.h"
#include "replayspoof/error.h"
#include "text_util.h"

namespace replayspoof {

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kGenuine: return "genuine";
    case Label::kSpoof: return "spoof";
    case Label::kUnknown: return "unknown";
  }
  return "unknown";
}

std::optional<Label> ParseLabel(std::string_view token) {
  if (token == "genuine") return Label::kGenuine;
  if (token == "spoof") return Label::kSpoof;
  if (token == "unknown") return Label::kUnknown;
  return std::nullopt;
}

namespace {

std::string Tag(std::string_view field) {
  return field == "-" ? std::string() : std::string(field);
}

std::string_view Field(const std::string &value) {
  return value.empty() ? std::string_view("-") : std::string_view(value);
}

}  // namespace

std::vector<Trial> ParseProtocol(std::string_view text, std::string_view source) {
  std::vector<Trial> trials;
  std::unordered_map<std::string, std::size_t> first_line;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    const std::vector<std::string_view> f = SplitWhitespace(line);
    if (f.empty()) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (f.size() != 7)
      throw Error(ErrorCode::kMalformedInput,
                  where + ": expected 7 fields, got " + std::to_string(f.size()));
    const std::optional<Label> label = ParseLabel(f[1]);
    if (!label)
      throw Error(ErrorCode::kMalformedInput,
                  where + ": unknown label '" + std::string(f[1]) + "'");
    Trial t{std::string(f[0]), *label, Tag(f[2]), Tag(f[3]), Tag(f[4]), Tag(f[5]), Tag(f[6])};
    if (const auto it = first_line.find(t.trial_id); it != first_line.end())
      throw Error(ErrorCode::kDuplicateId,
                  where + ": duplicate trial id '" + t.trial_id +
                      "' (first seen on line " + std::to_string(it->second) + ")");
    first_line.emplace(t.trial_id, line_no);
    trials.push_back(std::move(t));
  }
  return trials;
}

std::vector<Trial> ReadProtocol(const std::filesystem::path &path) {
  const std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  return ParseProtocol(
      std::string_view(reinterpret_cast<const char *>(bytes.data()), bytes.size()),
      path.string());
}

std::string FormatProtocol(const std::vector<Trial> &trials) {
  std::string out;
  for (const Trial &t : trials) {
    out.append(t.trial_id).append(" ").append(LabelName(t.label));
    for (const std::string *s :
         {&t.speaker_id, &t.phrase_id, &t.environment, &t.playback, &t.recording})
      out.append(" ").append(Field(*s));
    out.push_back('\n');
  }
  return out;
}

void WriteProtocol(const std::vector<Trial> &trials, const std::filesystem::path &path) {
  const std::string text = FormatProtocol(trials);
  WriteFileBytes(path, std::span<const std::uint8_t>(
                           reinterpret_cast<const std::uint8_t *>(text.data()), text.size()));
}

std::map<std::string, std::vector<Trial>> PartitionByPhrase(
    const std::vector<Trial> &trials) {
  std::map<std::string, std::vector<Trial>> buckets;
  for (const Trial &t : trials) buckets[t.phrase_id].push_back(t);
  return buckets;
}

}  // namespace replayspoof
