// scores.cc

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

#include "replayspoof/scores.h"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "byte_io.h"
#include "replayspoof/error.h"
#include "text_util.h"

namespace replayspoof {

void ScoreSet::Add(std::string trial_id, double score) {
  if (!std::isfinite(score))
    throw Error(ErrorCode::kNonFinite, "score for '" + trial_id + "' is not finite");
  if (index_.count(trial_id))
    throw Error(ErrorCode::kDuplicateId, "duplicate trial id '" + trial_id + "'");
  index_.emplace(trial_id, entries_.size());
  entries_.emplace_back(std::move(trial_id), score);
}

std::optional<double> ScoreSet::Find(std::string_view trial_id) const {
  const auto it = index_.find(std::string(trial_id));
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].second;
}

ScoreSet ParseScores(std::string_view text, std::string_view source) {
  ScoreSet set;
  std::unordered_map<std::string, std::size_t> first_line;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    const std::vector<std::string_view> fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (fields.size() != 2)
      throw Error(ErrorCode::kMalformedInput,
                  where + ": expected 'trial_id score', got " +
                      std::to_string(fields.size()) + " fields");
    const std::optional<double> value = ParseDouble(fields[1]);
    if (!value)
      throw Error(ErrorCode::kMalformedInput,
                  where + ": cannot parse score '" + std::string(fields[1]) + "'");
    std::string id(fields[0]);
    if (const auto it = first_line.find(id); it != first_line.end())
      throw Error(ErrorCode::kDuplicateId,
                  where + ": duplicate trial id '" + id + "' (first seen on line " +
                      std::to_string(it->second) + ")");
    if (!std::isfinite(*value))
      throw Error(ErrorCode::kNonFinite, where + ": score is not finite");
    first_line.emplace(id, line_no);
    set.Add(std::move(id), *value);
  }
  return set;
}

std::string FormatScores(const ScoreSet &set) {
  std::string out;
  char buf[64];
  for (const auto &[id, score] : set.entries()) {
    std::snprintf(buf, sizeof(buf), "%.17g", score);
    out += id;
    out += ' ';
    out += buf;
    out += '\n';
  }
  return out;
}

ScoreSet ReadScores(const std::filesystem::path &path) {
  const std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  return ParseScores(std::string_view(reinterpret_cast<const char *>(bytes.data()),
                                      bytes.size()),
                     path.string());
}

void WriteScores(const ScoreSet &set, const std::filesystem::path &path) {
  const std::string text = FormatScores(set);
  WriteFileBytes(path, std::span<const std::uint8_t>(
                           reinterpret_cast<const std::uint8_t *>(text.data()), text.size()));
}

}  // namespace replayspoof
