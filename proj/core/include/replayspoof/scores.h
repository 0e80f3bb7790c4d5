// replayspoof/scores.h

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

#ifndef REPLAYSPOOF_SCORES_H_
#define REPLAYSPOOF_SCORES_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace replayspoof {

/// Ordered (trial_id, score) pairs with unique ids and finite scores.
class ScoreSet {
 public:
  ScoreSet() = default;

  /// Throws kDuplicateId or kNonFinite.
  void Add(std::string trial_id, double score);

  const std::vector<std::pair<std::string, double>> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::optional<double> Find(std::string_view trial_id) const;

 private:
  std::vector<std::pair<std::string, double>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One "trial_id score" pair per non-blank line. Errors name the line.
ScoreSet ParseScores(std::string_view text, std::string_view source = "<scores>");
/// Writes scores with 17 significant digits.
std::string FormatScores(const ScoreSet &set);

ScoreSet ReadScores(const std::filesystem::path &path);
void WriteScores(const ScoreSet &set, const std::filesystem::path &path);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_SCORES_H_
