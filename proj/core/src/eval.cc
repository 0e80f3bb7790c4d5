// eval.cc

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

#include "replayspoof/eval.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "replayspoof/error.h"

namespace replayspoof {

namespace {

void CheckScores(std::span<const double> genuine, std::span<const double> spoof) {
  if (genuine.empty() || spoof.empty())
    throw Error(ErrorCode::kSingleClass,
                "evaluation needs at least one genuine and one spoof score");
  for (double v : genuine)
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFinite, "non-finite genuine score");
  for (double v : spoof)
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFinite, "non-finite spoof score");
}

}  // namespace

std::vector<DetPoint> DetPoints(std::span<const double> genuine,
                                std::span<const double> spoof) {
  CheckScores(genuine, spoof);
  std::vector<double> g(genuine.begin(), genuine.end());
  std::vector<double> s(spoof.begin(), spoof.end());
  std::sort(g.begin(), g.end());
  std::sort(s.begin(), s.end());
  std::vector<double> thresholds;
  thresholds.reserve(g.size() + s.size() + 1);
  std::merge(g.begin(), g.end(), s.begin(), s.end(), std::back_inserter(thresholds));
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  thresholds.push_back(
      std::nextafter(thresholds.back(), std::numeric_limits<double>::infinity()));

  const double ng = static_cast<double>(g.size());
  const double ns = static_cast<double>(s.size());
  std::vector<DetPoint> out;
  out.reserve(thresholds.size());
  std::size_t gi = 0, si = 0;  // counts of scores strictly below t
  for (double t : thresholds) {
    while (gi < g.size() && g[gi] < t) ++gi;
    while (si < s.size() && s[si] < t) ++si;
    out.push_back({(ns - static_cast<double>(si)) / ns, static_cast<double>(gi) / ng, t});
  }
  return out;
}

EerResult ComputeEer(std::span<const double> genuine, std::span<const double> spoof) {
  const std::vector<DetPoint> det = DetPoints(genuine, spoof);
  for (std::size_t i = 0; i < det.size(); ++i) {
    const double d = det[i].frr - det[i].far;
    if (d < 0.0) continue;
    if (d == 0.0 || i == 0) return {det[i].far, det[i].threshold};
    const DetPoint &a = det[i - 1];
    const DetPoint &b = det[i];
    const double da = a.frr - a.far;  // < 0
    const double lambda = -da / (d - da);
    return {a.far + lambda * (b.far - a.far),
            a.threshold + lambda * (b.threshold - a.threshold)};
  }
  // Unreachable: the last point always has frr - far = 1.
  return {det.back().far, det.back().threshold};
}

}  // namespace replayspoof
