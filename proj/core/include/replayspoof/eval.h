// replayspoof/eval.h

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

#ifndef REPLAYSPOOF_EVAL_H_
#define REPLAYSPOOF_EVAL_H_

#include <span>
#include <vector>

namespace replayspoof {

/// Higher scores mean "more genuine". At threshold t a spoof trial is
/// falsely accepted when its score >= t and a genuine trial is falsely
/// rejected when its score < t.
struct DetPoint {
  double far = 0.0;
  double frr = 0.0;
  double threshold = 0.0;
};

/// One point per distinct score value in ascending threshold order, plus a
/// final point just above the largest score (far 0, frr 1). The first point
/// is always (far 1, frr 0).
std::vector<DetPoint> DetPoints(std::span<const double> genuine,
                                std::span<const double> spoof);

struct EerResult {
  double eer = 0.0;
  double threshold = 0.0;
};

/// Equal error rate from linear interpolation between the two adjacent DET
/// points where frr - far changes sign. If some point has far == frr the
/// first such point is returned as is.
EerResult ComputeEer(std::span<const double> genuine, std::span<const double> spoof);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_EVAL_H_
