// replayspoof/fusion.h

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

#ifndef REPLAYSPOOF_FUSION_H_
#define REPLAYSPOOF_FUSION_H_

#include <span>
#include <vector>

#include "replayspoof/types.h"

namespace replayspoof {

/// Fused score = weights' s + offset.
struct FusionModel {
  Vector weights;
  double offset = 0.0;
};

struct FusionTrainConfig {
  /// Penalty 0.5 * l2 * |w|^2 on the weights (the offset is not penalized).
  double l2 = 1e-6;
  /// Weight each class by N / (2 N_class) instead of 1.
  bool balance_classes = false;
  double gradient_tolerance = 1e-8;
  int max_iterations = 200;
};

struct FusionTrainResult {
  FusionModel model;
  /// Loss at the start and after every accepted step.
  std::vector<double> loss_history;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Loss = (1/N) sum_i c_i log(1 + exp(-y_i (w's_i + b))) + 0.5 l2 |w|^2.
/// scores is trials x systems; labels are +1 genuine, -1 spoof.
double FusionLoss(const FusionModel &model, const Matrix &scores,
                  std::span<const int> labels, const FusionTrainConfig &cfg);

/// Minimizes FusionLoss by Newton steps with backtracking line search, so
/// the loss never increases between iterations.
FusionTrainResult FusionTrain(const Matrix &scores, std::span<const int> labels,
                              const FusionTrainConfig &cfg = {});

double FusionApply(const FusionModel &model, std::span<const double> scores);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_FUSION_H_
