// replayspoof/svm.h

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

#ifndef REPLAYSPOOF_SVM_H_
#define REPLAYSPOOF_SVM_H_

#include <span>
#include <vector>

#include "replayspoof/types.h"

namespace replayspoof {

struct SvmModel {
  Vector weight;
  double bias = 0.0;
};

struct SvmTrainConfig {
  double c = 1.0;
  /// Stop when primal - dual <= tolerance * (primal + 1).
  double tolerance = 1e-6;
  int max_epochs = 100000;
  /// The bias is learned as the weight of a constant feature of this value,
  /// so it is regularized together with the weights.
  double bias_feature = 1.0;
};

struct SvmTrainResult {
  SvmModel model;
  /// Dual objective 0.5 |w|^2 - sum alpha (minimized) after each epoch.
  std::vector<double> dual_objective_history;
  double primal = 0.0;
  double dual = 0.0;
  int epochs = 0;
  bool converged = false;
};

/// L2-regularized hinge-loss linear SVM by dual coordinate descent in fixed
/// index order. Rows of x are samples; labels are +1 (genuine) or -1 (spoof).
/// primal = 0.5 |w~|^2 + c sum max(0, 1 - y w~'x~), with x~ = [x, bias_feature].
SvmTrainResult SvmTrainLinear(const Matrix &x, std::span<const int> y,
                              const SvmTrainConfig &cfg = {});

/// Primal objective of a model on a dataset, same conventions as training.
double SvmPrimalObjective(const SvmModel &model, const Matrix &x,
                          std::span<const int> y, double c, double bias_feature = 1.0);

/// w'v + b.
double SvmScore(const SvmModel &model, const Vector &v);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_SVM_H_
