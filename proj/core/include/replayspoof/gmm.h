// replayspoof/gmm.h

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

#ifndef REPLAYSPOOF_GMM_H_
#define REPLAYSPOOF_GMM_H_

#include <cstdint>
#include <vector>

#include "replayspoof/types.h"

namespace replayspoof {

/// Diagonal-covariance Gaussian mixture. Frames are rows of a Matrix.
class GmmModel {
 public:
  /// weights: K, means/variances: K x D. Weights must be >= 0 and sum to 1
  /// within 1e-10; variances must be positive.
  GmmModel(Vector weights, Matrix means, Matrix variances);

  Index components() const { return means_.rows(); }
  Index dim() const { return means_.cols(); }
  const Vector &weights() const { return weights_; }
  const Matrix &means() const { return means_; }
  const Matrix &variances() const { return variances_; }

  /// N x K matrix of log(w_k) + log N(x_t | mu_k, diag var_k).
  Matrix ComponentLogLikelihoods(const Matrix &frames) const;
  /// Per-frame log p(x_t), log-sum-exp over components.
  Vector FrameLogLikelihoods(const Matrix &frames) const;
  /// N x K posteriors gamma_k(t); optionally also returns log p(x_t).
  Matrix Posteriors(const Matrix &frames, Vector *frame_loglik = nullptr) const;

 private:
  void CheckDim(const Matrix &frames) const;

  Vector weights_;
  Matrix means_;
  Matrix variances_;
  // Cached per-component constants for the quadratic form.
  Matrix inv_var_;
  Vector log_const_;
};

struct GmmTrainConfig {
  int components = 512;
  int iterations = 10;
  /// Variance floor as a fraction of the per-dimension global variance.
  double variance_floor_ratio = 1e-4;
  std::uint64_t seed = 0;
};

struct GmmTrainResult {
  GmmModel model;
  /// Average per-frame log-likelihood of the initial model and after every
  /// EM iteration (iterations + 1 entries).
  std::vector<double> loglik_history;
  int reseeded_components = 0;
};

/// EM from a seeded random start: k distinct frames as means, global
/// variance, uniform weights. Variances are floored in every M-step; a
/// component that loses all mass is re-seeded on the worst-explained frame.
GmmTrainResult GmmEmTrain(const Matrix &frames, const GmmTrainConfig &cfg);

/// Mean over frames of log sum_k w_k N(x | mu_k, var_k).
double GmmAvgLoglik(const GmmModel &model, const Matrix &frames);

/// Utterance score: GmmAvgLoglik(genuine) - GmmAvgLoglik(spoofed).
double LlrScore(const GmmModel &genuine, const GmmModel &spoofed,
                const Matrix &frames);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_GMM_H_
