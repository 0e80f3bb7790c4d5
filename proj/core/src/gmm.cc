// gmm.cc

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

#include "replayspoof/gmm.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "replayspoof/error.h"
#include "seeding.h"

namespace replayspoof {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)

std::string Shape(Index r, Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

GmmModel::GmmModel(Vector weights, Matrix means, Matrix variances)
    : weights_(std::move(weights)),
      means_(std::move(means)),
      variances_(std::move(variances)) {
  const Index k = means_.rows();
  if (k < 1 || means_.cols() < 1)
    throw Error(ErrorCode::kInvalidArgument, "GMM needs >= 1 component and dim");
  if (weights_.size() != k || variances_.rows() != k ||
      variances_.cols() != means_.cols())
    throw Error(ErrorCode::kShapeMismatch,
                "GMM weights/means/variances shapes disagree: " +
                    std::to_string(weights_.size()) + ", " +
                    Shape(means_.rows(), means_.cols()) + ", " +
                    Shape(variances_.rows(), variances_.cols()));
  if (!weights_.allFinite() || !means_.allFinite() || !variances_.allFinite())
    throw Error(ErrorCode::kNonFinite, "GMM parameters must be finite");
  if ((weights_.array() < 0).any() || std::abs(weights_.sum() - 1.0) > 1e-10)
    throw Error(ErrorCode::kInvalidArgument,
                "GMM weights must be non-negative and sum to 1");
  if ((variances_.array() <= 0).any())
    throw Error(ErrorCode::kInvalidArgument, "GMM variances must be positive");
  inv_var_ = variances_.cwiseInverse();
  log_const_.resize(k);
  for (Index c = 0; c < k; ++c) {
    log_const_(c) = std::log(weights_(c)) -
                    0.5 * (dim() * kLog2Pi + variances_.row(c).array().log().sum() +
                           (means_.row(c).array().square() * inv_var_.row(c).array()).sum());
  }
}

void GmmModel::CheckDim(const Matrix &frames) const {
  if (frames.cols() != dim())
    throw Error(ErrorCode::kShapeMismatch,
                "frames have dimension " + std::to_string(frames.cols()) +
                    " but the GMM expects " + std::to_string(dim()));
  if (frames.rows() < 1)
    throw Error(ErrorCode::kInvalidArgument, "no frames to score");
}

Matrix GmmModel::ComponentLogLikelihoods(const Matrix &frames) const {
  CheckDim(frames);
  // -0.5 sum_d (x - mu)^2 / var = -0.5 x^2.iv + x.(mu iv) - 0.5 mu^2.iv
  Matrix ll = frames.array().square().matrix() * inv_var_.transpose() * -0.5;
  ll.noalias() += frames * means_.cwiseProduct(inv_var_).transpose();
  ll.rowwise() += log_const_.transpose();
  return ll;
}

Matrix GmmModel::Posteriors(const Matrix &frames, Vector *frame_loglik) const {
  Matrix ll = ComponentLogLikelihoods(frames);
  Vector total(ll.rows());
  for (Index t = 0; t < ll.rows(); ++t) {
    const double peak = ll.row(t).maxCoeff();
    ll.row(t) = (ll.row(t).array() - peak).exp().matrix();
    const double sum = ll.row(t).sum();
    ll.row(t) /= sum;
    total(t) = peak + std::log(sum);
  }
  if (frame_loglik) *frame_loglik = std::move(total);
  return ll;
}

Vector GmmModel::FrameLogLikelihoods(const Matrix &frames) const {
  const Matrix ll = ComponentLogLikelihoods(frames);
  Vector total(ll.rows());
  for (Index t = 0; t < ll.rows(); ++t) {
    const double peak = ll.row(t).maxCoeff();
    total(t) = peak + std::log((ll.row(t).array() - peak).exp().sum());
  }
  return total;
}

double GmmAvgLoglik(const GmmModel &model, const Matrix &frames) {
  return model.FrameLogLikelihoods(frames).mean();
}

double LlrScore(const GmmModel &genuine, const GmmModel &spoofed,
                const Matrix &frames) {
  if (genuine.dim() != spoofed.dim())
    throw Error(ErrorCode::kShapeMismatch, "LLR models have different dimensions");
  return GmmAvgLoglik(genuine, frames) - GmmAvgLoglik(spoofed, frames);
}

GmmTrainResult GmmEmTrain(const Matrix &frames, const GmmTrainConfig &cfg) {
  const Index n = frames.rows();
  const Index dim = frames.cols();
  const Index k = cfg.components;
  if (k < 1 || cfg.iterations < 0 || !(cfg.variance_floor_ratio > 0))
    throw Error(ErrorCode::kInvalidArgument,
                "GMM training needs components >= 1, iterations >= 0 and a "
                "positive variance floor");
  if (dim < 1) throw Error(ErrorCode::kInvalidArgument, "frames have no dimensions");
  if (n < k)
    throw Error(ErrorCode::kInvalidArgument,
                "GMM training needs at least as many frames (" + std::to_string(n) +
                    ") as components (" + std::to_string(k) + ")");
  if (!frames.allFinite())
    throw Error(ErrorCode::kNonFinite, "training frames contain non-finite values");

  const Vector global_mean = frames.colwise().mean();
  const Vector global_var =
      (frames.rowwise() - global_mean.transpose()).array().square().colwise().mean();
  const Vector floor =
      (global_var * cfg.variance_floor_ratio).cwiseMax(1e-10);
  const Vector start_var = global_var.cwiseMax(floor);

  // Seeding by squared-distance sampling: the first mean is a uniformly drawn
  // frame, each further mean a frame drawn with probability proportional to
  // its squared distance from the nearest mean chosen so far.
  std::mt19937_64 rng(DeriveSeed(cfg.seed, 0x6d6dULL));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix means(k, dim);
  Vector nearest = Vector::Constant(n, std::numeric_limits<double>::infinity());
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  for (Index c = 0; c < k; ++c) {
    Index pick = 0;
    const double total = c == 0 ? 0.0 : nearest.sum();
    if (total > 0.0 && std::isfinite(total)) {
      const double target = unit(rng) * total;
      double acc = 0.0;
      pick = -1;
      for (Index i = 0; i < n; ++i) {
        acc += nearest(i);
        if (nearest(i) > 0.0 && acc >= target) {
          pick = i;
          break;
        }
      }
      if (pick < 0)
        for (Index i = n - 1; i >= 0; --i)
          if (nearest(i) > 0.0) {
            pick = i;
            break;
          }
    } else {
      // Uniform over frames not yet used.
      std::vector<Index> free;
      for (Index i = 0; i < n; ++i)
        if (!taken[static_cast<std::size_t>(i)]) free.push_back(i);
      std::uniform_int_distribution<std::size_t> any(0, free.size() - 1);
      pick = free[any(rng)];
    }
    taken[static_cast<std::size_t>(pick)] = 1;
    means.row(c) = frames.row(pick);
    nearest = nearest.cwiseMin((frames.rowwise() - means.row(c)).rowwise().squaredNorm());
  }
  Matrix vars = start_var.transpose().replicate(k, 1);
  Vector weights = Vector::Constant(k, 1.0 / static_cast<double>(k));

  GmmModel model(weights, means, vars);
  std::vector<double> history;
  int reseeded = 0;
  const Matrix squares = frames.array().square().matrix();
  for (int iter = 0; iter < cfg.iterations; ++iter) {
    Vector frame_ll;
    const Matrix post = model.Posteriors(frames, &frame_ll);
    history.push_back(frame_ll.mean());

    const Vector occ = post.colwise().sum();
    const Matrix first = post.transpose() * frames;    // K x D
    const Matrix second = post.transpose() * squares;  // K x D
    for (Index c = 0; c < k; ++c) {
      if (occ(c) < 1e-10) {
        Index worst = 0;
        frame_ll.minCoeff(&worst);
        means.row(c) = frames.row(worst);
        vars.row(c) = start_var.transpose();
        weights(c) = 1.0 / static_cast<double>(n);
        ++reseeded;
        continue;
      }
      means.row(c) = first.row(c) / occ(c);
      vars.row(c) = (second.row(c) / occ(c) - means.row(c).cwiseAbs2())
                        .cwiseMax(floor.transpose());
      weights(c) = occ(c) / static_cast<double>(n);
    }
    weights /= weights.sum();
    model = GmmModel(weights, means, vars);
  }
  history.push_back(GmmAvgLoglik(model, frames));
  return {std::move(model), std::move(history), reseeded};
}

}  // namespace replayspoof
