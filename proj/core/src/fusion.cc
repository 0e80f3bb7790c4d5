// fusion.cc

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

#include "replayspoof/fusion.h"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>

#include "replayspoof/error.h"

namespace replayspoof {

namespace {

// log(1 + exp(z)) without overflow.
double Softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

Vector SampleWeights(std::span<const int> labels, const FusionTrainConfig &cfg) {
  const Index n = static_cast<Index>(labels.size());
  Vector c = Vector::Ones(n);
  if (!cfg.balance_classes) return c;
  double pos = 0;
  for (int y : labels) pos += (y == 1);
  const double neg = static_cast<double>(n) - pos;
  for (Index i = 0; i < n; ++i)
    c(i) = static_cast<double>(n) / (2.0 * (labels[i] == 1 ? pos : neg));
  return c;
}

void CheckInputs(const Matrix &scores, std::span<const int> labels) {
  if (scores.cols() < 1)
    throw Error(ErrorCode::kInvalidArgument, "fusion needs at least one subsystem");
  if (static_cast<Index>(labels.size()) != scores.rows())
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(labels.size()) + " labels for " +
                    std::to_string(scores.rows()) + " trials");
  if (!scores.allFinite())
    throw Error(ErrorCode::kNonFinite, "fusion scores contain non-finite values");
  int pos = 0, neg = 0;
  for (int y : labels) {
    if (y == 1) ++pos;
    else if (y == -1) ++neg;
    else throw Error(ErrorCode::kInvalidArgument, "fusion labels must be +1 or -1");
  }
  if (pos < 2 || neg < 2)
    throw Error(ErrorCode::kSingleClass,
                "fusion needs at least 2 trials of each class (got " +
                    std::to_string(pos) + " genuine, " + std::to_string(neg) + " spoof)");
}

// theta = [w; b]
double Loss(const Vector &theta, const Matrix &scores, std::span<const int> labels,
            const Vector &c, double l2) {
  const Index m = scores.cols();
  const Vector z = scores * theta.head(m) + Vector::Constant(scores.rows(), theta(m));
  double total = 0.0;
  for (Index i = 0; i < z.size(); ++i) total += c(i) * Softplus(-labels[i] * z(i));
  return total / static_cast<double>(z.size()) + 0.5 * l2 * theta.head(m).squaredNorm();
}

}  // namespace

double FusionLoss(const FusionModel &model, const Matrix &scores,
                  std::span<const int> labels, const FusionTrainConfig &cfg) {
  CheckInputs(scores, labels);
  if (model.weights.size() != scores.cols())
    throw Error(ErrorCode::kShapeMismatch, "fusion weights do not match subsystems");
  Vector theta(scores.cols() + 1);
  theta << model.weights, model.offset;
  return Loss(theta, scores, labels, SampleWeights(labels, cfg), cfg.l2);
}

FusionTrainResult FusionTrain(const Matrix &scores, std::span<const int> labels,
                              const FusionTrainConfig &cfg) {
  CheckInputs(scores, labels);
  if (!(cfg.l2 >= 0) || !(cfg.gradient_tolerance > 0) || cfg.max_iterations < 1)
    throw Error(ErrorCode::kInvalidArgument,
                "fusion needs l2 >= 0, gradient_tolerance > 0, max_iterations >= 1");
  const Index n = scores.rows(), m = scores.cols();
  const Vector c = SampleWeights(labels, cfg);
  Matrix design(n, m + 1);
  design << scores, Vector::Ones(n);
  Vector theta = Vector::Zero(m + 1);

  FusionTrainResult res;
  double loss = Loss(theta, scores, labels, c, cfg.l2);
  res.loss_history.push_back(loss);
  Vector curv(n);
  auto gradient = [&](const Vector &th) {
    const Vector z = design * th;
    Vector resid(n);
    for (Index i = 0; i < n; ++i) {
      const double p = Sigmoid(labels[i] * z(i));
      resid(i) = -c(i) * labels[i] * (1.0 - p) / static_cast<double>(n);
      curv(i) = c(i) * p * (1.0 - p) / static_cast<double>(n);
    }
    Vector g = design.transpose() * resid;
    g.head(m) += cfg.l2 * th.head(m);
    return g;
  };
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    const Vector grad = gradient(theta);
    res.gradient_norm = grad.norm();
    res.iterations = iter;
    if (res.gradient_norm <= cfg.gradient_tolerance) {
      res.converged = true;
      break;
    }
    Matrix hess = design.transpose() * curv.asDiagonal() * design;
    hess.diagonal().head(m).array() += cfg.l2;
    hess.diagonal().array() += 1e-12;
    Vector step = hess.ldlt().solve(-grad);
    double slope = grad.dot(step);
    if (!step.allFinite() || slope >= 0) {
      step = -grad;
      slope = -grad.squaredNorm();
    }
    double t = 1.0;
    bool accepted = false;
    while (t > 1e-20) {
      const Vector trial = theta + t * step;
      const double trial_loss = Loss(trial, scores, labels, c, cfg.l2);
      if (trial_loss <= loss + 1e-4 * t * slope) {
        theta = trial;
        loss = trial_loss;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
    res.loss_history.push_back(loss);
    res.iterations = iter + 1;
  }
  if (!res.converged) {
    res.gradient_norm = gradient(theta).norm();
    res.converged = res.gradient_norm <= cfg.gradient_tolerance;
    if (!res.converged)
      Warn("fusion stopped with gradient norm " + std::to_string(res.gradient_norm));
  }
  res.model.weights = theta.head(m);
  res.model.offset = theta(m);
  return res;
}

double FusionApply(const FusionModel &model, std::span<const double> scores) {
  if (static_cast<Index>(scores.size()) != model.weights.size())
    throw Error(ErrorCode::kShapeMismatch,
                "fusion model has " + std::to_string(model.weights.size()) +
                    " weights but got " + std::to_string(scores.size()) + " scores");
  double total = model.offset;
  for (std::size_t i = 0; i < scores.size(); ++i) total += model.weights(i) * scores[i];
  return total;
}

}  // namespace replayspoof
