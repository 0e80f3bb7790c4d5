// svm.cc

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

#include "replayspoof/svm.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "replayspoof/error.h"

namespace replayspoof {

namespace {

void CheckData(const Matrix &x, std::span<const int> y) {
  if (x.rows() < 1 || x.cols() < 1)
    throw Error(ErrorCode::kInvalidArgument, "SVM training set is empty");
  if (static_cast<Index>(y.size()) != x.rows())
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(y.size()) + " labels for " + std::to_string(x.rows()) +
                    " samples");
  if (!x.allFinite()) throw Error(ErrorCode::kNonFinite, "SVM inputs are not finite");
  bool pos = false, neg = false;
  for (int v : y) {
    if (v == 1) pos = true;
    else if (v == -1) neg = true;
    else throw Error(ErrorCode::kInvalidArgument, "SVM labels must be +1 or -1");
  }
  if (!pos || !neg)
    throw Error(ErrorCode::kSingleClass, "SVM training needs both classes");
}

}  // namespace

double SvmPrimalObjective(const SvmModel &model, const Matrix &x,
                          std::span<const int> y, double c, double bias_feature) {
  CheckData(x, y);
  if (model.weight.size() != x.cols())
    throw Error(ErrorCode::kShapeMismatch, "SVM weight length differs from inputs");
  const double wb = bias_feature != 0.0 ? model.bias / bias_feature : 0.0;
  double loss = 0.0;
  for (Index i = 0; i < x.rows(); ++i) {
    const double margin = y[i] * (x.row(i).dot(model.weight) + model.bias);
    loss += std::max(0.0, 1.0 - margin);
  }
  return 0.5 * (model.weight.squaredNorm() + wb * wb) + c * loss;
}

SvmTrainResult SvmTrainLinear(const Matrix &x, std::span<const int> y,
                              const SvmTrainConfig &cfg) {
  CheckData(x, y);
  if (!(cfg.c > 0) || !(cfg.tolerance > 0) || cfg.max_epochs < 1)
    throw Error(ErrorCode::kInvalidArgument,
                "SVM needs c > 0, tolerance > 0 and max_epochs >= 1");
  const Index n = x.rows(), d = x.cols();
  const double bf = cfg.bias_feature;
  // Augmented weight [w, w_b]; the decision value is w'x + w_b * bf.
  Vector w = Vector::Zero(d);
  double wb = 0.0;
  Vector alpha = Vector::Zero(n);
  Vector qdiag(n);
  for (Index i = 0; i < n; ++i) qdiag(i) = x.row(i).squaredNorm() + bf * bf;

  SvmTrainResult res;
  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    for (Index i = 0; i < n; ++i) {
      if (qdiag(i) <= 0.0) continue;
      const double yi = y[i];
      const double g = yi * (x.row(i).dot(w) + wb * bf) - 1.0;
      const double updated = std::clamp(alpha(i) - g / qdiag(i), 0.0, cfg.c);
      const double delta = updated - alpha(i);
      if (delta == 0.0) continue;
      alpha(i) = updated;
      w += (delta * yi) * x.row(i).transpose();
      wb += delta * yi * bf;
    }
    const double reg = 0.5 * (w.squaredNorm() + wb * wb);
    double hinge = 0.0;
    for (Index i = 0; i < n; ++i)
      hinge += std::max(0.0, 1.0 - y[i] * (x.row(i).dot(w) + wb * bf));
    res.primal = reg + cfg.c * hinge;
    res.dual = alpha.sum() - reg;
    res.dual_objective_history.push_back(reg - alpha.sum());
    res.epochs = epoch + 1;
    if (res.primal - res.dual <= cfg.tolerance * (res.primal + 1.0)) {
      res.converged = true;
      break;
    }
  }
  if (!res.converged)
    Warn("SVM stopped after " + std::to_string(res.epochs) +
         " epochs without reaching the duality-gap tolerance");
  res.model.weight = std::move(w);
  res.model.bias = wb * bf;
  return res;
}

double SvmScore(const SvmModel &model, const Vector &v) {
  if (v.size() != model.weight.size())
    throw Error(ErrorCode::kShapeMismatch,
                "SVM expects dimension " + std::to_string(model.weight.size()) +
                    ", got " + std::to_string(v.size()));
  return model.weight.dot(v) + model.bias;
}

}  // namespace replayspoof
