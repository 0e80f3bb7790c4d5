// ivector.cc

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

#include "replayspoof/ivector.h"

#include <cmath>
#include <random>
#include <string>

#include <Eigen/Cholesky>

#include "replayspoof/error.h"
#include "seeding.h"

namespace replayspoof {

BaumWelchStats ComputeBaumWelchStats(const GmmModel &ubm, const Matrix &frames) {
  const Matrix post = ubm.Posteriors(frames);  // N x K, checks dims
  BaumWelchStats s;
  s.n = post.colwise().sum().transpose();
  s.f = post.transpose() * frames;
  s.f -= s.n.asDiagonal() * ubm.means();
  return s;
}

TotalVariabilityModel::TotalVariabilityModel(GmmModel ubm, Matrix t_matrix)
    : ubm_(std::move(ubm)), t_(std::move(t_matrix)) {
  if (t_.cols() < 1)
    throw Error(ErrorCode::kInvalidArgument, "T-matrix rank must be >= 1");
  if (t_.rows() != ubm_.components() * ubm_.dim())
    throw Error(ErrorCode::kShapeMismatch,
                "T-matrix has " + std::to_string(t_.rows()) + " rows, expected K*D = " +
                    std::to_string(ubm_.components() * ubm_.dim()));
  if (!t_.allFinite()) throw Error(ErrorCode::kNonFinite, "T-matrix is not finite");
}

namespace {

void CheckStats(const GmmModel &ubm, const BaumWelchStats &s) {
  if (s.n.size() != ubm.components() || s.f.rows() != ubm.components() ||
      s.f.cols() != ubm.dim())
    throw Error(ErrorCode::kShapeMismatch,
                "Baum-Welch stats do not match the UBM shape (K=" +
                    std::to_string(ubm.components()) + ", D=" +
                    std::to_string(ubm.dim()) + ")");
}

// Per-model quantities shared by every utterance.
struct Precomputed {
  Matrix scaled_t;             // S^-1 T, (K*D) x R
  std::vector<Matrix> blocks;  // T_k' S_k^-1 T_k, R x R each
};

Precomputed Precompute(const GmmModel &ubm, const Matrix &t) {
  const Index k = ubm.components(), d = ubm.dim();
  Precomputed p;
  p.scaled_t.resize(k * d, t.cols());
  p.blocks.resize(static_cast<std::size_t>(k));
  for (Index c = 0; c < k; ++c) {
    const Vector inv = ubm.variances().row(c).transpose().cwiseInverse();
    p.scaled_t.middleRows(c * d, d) = inv.asDiagonal() * t.middleRows(c * d, d);
    p.blocks[c].noalias() = t.middleRows(c * d, d).transpose() *
                            p.scaled_t.middleRows(c * d, d);
  }
  return p;
}

// Flattened f as a (K*D) vector in component-major order.
Vector Flatten(const Matrix &f) {
  Vector out(f.size());
  for (Index c = 0; c < f.rows(); ++c) out.segment(c * f.cols(), f.cols()) = f.row(c);
  return out;
}

struct Posterior {
  Vector mean;
  Matrix precision;  // L
  Eigen::LLT<Matrix> llt;
  Vector linear;     // b
};

Posterior LatentPosterior(const Precomputed &p, const BaumWelchStats &s, Index r) {
  Posterior out;
  out.precision = Matrix::Identity(r, r);
  for (Index c = 0; c < s.n.size(); ++c)
    if (s.n(c) != 0.0) out.precision += s.n(c) * p.blocks[c];
  out.linear = p.scaled_t.transpose() * Flatten(s.f);
  out.llt.compute(out.precision);
  out.mean = out.llt.solve(out.linear);
  return out;
}

double LogDet(const Eigen::LLT<Matrix> &llt) {
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

double Objective(const Precomputed &p, const std::vector<BaumWelchStats> &stats,
                 Index r) {
  double total = 0.0;
  for (const BaumWelchStats &s : stats) {
    const Posterior post = LatentPosterior(p, s, r);
    total += 0.5 * post.linear.dot(post.mean) - 0.5 * LogDet(post.llt);
  }
  return total;
}

}  // namespace

double TvObjective(const TotalVariabilityModel &tv,
                   const std::vector<BaumWelchStats> &stats) {
  for (const BaumWelchStats &s : stats) CheckStats(tv.ubm(), s);
  return Objective(Precompute(tv.ubm(), tv.t_matrix()), stats, tv.rank());
}

Vector ExtractIvector(const TotalVariabilityModel &tv, const BaumWelchStats &stats) {
  CheckStats(tv.ubm(), stats);
  return LatentPosterior(Precompute(tv.ubm(), tv.t_matrix()), stats, tv.rank()).mean;
}

TvTrainResult TrainTMatrix(const GmmModel &ubm,
                           const std::vector<BaumWelchStats> &stats,
                           const TvTrainConfig &cfg) {
  if (cfg.rank < 1 || cfg.iterations < 0 || !(cfg.init_scale > 0))
    throw Error(ErrorCode::kInvalidArgument,
                "T-matrix training needs rank >= 1, iterations >= 0, init_scale > 0");
  if (stats.empty())
    throw Error(ErrorCode::kInvalidArgument, "T-matrix training needs utterances");
  for (const BaumWelchStats &s : stats) CheckStats(ubm, s);
  if (static_cast<Index>(stats.size()) < cfg.rank)
    Warn("training a rank-" + std::to_string(cfg.rank) + " T-matrix on only " +
         std::to_string(stats.size()) + " utterances");

  const Index k = ubm.components(), d = ubm.dim(), r = cfg.rank;
  Matrix t(k * d, r);
  {
    std::mt19937_64 rng(DeriveSeed(cfg.seed, 0x7476ULL));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Index c = 0; c < k; ++c)
      for (Index i = 0; i < d; ++i) {
        const double sd = std::sqrt(ubm.variances()(c, i));
        for (Index j = 0; j < r; ++j) t(c * d + i, j) = cfg.init_scale * sd * gauss(rng);
      }
  }

  std::vector<double> history;
  Precomputed pre = Precompute(ubm, t);
  history.push_back(Objective(pre, stats, r));
  for (int iter = 0; iter < cfg.iterations; ++iter) {
    std::vector<Matrix> acc_a(static_cast<std::size_t>(k), Matrix::Zero(r, r));
    Matrix acc_c = Matrix::Zero(k * d, r);
    Vector evidence = Vector::Zero(k);
    for (const BaumWelchStats &s : stats) {
      const Posterior post = LatentPosterior(pre, s, r);
      Matrix second = post.llt.solve(Matrix::Identity(r, r));
      second.noalias() += post.mean * post.mean.transpose();
      for (Index c = 0; c < k; ++c) {
        if (s.n(c) == 0.0) continue;
        acc_a[c] += s.n(c) * second;
        evidence(c) += s.n(c);
      }
      acc_c.noalias() += Flatten(s.f) * post.mean.transpose();
    }
    for (Index c = 0; c < k; ++c) {
      if (evidence(c) <= 0.0) continue;
      Eigen::LLT<Matrix> llt(acc_a[c]);
      if (llt.info() != Eigen::Success ||
          llt.matrixLLT().diagonal().minCoeff() <= 1e-12 *
              std::max(1.0, llt.matrixLLT().diagonal().maxCoeff())) {
        Warn("singular T-matrix update for component " + std::to_string(c) +
             "; adding a 1e-6 ridge");
        acc_a[c] += 1e-6 * Matrix::Identity(r, r);
        llt.compute(acc_a[c]);
      }
      t.middleRows(c * d, d) =
          llt.solve(acc_c.middleRows(c * d, d).transpose()).transpose();
    }
    pre = Precompute(ubm, t);
    history.push_back(Objective(pre, stats, r));
  }
  return {TotalVariabilityModel(ubm, std::move(t)), std::move(history)};
}

NormalizedVectors CenterLengthNormalize(const std::vector<Vector> &vectors,
                                        const std::optional<Vector> &mean) {
  if (vectors.empty())
    throw Error(ErrorCode::kInvalidArgument, "no vectors to normalize");
  const Index dim = vectors.front().size();
  for (const Vector &v : vectors)
    if (v.size() != dim)
      throw Error(ErrorCode::kShapeMismatch, "vectors have different lengths");
  NormalizedVectors out;
  if (mean) {
    if (mean->size() != dim)
      throw Error(ErrorCode::kShapeMismatch, "mean length differs from the vectors");
    out.mean = *mean;
  } else {
    out.mean = Vector::Zero(dim);
    for (const Vector &v : vectors) out.mean += v;
    out.mean /= static_cast<double>(vectors.size());
  }
  out.vectors.reserve(vectors.size());
  for (const Vector &v : vectors) {
    Vector c = v - out.mean;
    const double norm = c.norm();
    if (norm > 0.0 && std::isfinite(norm)) {
      out.vectors.push_back(c / norm);
      out.degenerate.push_back(false);
    } else {
      out.vectors.push_back(Vector::Zero(dim));
      out.degenerate.push_back(true);
    }
  }
  return out;
}

}  // namespace replayspoof
