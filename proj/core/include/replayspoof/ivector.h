// replayspoof/ivector.h

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

#ifndef REPLAYSPOOF_IVECTOR_H_
#define REPLAYSPOOF_IVECTOR_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "replayspoof/gmm.h"
#include "replayspoof/types.h"

namespace replayspoof {

/// Zero-order counts n (K) and centred first-order sums f (K x D).
struct BaumWelchStats {
  Vector n;
  Matrix f;
};

BaumWelchStats ComputeBaumWelchStats(const GmmModel &ubm, const Matrix &frames);

/// UBM plus a (K*D) x R loading matrix. Row k*D + d belongs to component k,
/// dimension d.
class TotalVariabilityModel {
 public:
  TotalVariabilityModel(GmmModel ubm, Matrix t_matrix);

  const GmmModel &ubm() const { return ubm_; }
  const Matrix &t_matrix() const { return t_; }
  Index rank() const { return t_.cols(); }

 private:
  GmmModel ubm_;
  Matrix t_;
};

struct TvTrainConfig {
  int rank = 200;
  int iterations = 5;
  /// Initial entries are init_scale * N(0,1) * UBM standard deviation.
  double init_scale = 0.1;
  std::uint64_t seed = 0;
};

struct TvTrainResult {
  TotalVariabilityModel model;
  /// Objective for the initial T and after every iteration.
  std::vector<double> objective_history;
};

/// Log marginal likelihood of the stats under T, up to T-independent terms:
/// sum_u 0.5 b_u' L_u^-1 b_u - 0.5 log|L_u|, where L_u = I + T' S^-1 N_u T
/// and b_u = T' S^-1 f_u.
double TvObjective(const TotalVariabilityModel &tv,
                   const std::vector<BaumWelchStats> &stats);

/// EM for T. Components without any counts keep their initial rows; a
/// singular per-component system gets a 1e-6 ridge and a warning.
TvTrainResult TrainTMatrix(const GmmModel &ubm,
                           const std::vector<BaumWelchStats> &stats,
                           const TvTrainConfig &cfg);

/// Posterior mean w = (I + T' S^-1 N T)^-1 T' S^-1 f.
Vector ExtractIvector(const TotalVariabilityModel &tv, const BaumWelchStats &stats);

struct NormalizedVectors {
  std::vector<Vector> vectors;
  Vector mean;
  /// True where the centred vector was zero and was left at zero.
  std::vector<bool> degenerate;
};

/// Subtracts `mean` (or the fitted mean when none is given) and scales each
/// vector to unit L2 norm.
NormalizedVectors CenterLengthNormalize(const std::vector<Vector> &vectors,
                                        const std::optional<Vector> &mean = std::nullopt);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_IVECTOR_H_
