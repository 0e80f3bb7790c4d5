// replayspoof/cepstral.h

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

#ifndef REPLAYSPOOF_CEPSTRAL_H_
#define REPLAYSPOOF_CEPSTRAL_H_

#include <span>
#include <string>
#include <vector>

#include "replayspoof/audio_io.h"
#include "replayspoof/tf_transforms.h"
#include "replayspoof/types.h"

namespace replayspoof {

/// Frame-level features, one row per frame.
class FeatureMatrix {
 public:
  FeatureMatrix(Matrix values, std::string name, std::string fingerprint = {});

  const Matrix &values() const { return values_; }
  const std::string &name() const { return name_; }
  const std::string &fingerprint() const { return fingerprint_; }
  Index frames() const { return values_.rows(); }
  Index dim() const { return values_.cols(); }

 private:
  Matrix values_;
  std::string name_;
  std::string fingerprint_;
};

/// Orthonormal DCT-II of `row`, first n_out coefficients:
///   c_k = s_k sum_n x_n cos(pi (n + 1/2) k / N),  s_0 = sqrt(1/N), s_k = sqrt(2/N).
std::vector<double> DctIIOrtho(std::span<const double> row, std::size_t n_out);
/// Inverse of the full-length orthonormal DCT-II (i.e. DCT-III).
std::vector<double> InverseDctIIOrtho(std::span<const double> coeffs);

struct CqccConfig {
  CqtConfig cqt{.f_min = 15.625, .bins_per_octave = 96, .n_bins = 864};
  int resample_bins = 96;
  int n_coeffs = 30;
  /// Row-wise MVN of the log-power CQT before resampling ("mvn" variant).
  bool mvn = false;
  /// Per-dimension CMVN of the final cepstra ("cmvn" variant).
  bool cmvn = false;
};

/// Linear interpolation of each column of a log-power spectrogram from its
/// geometric bin grid onto n_points uniformly spaced frequencies spanning
/// [first bin, last bin]. Returns n_points x frames.
Matrix UniformResample(const Spectrogram &log_power, int n_points);

/// CQT -> |.|^2 -> log(max(., floor)) -> uniform resampling -> DCT-II,
/// keeping n_coeffs per frame. Output is frames x n_coeffs.
FeatureMatrix Cqcc(const Waveform &wave, const CqccConfig &cfg);

/// LPC solution for one autocorrelation sequence. Coefficients follow
/// A(z) = 1 + sum_k a_k z^-k, so x_t = 0.9 x_{t-1} + e_t gives a_1 = -0.9.
struct LpcResult {
  std::vector<double> a;           // a_1 .. a_p
  std::vector<double> reflection;  // k_1 .. k_p
  double error = 0.0;              // final prediction error power (gain^2)
};

/// Levinson-Durbin on r[0..p]. Throws kUnstableFilter if any reflection
/// coefficient has magnitude >= 1, kInvalidArgument if r[0] <= 0.
LpcResult LevinsonDurbin(std::span<const double> autocorr, int order);

/// Cepstrum of the all-pole model gain^2 / |A|^2, c_0 .. c_{n-1} with
/// c_0 = log(error) and the standard recursion continued past the order.
std::vector<double> LpcToCepstrum(const LpcResult &lpc, int n_coeffs);

/// Biased autocorrelation r[0..max_lag] of one frame, computed from the
/// zero-padded FFT power spectrum.
std::vector<double> FrameAutocorrelation(std::span<const double> frame, int max_lag);

struct LpccConfig {
  FramingConfig framing{.window_seconds = 0.128, .hop_seconds = 0.016,
                        .window = WindowType::kHann};
  int lpc_order = 26;
  int n_coeffs = 78;
  bool cmvn = false;
};

/// Per frame: autocorrelation -> Levinson-Durbin -> cepstral recursion to
/// n_coeffs terms (c_0 included). Zero-energy frames give all-zero rows.
FeatureMatrix Lpcc(const Waveform &wave, const LpccConfig &cfg);

/// Per-dimension mean 0 / variance 1 across frames, variance floored.
FeatureMatrix Cmvn(const FeatureMatrix &features,
                   double variance_floor = kVarianceFloor);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_CEPSTRAL_H_
