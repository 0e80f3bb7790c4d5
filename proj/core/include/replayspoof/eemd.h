// replayspoof/eemd.h

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

#ifndef REPLAYSPOOF_EEMD_H_
#define REPLAYSPOOF_EEMD_H_

#include <cstdint>
#include <span>
#include <vector>

#include "replayspoof/audio_io.h"
#include "replayspoof/tf_transforms.h"

namespace replayspoof {

struct SiftConfig {
  int max_sift_iters = 10;
  /// Cauchy criterion: stop once sum (h_prev - h)^2 / sum h_prev^2 < this.
  double sd_threshold = 0.2;
};

/// First intrinsic mode function of a signal.
struct Imf {
  std::vector<double> samples;
  int sample_rate = 0;
  /// Set when the signal had fewer than 4 local extrema; samples are then
  /// all zero and the whole input is residue.
  bool too_few_extrema = false;
  int sift_iterations = 0;
};

/// Indices of strict local maxima (h[i] > h[i-1], h[i] >= h[i+1]) and
/// minima (mirror condition), interior samples only.
struct Extrema {
  std::vector<std::size_t> maxima;
  std::vector<std::size_t> minima;
};
Extrema FindExtrema(std::span<const double> h);

/// Natural cubic spline through (x_i, y_i), x strictly increasing,
/// evaluated at 0, 1, ..., n_out - 1.
std::vector<double> NaturalCubicSpline(std::span<const double> x,
                                       std::span<const double> y,
                                       std::size_t n_out);

/// Sifting with natural-spline envelopes; the two extrema nearest each
/// edge are mirrored about the edge sample to pin the envelope ends.
Imf EmdFirstImf(std::span<const double> signal, int sample_rate,
                const SiftConfig &cfg = {});
Imf EmdFirstImf(const Waveform &wave, const SiftConfig &cfg = {});

struct EemdConfig {
  int ensemble_size = 50;
  /// Noise standard deviation = factor * sqrt(Var(signal)).
  double noise_strength_factor = 0.1;
  std::uint64_t seed = 0;
  SiftConfig sift;
};

/// Mean of EmdFirstImf over ensemble_size noisy copies. Member i draws its
/// Gaussian noise from a generator seeded by (seed, i); members are summed
/// in index order, so the output is bit-identical for a given seed.
Imf EemdFirstImf(const Waveform &wave, const EemdConfig &cfg);

struct DeltaEemdConfig {
  FftConfig fft;
  EemdConfig eemd;
  /// Emit log(max(S^2, floor)) instead of the linear magnitude difference.
  bool log_output = false;
};

/// S_delta = |S_o - S_r| on FFT magnitude spectrograms of the signal and
/// of a given first mode.
Spectrogram DeltaSpectrogram(const Waveform &wave, std::span<const double> first_mode,
                             const FftConfig &fft, bool log_output = false);
/// DeltaSpectrogram with the first mode computed by EemdFirstImf.
Spectrogram DeltaEemdSpectrogram(const Waveform &wave, const DeltaEemdConfig &cfg);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_EEMD_H_
