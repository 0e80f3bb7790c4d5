// replayspoof/tf_transforms.h

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

#ifndef REPLAYSPOOF_TF_TRANSFORMS_H_
#define REPLAYSPOOF_TF_TRANSFORMS_H_

#include <span>
#include <vector>

#include "replayspoof/audio_io.h"
#include "replayspoof/types.h"

namespace replayspoof {

/// Power values are floored here before taking logs.
inline constexpr double kPowerFloor = 1e-10;

enum class SpectrumScale { kPower, kLogPower, kMagnitude, kNormalized };

/// Time-frequency matrix, rows = frequency bins (ascending), cols = frames.
class Spectrogram {
 public:
  Spectrogram(Matrix values, std::vector<double> bin_frequencies,
              double hop_seconds, SpectrumScale scale);

  const Matrix &values() const { return values_; }
  const std::vector<double> &bin_frequencies() const { return bin_frequencies_; }
  double hop_seconds() const { return hop_seconds_; }
  SpectrumScale scale() const { return scale_; }
  Index freq_bins() const { return values_.rows(); }
  Index time_frames() const { return values_.cols(); }

 private:
  Matrix values_;
  std::vector<double> bin_frequencies_;
  double hop_seconds_;
  SpectrumScale scale_;
};

/// Fixed F x T network input; the shape never depends on utterance length.
class UnifiedFeature {
 public:
  explicit UnifiedFeature(Matrix values);
  const Matrix &values() const { return values_; }
  Index rows() const { return values_.rows(); }
  Index cols() const { return values_.cols(); }

 private:
  Matrix values_;
};

enum class WindowType { kHann, kRectangular };

/// Periodic Hann, w[n] = 0.5 - 0.5 cos(2 pi n / N).
std::vector<double> MakeWindow(WindowType type, int length);

struct FramingConfig {
  double window_seconds = 0.128;
  double hop_seconds = 0.016;
  WindowType window = WindowType::kHann;

  int FrameLength(int sample_rate) const;
  int HopLength(int sample_rate) const;
};

/// Returns n_frames x frame_len, n_frames = floor((len - frame_len)/hop) + 1,
/// each frame multiplied by the window. Throws kSignalTooShort when the
/// signal is shorter than one window.
Matrix FrameSignal(std::span<const double> samples, int frame_length,
                   int hop_length, WindowType window);
Matrix FrameSignal(const Waveform &wave, const FramingConfig &cfg);

struct FftConfig {
  FramingConfig framing;
  int n_fft = 2048;
  double floor = kPowerFloor;
};

/// |DFT|^2 of each frame, (n_fft/2 + 1) x n_frames, scale kPower.
Spectrogram FftPowerSpectrogram(const Waveform &wave, const FftConfig &cfg);
/// |DFT| of each frame, scale kMagnitude.
Spectrogram FftMagnitudeSpectrogram(const Waveform &wave, const FftConfig &cfg);
/// log(max(|DFT|^2, floor)), scale kLogPower.
Spectrogram FftLogPowerSpectrogram(const Waveform &wave, const FftConfig &cfg);

/// Constant-Q analysis. Bin k is centred at f_min * 2^(k / bins_per_octave)
/// with Q = 1 / (2^(1/bins_per_octave) - 1). Frame t is centred on sample
/// t * hop_length, t = 0 .. floor((len - 1) / hop_length). The coefficient is
///
///   X_k(t) = sum_m x[t*hop + m - N_k/2] w_k[m] exp(-2 pi i f_k (m - N_k/2) / fs)
///            / sum_m w_k[m]
///
/// with N_k = ceil(Q fs / f_k), w_k the periodic Hann window of length N_k,
/// N_k/2 integer division and x zero outside the signal.
struct CqtConfig {
  double f_min = 15.625;
  int bins_per_octave = 96;
  int n_bins = 864;
  int hop_length = 256;
  double floor = kPowerFloor;

  double Q() const;
  double BinFrequency(int k) const;
  int KernelLength(int k, int sample_rate) const;
};

/// |X_k(t)|^2, scale kPower. Throws kNyquistViolation naming the first bin
/// at or above fs/2.
Spectrogram CqtPowerSpectrogram(const Waveform &wave, const CqtConfig &cfg);
Spectrogram CqtLogPowerSpectrogram(const Waveform &wave, const CqtConfig &cfg);

/// Element-wise log(max(v, floor)) of a power spectrogram.
Spectrogram LogOfPower(const Spectrogram &power, double floor = kPowerFloor);

// Daubechies-4 (8-tap) periodized wavelet transform.

/// Orthonormal db4 scaling (low-pass analysis) filter, 8 taps.
const std::vector<double> &Db4LowPass();

struct WaveletCoefficients {
  std::vector<double> approximation;
  /// details[0] is the finest level.
  std::vector<std::vector<double>> details;
};

/// Multi-level periodized DWT. Requires len divisible by 2^levels and
/// len >= 2^levels; otherwise throws kSignalTooShort.
WaveletCoefficients DwtAnalyze(std::span<const double> signal, int levels);
std::vector<double> DwtSynthesize(const WaveletCoefficients &coeffs);

/// One analysis step: returns {approximation, detail}, each len/2.
std::pair<std::vector<double>, std::vector<double>> DwtStep(
    std::span<const double> signal);

struct DwtConfig {
  /// Wavelet-packet depth; the scalogram has 2^levels rows.
  int levels = 8;
  int frame_length = 512;
  int hop_length = 160;
  double floor = kPowerFloor;
};

/// Per-frame full wavelet-packet decomposition to depth `levels`; row r is
/// the log-energy of the packet covering [r, r+1) * (fs/2) / 2^levels,
/// i.e. packets are reordered from Paley to frequency order. Frames
/// shorter than frame_length (short signals) are zero-padded.
Spectrogram DwtScalogram(const Waveform &wave, const DwtConfig &cfg);

/// Row-wise mean/variance normalization across time. Variances below
/// `variance_floor` are floored, so constant rows become zeros.
inline constexpr double kVarianceFloor = 1e-12;
Spectrogram MvnSpectrum(const Spectrogram &spec,
                        double variance_floor = kVarianceFloor);

/// Keeps the first `rows` bins when rows <= freq_bins, otherwise linearly
/// interpolates onto `rows` points spanning the same frequency range.
Spectrogram ResizeRows(const Spectrogram &spec, Index rows);

/// First target_frames columns, or the content repeated cyclically until
/// target_frames is reached.
UnifiedFeature TruncateOrRepeat(const Spectrogram &spec, Index target_frames);
UnifiedFeature TruncateOrRepeat(const Matrix &values, Index target_frames);

/// Window start columns: 0, hop, 2 hop, ... plus an end-anchored start when
/// the last step leaves a remainder. hop = max(1, round(W (1 - overlap))).
std::vector<Index> SlidingWindowStarts(Index total_frames, Index window_frames,
                                       double overlap_fraction);
std::vector<UnifiedFeature> SlidingWindows(const Spectrogram &spec,
                                           Index window_frames,
                                           double overlap_fraction);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_TF_TRANSFORMS_H_
