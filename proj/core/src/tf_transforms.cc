// tf_transforms.cc

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

#include "replayspoof/tf_transforms.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.h"
#include "replayspoof/error.h"

namespace replayspoof {

Spectrogram::Spectrogram(Matrix values, std::vector<double> bin_frequencies,
                         double hop_seconds, SpectrumScale scale)
    : values_(std::move(values)),
      bin_frequencies_(std::move(bin_frequencies)),
      hop_seconds_(hop_seconds),
      scale_(scale) {
  if (values_.rows() == 0 || values_.cols() == 0)
    throw Error(ErrorCode::kInvalidArgument, "empty spectrogram");
  if (static_cast<Index>(bin_frequencies_.size()) != values_.rows())
    throw Error(ErrorCode::kShapeMismatch,
                "bin frequency count does not match spectrogram rows");
  for (std::size_t i = 1; i < bin_frequencies_.size(); ++i) {
    if (!(bin_frequencies_[i] > bin_frequencies_[i - 1]))
      throw Error(ErrorCode::kInvalidArgument,
                  "bin frequencies must be strictly increasing");
  }
  if (!values_.allFinite())
    throw Error(ErrorCode::kNonFinite, "spectrogram has non-finite values");
}

UnifiedFeature::UnifiedFeature(Matrix values) : values_(std::move(values)) {
  if (values_.rows() == 0 || values_.cols() == 0)
    throw Error(ErrorCode::kInvalidArgument, "empty unified feature");
}

std::vector<double> MakeWindow(WindowType type, int length) {
  std::vector<double> w(static_cast<std::size_t>(length), 1.0);
  if (type == WindowType::kHann) {
    for (int n = 0; n < length; ++n)
      w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * n / length);
  }
  return w;
}

int FramingConfig::FrameLength(int sample_rate) const {
  return static_cast<int>(std::lround(window_seconds * sample_rate));
}

int FramingConfig::HopLength(int sample_rate) const {
  return static_cast<int>(std::lround(hop_seconds * sample_rate));
}

Matrix FrameSignal(std::span<const double> samples, int frame_length,
                   int hop_length, WindowType window) {
  if (frame_length < 2)
    throw Error(ErrorCode::kInvalidArgument,
                "frame length must be at least 2 samples");
  if (hop_length < 1)
    throw Error(ErrorCode::kInvalidArgument, "hop length must be positive");
  const auto len = static_cast<Index>(samples.size());
  if (len < frame_length)
    throw Error(ErrorCode::kSignalTooShort,
                "utterance of " + std::to_string(len) +
                    " samples is shorter than one " +
                    std::to_string(frame_length) + "-sample window");
  const Index n_frames = (len - frame_length) / hop_length + 1;
  const std::vector<double> w = MakeWindow(window, frame_length);
  Matrix frames(n_frames, frame_length);
  for (Index t = 0; t < n_frames; ++t) {
    const double *src = samples.data() + t * hop_length;
    for (int n = 0; n < frame_length; ++n) frames(t, n) = src[n] * w[n];
  }
  return frames;
}

Matrix FrameSignal(const Waveform &wave, const FramingConfig &cfg) {
  return FrameSignal(wave.samples(), cfg.FrameLength(wave.sample_rate()),
                     cfg.HopLength(wave.sample_rate()), cfg.window);
}

namespace {

bool IsPowerOfTwo(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Returns |DFT|^2 (or |DFT| when `magnitude`) as bins x frames.
Matrix FrameSpectra(const Waveform &wave, const FftConfig &cfg, bool magnitude) {
  const Matrix frames = FrameSignal(wave, cfg.framing);
  if (!IsPowerOfTwo(cfg.n_fft) || cfg.n_fft < frames.cols())
    throw Error(ErrorCode::kInvalidArgument,
                "n_fft must be a power of two >= frame length, got " +
                    std::to_string(cfg.n_fft));
  const int n_bins = cfg.n_fft / 2 + 1;
  Matrix out(n_bins, frames.rows());
  std::vector<double> buf(static_cast<std::size_t>(cfg.n_fft));
  std::vector<fft::Complex> spec(static_cast<std::size_t>(n_bins));
  for (Index t = 0; t < frames.rows(); ++t) {
    std::fill(buf.begin(), buf.end(), 0.0);
    for (Index n = 0; n < frames.cols(); ++n) buf[n] = frames(t, n);
    fft::RealForward(buf, spec);
    for (int b = 0; b < n_bins; ++b) {
      const double p = std::norm(spec[b]);
      out(b, t) = magnitude ? std::sqrt(p) : p;
    }
  }
  return out;
}

std::vector<double> FftBinFrequencies(int n_fft, int sample_rate) {
  std::vector<double> f(static_cast<std::size_t>(n_fft / 2 + 1));
  for (std::size_t b = 0; b < f.size(); ++b)
    f[b] = static_cast<double>(b) * sample_rate / n_fft;
  return f;
}

}  // namespace

Spectrogram FftPowerSpectrogram(const Waveform &wave, const FftConfig &cfg) {
  return Spectrogram(FrameSpectra(wave, cfg, false),
                     FftBinFrequencies(cfg.n_fft, wave.sample_rate()),
                     cfg.framing.HopLength(wave.sample_rate()) /
                         static_cast<double>(wave.sample_rate()),
                     SpectrumScale::kPower);
}

Spectrogram FftMagnitudeSpectrogram(const Waveform &wave, const FftConfig &cfg) {
  return Spectrogram(FrameSpectra(wave, cfg, true),
                     FftBinFrequencies(cfg.n_fft, wave.sample_rate()),
                     cfg.framing.HopLength(wave.sample_rate()) /
                         static_cast<double>(wave.sample_rate()),
                     SpectrumScale::kMagnitude);
}

Spectrogram FftLogPowerSpectrogram(const Waveform &wave, const FftConfig &cfg) {
  return LogOfPower(FftPowerSpectrogram(wave, cfg), cfg.floor);
}

Spectrogram LogOfPower(const Spectrogram &power, double floor) {
  if (!(floor > 0))
    throw Error(ErrorCode::kInvalidArgument, "power floor must be positive");
  Matrix v = power.values().array().max(floor).log().matrix();
  return Spectrogram(std::move(v), power.bin_frequencies(), power.hop_seconds(),
                     SpectrumScale::kLogPower);
}

Spectrogram MvnSpectrum(const Spectrogram &spec, double variance_floor) {
  const Index frames = spec.time_frames();
  if (frames < 2)
    throw Error(ErrorCode::kInvalidArgument,
                "mean/variance normalization needs at least 2 frames");
  Matrix v = spec.values();
  for (Index r = 0; r < v.rows(); ++r) {
    const double mean = v.row(r).mean();
    const double var = (v.row(r).array() - mean).square().mean();
    const double scale = 1.0 / std::sqrt(std::max(var, variance_floor));
    v.row(r) = ((v.row(r).array() - mean) * scale).matrix();
    if (var < variance_floor) v.row(r).setZero();
  }
  return Spectrogram(std::move(v), spec.bin_frequencies(), spec.hop_seconds(),
                     SpectrumScale::kNormalized);
}

Spectrogram ResizeRows(const Spectrogram &spec, Index rows) {
  if (rows < 1)
    throw Error(ErrorCode::kInvalidArgument, "row count must be positive");
  const Index have = spec.freq_bins();
  if (rows <= have) {
    std::vector<double> f(spec.bin_frequencies().begin(),
                          spec.bin_frequencies().begin() + rows);
    return Spectrogram(spec.values().topRows(rows), std::move(f),
                       spec.hop_seconds(), spec.scale());
  }
  const auto &src_f = spec.bin_frequencies();
  const double lo = src_f.front();
  const double hi = src_f.back();
  Matrix v(rows, spec.time_frames());
  std::vector<double> f(static_cast<std::size_t>(rows));
  Index j = 0;
  for (Index r = 0; r < rows; ++r) {
    const double target = lo + (hi - lo) * static_cast<double>(r) / (rows - 1);
    f[r] = target;
    while (j + 2 < have && src_f[j + 1] < target) ++j;
    const Index j1 = std::min(j + 1, have - 1);
    const double span = src_f[j1] - src_f[j];
    const double a = span > 0 ? std::clamp((target - src_f[j]) / span, 0.0, 1.0) : 0.0;
    v.row(r) = (1.0 - a) * spec.values().row(j) + a * spec.values().row(j1);
  }
  return Spectrogram(std::move(v), std::move(f), spec.hop_seconds(), spec.scale());
}

UnifiedFeature TruncateOrRepeat(const Matrix &values, Index target_frames) {
  if (values.rows() == 0 || values.cols() == 0)
    throw Error(ErrorCode::kInvalidArgument, "cannot unify an empty spectrogram");
  if (target_frames < 1)
    throw Error(ErrorCode::kInvalidArgument, "target frame count must be positive");
  const Index have = values.cols();
  if (have >= target_frames) return UnifiedFeature(values.leftCols(target_frames));
  Matrix out(values.rows(), target_frames);
  for (Index t = 0; t < target_frames; ++t) out.col(t) = values.col(t % have);
  return UnifiedFeature(std::move(out));
}

UnifiedFeature TruncateOrRepeat(const Spectrogram &spec, Index target_frames) {
  return TruncateOrRepeat(spec.values(), target_frames);
}

std::vector<Index> SlidingWindowStarts(Index total_frames, Index window_frames,
                                       double overlap_fraction) {
  if (window_frames < 1)
    throw Error(ErrorCode::kInvalidArgument, "window must span at least one frame");
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0))
    throw Error(ErrorCode::kInvalidArgument, "overlap fraction must be in [0, 1)");
  const Index hop = std::max<Index>(
      1, std::lround(static_cast<double>(window_frames) * (1.0 - overlap_fraction)));
  std::vector<Index> starts;
  if (total_frames <= window_frames) {
    starts.push_back(0);
    return starts;
  }
  for (Index s = 0; s + window_frames <= total_frames; s += hop) starts.push_back(s);
  if (starts.back() + window_frames < total_frames)
    starts.push_back(total_frames - window_frames);
  return starts;
}

std::vector<UnifiedFeature> SlidingWindows(const Spectrogram &spec,
                                           Index window_frames,
                                           double overlap_fraction) {
  const std::vector<Index> starts =
      SlidingWindowStarts(spec.time_frames(), window_frames, overlap_fraction);
  const Matrix source = spec.time_frames() < window_frames
                            ? TruncateOrRepeat(spec, window_frames).values()
                            : spec.values();
  std::vector<UnifiedFeature> windows;
  windows.reserve(starts.size());
  for (Index s : starts)
    windows.emplace_back(source.middleCols(s, window_frames));
  return windows;
}

}  // namespace replayspoof
