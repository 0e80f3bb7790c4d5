// eemd.cc

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

#include "replayspoof/eemd.h"

#include <cmath>
#include <random>
#include <string>

#include "replayspoof/error.h"
#include "seeding.h"

namespace replayspoof {

Extrema FindExtrema(std::span<const double> h) {
  Extrema e;
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    if (h[i] > h[i - 1] && h[i] >= h[i + 1]) e.maxima.push_back(i);
    else if (h[i] < h[i - 1] && h[i] <= h[i + 1]) e.minima.push_back(i);
  }
  return e;
}

std::vector<double> NaturalCubicSpline(std::span<const double> x,
                                       std::span<const double> y,
                                       std::size_t n_out) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n)
    throw Error(ErrorCode::kInvalidArgument, "spline needs >= 2 matching knots");
  // Second derivatives m_i from the tridiagonal system, m_0 = m_{n-1} = 0.
  std::vector<double> m(n, 0.0);
  if (n > 2) {
    std::vector<double> diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
      diag[i] = 2.0 * (h0 + h1);
      upper[i] = h1;
      rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
    }
    // Thomas algorithm over the interior rows 1 .. n-2.
    for (std::size_t i = 2; i + 1 < n; ++i) {
      const double lower = x[i] - x[i - 1];
      const double w = lower / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      const double next = i + 2 < n ? m[i + 1] : 0.0;
      m[i] = (rhs[i] - upper[i] * next) / diag[i];
      if (i == 1) break;
    }
  }
  std::vector<double> out(n_out);
  std::size_t seg = 0;
  for (std::size_t t = 0; t < n_out; ++t) {
    const double xt = static_cast<double>(t);
    while (seg + 2 < n && x[seg + 1] < xt) ++seg;
    const double h = x[seg + 1] - x[seg];
    const double a = (x[seg + 1] - xt) / h;
    const double b = (xt - x[seg]) / h;
    out[t] = a * y[seg] + b * y[seg + 1] +
             ((a * a * a - a) * m[seg] + (b * b * b - b) * m[seg + 1]) * h * h / 6.0;
  }
  return out;
}

namespace {

// Knots for one envelope: the extrema plus their two nearest neighbours on
// each side reflected about the first / last sample.
std::vector<double> Envelope(std::span<const double> h,
                             const std::vector<std::size_t> &idx) {
  const double last = static_cast<double>(h.size() - 1);
  std::vector<double> xs, ys;
  const std::size_t mirror = std::min<std::size_t>(2, idx.size());
  for (std::size_t j = mirror; j-- > 0;) {
    xs.push_back(-static_cast<double>(idx[j]));
    ys.push_back(h[idx[j]]);
  }
  for (std::size_t i : idx) {
    xs.push_back(static_cast<double>(i));
    ys.push_back(h[i]);
  }
  for (std::size_t j = 0; j < mirror; ++j) {
    const std::size_t i = idx[idx.size() - 1 - j];
    xs.push_back(2.0 * last - static_cast<double>(i));
    ys.push_back(h[i]);
  }
  return NaturalCubicSpline(xs, ys, h.size());
}

}  // namespace

Imf EmdFirstImf(std::span<const double> signal, int sample_rate,
                const SiftConfig &cfg) {
  if (cfg.max_sift_iters < 1 || !(cfg.sd_threshold > 0))
    throw Error(ErrorCode::kInvalidArgument,
                "sifting needs max_sift_iters >= 1 and sd_threshold > 0");
  Imf out;
  out.sample_rate = sample_rate;
  std::vector<double> h(signal.begin(), signal.end());
  {
    const Extrema e = FindExtrema(h);
    if (e.maxima.size() + e.minima.size() < 4) {
      out.samples.assign(h.size(), 0.0);
      out.too_few_extrema = true;
      return out;
    }
  }
  for (int iter = 0; iter < cfg.max_sift_iters; ++iter) {
    const Extrema e = FindExtrema(h);
    if (e.maxima.empty() || e.minima.empty() ||
        e.maxima.size() + e.minima.size() < 4)
      break;
    const std::vector<double> upper = Envelope(h, e.maxima);
    const std::vector<double> lower = Envelope(h, e.minima);
    double diff = 0.0, energy = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const double mean = 0.5 * (upper[i] + lower[i]);
      diff += mean * mean;
      energy += h[i] * h[i];
      h[i] -= mean;
    }
    out.sift_iterations = iter + 1;
    if (energy == 0.0 || diff / energy < cfg.sd_threshold) break;
  }
  out.samples = std::move(h);
  return out;
}

Imf EmdFirstImf(const Waveform &wave, const SiftConfig &cfg) {
  return EmdFirstImf(wave.samples(), wave.sample_rate(), cfg);
}

Imf EemdFirstImf(const Waveform &wave, const EemdConfig &cfg) {
  if (cfg.ensemble_size < 1)
    throw Error(ErrorCode::kInvalidArgument, "ensemble size must be >= 1");
  if (!(cfg.noise_strength_factor >= 0))
    throw Error(ErrorCode::kInvalidArgument, "noise strength must be >= 0");
  const std::span<const double> x = wave.samples();
  const std::size_t n = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  const double sigma = cfg.noise_strength_factor * std::sqrt(var);

  Imf out;
  out.sample_rate = wave.sample_rate();
  out.samples.assign(n, 0.0);
  out.too_few_extrema = true;
  std::vector<double> noisy(n);
  for (int member = 0; member < cfg.ensemble_size; ++member) {
    if (sigma > 0) {
      std::mt19937_64 rng(DeriveSeed(cfg.seed, static_cast<std::uint64_t>(member)));
      std::normal_distribution<double> gauss(0.0, sigma);
      for (std::size_t i = 0; i < n; ++i) noisy[i] = x[i] + gauss(rng);
    } else {
      std::copy(x.begin(), x.end(), noisy.begin());
    }
    const Imf imf = EmdFirstImf(noisy, wave.sample_rate(), cfg.sift);
    out.too_few_extrema = out.too_few_extrema && imf.too_few_extrema;
    out.sift_iterations = std::max(out.sift_iterations, imf.sift_iterations);
    for (std::size_t i = 0; i < n; ++i) out.samples[i] += imf.samples[i];
  }
  for (double &v : out.samples) v /= cfg.ensemble_size;
  return out;
}

Spectrogram DeltaSpectrogram(const Waveform &wave, std::span<const double> first_mode,
                             const FftConfig &fft, bool log_output) {
  if (first_mode.size() != wave.size())
    throw Error(ErrorCode::kShapeMismatch,
                "first mode length differs from the signal length");
  const Spectrogram original = FftMagnitudeSpectrogram(wave, fft);
  const Spectrogram mode = FftMagnitudeSpectrogram(
      Waveform(std::vector<double>(first_mode.begin(), first_mode.end()),
               wave.sample_rate()),
      fft);
  Matrix delta = (original.values() - mode.values()).cwiseAbs();
  if (log_output) {
    delta = delta.array().square().max(fft.floor).log().matrix();
    return Spectrogram(std::move(delta), original.bin_frequencies(),
                       original.hop_seconds(), SpectrumScale::kLogPower);
  }
  return Spectrogram(std::move(delta), original.bin_frequencies(),
                     original.hop_seconds(), SpectrumScale::kMagnitude);
}

Spectrogram DeltaEemdSpectrogram(const Waveform &wave, const DeltaEemdConfig &cfg) {
  const Imf first = EemdFirstImf(wave, cfg.eemd);
  return DeltaSpectrogram(wave, first.samples, cfg.fft, cfg.log_output);
}

}  // namespace replayspoof
