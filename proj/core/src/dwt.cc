// dwt.cc

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

#include <algorithm>
#include <cmath>
#include <string>

#include "replayspoof/error.h"
#include "replayspoof/tf_transforms.h"

namespace replayspoof {

const std::vector<double> &Db4LowPass() {
  static const std::vector<double> h = {
      0.23037781330885523,  0.7148465705525415,   0.6308807679295904,
      -0.02798376941698385, -0.18703481171888114, 0.030841381835986965,
      0.032883011666982945, -0.010597401784997278};
  return h;
}

namespace {

// Quadrature mirror: g[n] = (-1)^n h[L-1-n].
const std::vector<double> &Db4HighPass() {
  static const std::vector<double> g = [] {
    const std::vector<double> &h = Db4LowPass();
    const std::size_t taps = h.size();
    std::vector<double> out(taps);
    for (std::size_t n = 0; n < taps; ++n)
      out[n] = (n % 2 == 0 ? 1.0 : -1.0) * h[taps - 1 - n];
    return out;
  }();
  return g;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> DwtStep(
    std::span<const double> signal) {
  const std::size_t n = signal.size();
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorCode::kSignalTooShort,
                "wavelet step needs an even length >= 2, got " + std::to_string(n));
  const std::vector<double> &h = Db4LowPass();
  const std::vector<double> &g = Db4HighPass();
  std::vector<double> approx(n / 2, 0.0), detail(n / 2, 0.0);
  for (std::size_t k = 0; k < n / 2; ++k) {
    double a = 0.0, d = 0.0;
    for (std::size_t t = 0; t < h.size(); ++t) {
      const double x = signal[(2 * k + t) % n];
      a += h[t] * x;
      d += g[t] * x;
    }
    approx[k] = a;
    detail[k] = d;
  }
  return {std::move(approx), std::move(detail)};
}

namespace {

std::vector<double> InverseStep(const std::vector<double> &approx,
                                const std::vector<double> &detail) {
  const std::size_t n = 2 * approx.size();
  const std::vector<double> &h = Db4LowPass();
  const std::vector<double> &g = Db4HighPass();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < approx.size(); ++k) {
    for (std::size_t t = 0; t < h.size(); ++t)
      out[(2 * k + t) % n] += h[t] * approx[k] + g[t] * detail[k];
  }
  return out;
}

}  // namespace

WaveletCoefficients DwtAnalyze(std::span<const double> signal, int levels) {
  if (levels < 1)
    throw Error(ErrorCode::kInvalidArgument, "wavelet depth must be at least 1");
  const std::size_t block = std::size_t{1} << levels;
  if (signal.size() < block || signal.size() % block != 0)
    throw Error(ErrorCode::kSignalTooShort,
                "signal of " + std::to_string(signal.size()) +
                    " samples is too short for (or not divisible by) depth " +
                    std::to_string(levels) + " which needs multiples of " +
                    std::to_string(block));
  WaveletCoefficients out;
  std::vector<double> current(signal.begin(), signal.end());
  for (int l = 0; l < levels; ++l) {
    auto [a, d] = DwtStep(current);
    out.details.push_back(std::move(d));
    current = std::move(a);
  }
  out.approximation = std::move(current);
  return out;
}

std::vector<double> DwtSynthesize(const WaveletCoefficients &coeffs) {
  std::vector<double> current = coeffs.approximation;
  for (auto it = coeffs.details.rbegin(); it != coeffs.details.rend(); ++it) {
    if (it->size() != current.size())
      throw Error(ErrorCode::kShapeMismatch, "wavelet level sizes disagree");
    current = InverseStep(current, *it);
  }
  return current;
}

Spectrogram DwtScalogram(const Waveform &wave, const DwtConfig &cfg) {
  if (cfg.levels < 1 || cfg.levels > 16)
    throw Error(ErrorCode::kInvalidArgument, "wavelet depth must be in [1, 16]");
  if (cfg.hop_length < 1)
    throw Error(ErrorCode::kInvalidArgument, "DWT hop must be positive");
  const std::size_t n_packets = std::size_t{1} << cfg.levels;
  const auto frame_len = static_cast<std::size_t>(cfg.frame_length);
  if (frame_len < n_packets || frame_len % n_packets != 0)
    throw Error(ErrorCode::kInvalidArgument,
                "DWT frame length must be a multiple of 2^levels");
  if (wave.size() < n_packets)
    throw Error(ErrorCode::kSignalTooShort,
                "signal of " + std::to_string(wave.size()) +
                    " samples is too short for wavelet depth " +
                    std::to_string(cfg.levels));

  const std::size_t n_frames =
      wave.size() < frame_len ? 1 : (wave.size() - frame_len) / cfg.hop_length + 1;
  Matrix values(static_cast<Index>(n_packets), static_cast<Index>(n_frames));
  std::vector<std::vector<double>> nodes, next;
  for (std::size_t t = 0; t < n_frames; ++t) {
    std::vector<double> frame(frame_len, 0.0);
    const std::size_t start = t * cfg.hop_length;
    const std::size_t count = std::min(frame_len, wave.size() - start);
    std::copy_n(wave.samples().begin() + static_cast<std::ptrdiff_t>(start), count,
                frame.begin());
    nodes.assign(1, std::move(frame));
    for (int l = 0; l < cfg.levels; ++l) {
      next.clear();
      for (const auto &node : nodes) {
        auto [a, d] = DwtStep(node);
        next.push_back(std::move(a));
        next.push_back(std::move(d));
      }
      nodes.swap(next);
    }
    for (std::size_t f = 0; f < n_packets; ++f) {
      const std::size_t paley = f ^ (f >> 1);
      double energy = 0.0;
      for (double c : nodes[paley]) energy += c * c;
      values(static_cast<Index>(f), static_cast<Index>(t)) =
          std::log(std::max(energy, cfg.floor));
    }
  }
  std::vector<double> freqs(n_packets);
  const double width = wave.sample_rate() / 2.0 / static_cast<double>(n_packets);
  for (std::size_t f = 0; f < n_packets; ++f) freqs[f] = (f + 0.5) * width;
  return Spectrogram(std::move(values), std::move(freqs),
                     static_cast<double>(cfg.hop_length) / wave.sample_rate(),
                     SpectrumScale::kLogPower);
}

}  // namespace replayspoof
