// cepstral.cc

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

#include "replayspoof/cepstral.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fft.h"
#include "replayspoof/error.h"

namespace replayspoof {

FeatureMatrix::FeatureMatrix(Matrix values, std::string name,
                             std::string fingerprint)
    : values_(std::move(values)),
      name_(std::move(name)),
      fingerprint_(std::move(fingerprint)) {
  if (!values_.allFinite())
    throw Error(ErrorCode::kNonFinite, "feature matrix '" + name_ +
                                           "' has non-finite values");
}

// Makhoul's reordering: with v = (x0, x2, x4, ..., x5, x3, x1) and V = DFT(v),
// sum_n x_n cos(pi (2n+1) k / 2N) = Re(exp(-i pi k / 2N) V_k).
std::vector<double> DctIIOrtho(std::span<const double> row, std::size_t n_out) {
  const std::size_t n = row.size();
  if (n == 0)
    throw Error(ErrorCode::kInvalidArgument, "DCT of an empty vector");
  if (n_out > n)
    throw Error(ErrorCode::kInvalidArgument,
                "requested " + std::to_string(n_out) +
                    " DCT coefficients from a length-" + std::to_string(n) +
                    " input");
  std::vector<fft::Complex> v(n);
  for (std::size_t i = 0; 2 * i < n; ++i) v[i] = row[2 * i];
  for (std::size_t i = 0; 2 * i + 1 < n; ++i) v[n - 1 - i] = row[2 * i + 1];
  fft::ComplexForward(v, v);
  std::vector<double> out(n_out);
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double sk = std::sqrt(2.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < n_out; ++k) {
    const double phase = -std::numbers::pi * static_cast<double>(k) / (2.0 * n);
    out[k] = (k == 0 ? s0 : sk) * (std::polar(1.0, phase) * v[k]).real();
  }
  return out;
}

std::vector<double> InverseDctIIOrtho(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0)
    throw Error(ErrorCode::kInvalidArgument, "inverse DCT of an empty vector");
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double sk = std::sqrt(2.0 / static_cast<double>(n));
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = s0 * coeffs[0];
    for (std::size_t k = 1; k < n; ++k)
      acc += sk * coeffs[k] *
             std::cos(std::numbers::pi * (2.0 * i + 1.0) * k / (2.0 * n));
    out[i] = acc;
  }
  return out;
}

Matrix UniformResample(const Spectrogram &log_power, int n_points) {
  if (n_points < 2)
    throw Error(ErrorCode::kInvalidArgument, "uniform resampling needs >= 2 points");
  const auto &f = log_power.bin_frequencies();
  const Index bins = log_power.freq_bins();
  if (bins < 2)
    throw Error(ErrorCode::kInvalidArgument, "uniform resampling needs >= 2 bins");
  const Matrix &v = log_power.values();
  Matrix out(n_points, v.cols());
  const double lo = f.front(), hi = f.back();
  Index j = 0;
  for (int i = 0; i < n_points; ++i) {
    const double target =
        i == n_points - 1 ? hi : lo + (hi - lo) * i / static_cast<double>(n_points - 1);
    while (j + 2 < bins && f[j + 1] <= target) ++j;
    const double a = std::clamp((target - f[j]) / (f[j + 1] - f[j]), 0.0, 1.0);
    out.row(i) = (1.0 - a) * v.row(j) + a * v.row(j + 1);
  }
  return out;
}

namespace {

std::string CqccFingerprint(const CqccConfig &cfg) {
  std::ostringstream s;
  s.precision(17);
  s << "cqcc:fmin=" << cfg.cqt.f_min << ",bpo=" << cfg.cqt.bins_per_octave
    << ",bins=" << cfg.cqt.n_bins << ",hop=" << cfg.cqt.hop_length
    << ",floor=" << cfg.cqt.floor << ",resample=" << cfg.resample_bins
    << ",coeffs=" << cfg.n_coeffs << ",mvn=" << cfg.mvn << ",cmvn=" << cfg.cmvn;
  return s.str();
}

std::string LpccFingerprint(const LpccConfig &cfg) {
  std::ostringstream s;
  s.precision(17);
  s << "lpcc:win=" << cfg.framing.window_seconds
    << ",hop=" << cfg.framing.hop_seconds
    << ",window=" << (cfg.framing.window == WindowType::kHann ? "hann" : "rect")
    << ",order=" << cfg.lpc_order << ",coeffs=" << cfg.n_coeffs
    << ",cmvn=" << cfg.cmvn;
  return s.str();
}

}  // namespace

FeatureMatrix Cqcc(const Waveform &wave, const CqccConfig &cfg) {
  if (cfg.n_coeffs < 1 || cfg.n_coeffs > cfg.resample_bins)
    throw Error(ErrorCode::kInvalidArgument,
                "CQCC n_coeffs must be in [1, resample_bins]");
  Spectrogram log_power = CqtLogPowerSpectrogram(wave, cfg.cqt);
  if (cfg.mvn) log_power = MvnSpectrum(log_power);
  const Matrix uniform = UniformResample(log_power, cfg.resample_bins);
  Matrix cepstra(uniform.cols(), cfg.n_coeffs);
  std::vector<double> column(static_cast<std::size_t>(uniform.rows()));
  for (Index t = 0; t < uniform.cols(); ++t) {
    for (Index i = 0; i < uniform.rows(); ++i) column[i] = uniform(i, t);
    const std::vector<double> c =
        DctIIOrtho(column, static_cast<std::size_t>(cfg.n_coeffs));
    for (int k = 0; k < cfg.n_coeffs; ++k) cepstra(t, k) = c[k];
  }
  FeatureMatrix out(std::move(cepstra), "cqcc", CqccFingerprint(cfg));
  return cfg.cmvn ? Cmvn(out) : out;
}

LpcResult LevinsonDurbin(std::span<const double> r, int order) {
  if (order < 1 || static_cast<std::size_t>(order) >= r.size())
    throw Error(ErrorCode::kInvalidArgument,
                "LPC order must be in [1, autocorrelation length)");
  if (!(r[0] > 0))
    throw Error(ErrorCode::kInvalidArgument,
                "autocorrelation at lag 0 must be positive");
  LpcResult out;
  out.a.assign(static_cast<std::size_t>(order), 0.0);
  out.reflection.assign(static_cast<std::size_t>(order), 0.0);
  std::vector<double> prev(out.a.size(), 0.0);
  double err = r[0];
  for (int i = 1; i <= order; ++i) {
    double acc = r[i];
    for (int j = 1; j < i; ++j) acc += out.a[j - 1] * r[i - j];
    const double k = -acc / err;
    if (!(std::abs(k) < 1.0))
      throw Error(ErrorCode::kUnstableFilter,
                  "reflection coefficient " + std::to_string(i) +
                      " has magnitude " + std::to_string(std::abs(k)) + " >= 1");
    prev = out.a;
    for (int j = 1; j < i; ++j) out.a[j - 1] = prev[j - 1] + k * prev[i - j - 1];
    out.a[i - 1] = k;
    out.reflection[i - 1] = k;
    err *= (1.0 - k * k);
  }
  out.error = err;
  return out;
}

std::vector<double> LpcToCepstrum(const LpcResult &lpc, int n_coeffs) {
  if (n_coeffs < 1)
    throw Error(ErrorCode::kInvalidArgument, "cepstrum needs >= 1 coefficient");
  const int p = static_cast<int>(lpc.a.size());
  std::vector<double> c(static_cast<std::size_t>(n_coeffs), 0.0);
  c[0] = std::log(lpc.error);
  for (int n = 1; n < n_coeffs; ++n) {
    double acc = n <= p ? -lpc.a[n - 1] : 0.0;
    for (int k = std::max(1, n - p); k < n; ++k)
      acc -= (static_cast<double>(k) / n) * c[k] * lpc.a[n - k - 1];
    c[n] = acc;
  }
  return c;
}

std::vector<double> FrameAutocorrelation(std::span<const double> frame,
                                         int max_lag) {
  const std::size_t n = frame.size();
  if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n)
    throw Error(ErrorCode::kInvalidArgument, "autocorrelation lag out of range");
  std::size_t n_fft = 1;
  while (n_fft < 2 * n) n_fft <<= 1;
  std::vector<double> padded(n_fft, 0.0);
  std::copy(frame.begin(), frame.end(), padded.begin());
  std::vector<fft::Complex> half(n_fft / 2 + 1);
  fft::RealForward(padded, half);
  std::vector<fft::Complex> power(n_fft);
  for (std::size_t j = 0; j < n_fft; ++j)
    power[j] = std::norm(j <= n_fft / 2 ? half[j] : half[n_fft - j]);
  fft::ComplexInverse(power, power);
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 1);
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = power[k].real() / static_cast<double>(n_fft);
  return r;
}

FeatureMatrix Lpcc(const Waveform &wave, const LpccConfig &cfg) {
  if (cfg.n_coeffs < 1)
    throw Error(ErrorCode::kInvalidArgument, "LPCC n_coeffs must be >= 1");
  const Matrix frames = FrameSignal(wave, cfg.framing);
  if (cfg.lpc_order < 1 || cfg.lpc_order >= frames.cols())
    throw Error(ErrorCode::kInvalidArgument,
                "LPC order must be in [1, frame length)");
  Matrix cepstra = Matrix::Zero(frames.rows(), cfg.n_coeffs);
  std::vector<double> frame(static_cast<std::size_t>(frames.cols()));
  for (Index t = 0; t < frames.rows(); ++t) {
    for (Index i = 0; i < frames.cols(); ++i) frame[i] = frames(t, i);
    const std::vector<double> r = FrameAutocorrelation(frame, cfg.lpc_order);
    // Zero-energy (or denormal-energy) frames carry no spectral shape.
    if (!(r[0] > 1e-30)) continue;
    const std::vector<double> c =
        LpcToCepstrum(LevinsonDurbin(r, cfg.lpc_order), cfg.n_coeffs);
    for (int k = 0; k < cfg.n_coeffs; ++k) cepstra(t, k) = c[k];
  }
  FeatureMatrix out(std::move(cepstra), "lpcc", LpccFingerprint(cfg));
  return cfg.cmvn ? Cmvn(out) : out;
}

FeatureMatrix Cmvn(const FeatureMatrix &features, double variance_floor) {
  if (features.frames() < 2)
    throw Error(ErrorCode::kInvalidArgument, "CMVN needs at least 2 frames");
  Matrix v = features.values();
  for (Index d = 0; d < v.cols(); ++d) {
    const double mean = v.col(d).mean();
    const double var = (v.col(d).array() - mean).square().mean();
    if (var < variance_floor) {
      v.col(d).setZero();
    } else {
      v.col(d) = ((v.col(d).array() - mean) / std::sqrt(var)).matrix();
    }
  }
  return FeatureMatrix(std::move(v), features.name(), features.fingerprint());
}

}  // namespace replayspoof
