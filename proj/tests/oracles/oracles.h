// tests/oracles/oracles.h

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

#ifndef REPLAYSPOOF_TESTS_ORACLES_H_
#define REPLAYSPOOF_TESTS_ORACLES_H_

// Slow, direct reference computations. None of these call into the library
// code they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
constexpr double kPi = std::numbers::pi;

inline double RelErr(double got, double want, double abs_floor = 1e-300) {
  return std::abs(got - want) / std::max(std::abs(want), abs_floor);
}

inline double MaxRelErr(const Matrix &got, const Matrix &want) {
  const double scale = std::max(want.cwiseAbs().maxCoeff(), 1e-300);
  return (got - want).cwiseAbs().maxCoeff() / scale;
}

// Periodic Hann, 0.5 - 0.5 cos(2 pi n / N).
inline std::vector<double> Hann(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / n);
  return w;
}

// |sum_n x[n] e^{-2 pi i k n / N}|^2 for k = 0 .. N/2, x zero-padded to N.
inline std::vector<double> DftPower(const std::vector<double> &x, int n_fft) {
  std::vector<double> out(n_fft / 2 + 1);
  for (int k = 0; k <= n_fft / 2; ++k) {
    long double re = 0, im = 0;
    for (std::size_t n = 0; n < x.size(); ++n) {
      const long double ang = -2.0L * std::numbers::pi_v<long double> * k * n / n_fft;
      re += x[n] * std::cos(ang);
      im += x[n] * std::sin(ang);
    }
    out[k] = static_cast<double>(re * re + im * im);
  }
  return out;
}

// Direct constant-Q coefficient magnitude squared, per-bin inner product
// with a Hann-windowed complex exponential centred on sample t * hop.
inline Matrix CqtPower(const std::vector<double> &x, int fs, double f_min, int bpo,
                       int n_bins, int hop) {
  const double q = 1.0 / (std::pow(2.0, 1.0 / bpo) - 1.0);
  const int frames = static_cast<int>((x.size() - 1) / hop) + 1;
  Matrix out(n_bins, frames);
  for (int k = 0; k < n_bins; ++k) {
    const double f = f_min * std::pow(2.0, static_cast<double>(k) / bpo);
    const int len = static_cast<int>(std::ceil(q * fs / f));
    const std::vector<double> w = Hann(len);
    double wsum = 0;
    for (double v : w) wsum += v;
    for (int t = 0; t < frames; ++t) {
      std::complex<long double> acc = 0;
      for (int m = 0; m < len; ++m) {
        const long long idx = static_cast<long long>(t) * hop + m - len / 2;
        if (idx < 0 || idx >= static_cast<long long>(x.size())) continue;
        const long double ang =
            -2.0L * std::numbers::pi_v<long double> * f * (m - len / 2) / fs;
        acc += static_cast<long double>(x[idx] * w[m]) *
               std::complex<long double>(std::cos(ang), std::sin(ang));
      }
      acc /= wsum;
      out(k, t) = static_cast<double>(std::norm(acc));
    }
  }
  return out;
}

// Orthonormal DCT-II by the cosine sum.
inline std::vector<double> DctII(const std::vector<double> &x, std::size_t n_out) {
  const double n = static_cast<double>(x.size());
  std::vector<double> c(n_out);
  for (std::size_t k = 0; k < n_out; ++k) {
    long double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      s += x[i] * std::cos(std::numbers::pi_v<long double> * (i + 0.5L) * k / n);
    c[k] = static_cast<double>(s) * std::sqrt((k == 0 ? 1.0 : 2.0) / n);
  }
  return c;
}

// Prediction coefficients a_1..a_p (A(z) = 1 + sum a_k z^-k) from the
// Toeplitz normal equations R a = -r, solved densely.
inline std::vector<double> YuleWalker(const std::vector<double> &r, int p) {
  Matrix big_r(p, p);
  Vector rhs(p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) big_r(i, j) = r[std::abs(i - j)];
    rhs(i) = -r[i + 1];
  }
  const Vector a = big_r.fullPivLu().solve(rhs);
  return std::vector<double>(a.data(), a.data() + p);
}

// Biased autocorrelation by the lag sum.
inline std::vector<double> Autocorr(const std::vector<double> &x, int max_lag) {
  std::vector<double> r(max_lag + 1, 0.0);
  for (int k = 0; k <= max_lag; ++k)
    for (std::size_t n = k; n < x.size(); ++n) r[k] += x[n] * x[n - k];
  return r;
}

// Diagonal GMM density by explicit per-component Gaussian evaluation.
inline double GmmDensity(const Vector &w, const Matrix &mu, const Matrix &var,
                         const Vector &x) {
  double p = 0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    double g = w(k);
    for (Eigen::Index d = 0; d < x.size(); ++d)
      g *= std::exp(-0.5 * (x(d) - mu(k, d)) * (x(d) - mu(k, d)) / var(k, d)) /
           std::sqrt(2.0 * kPi * var(k, d));
    p += g;
  }
  return p;
}

// Component posteriors for one frame, from the explicit densities.
inline Vector GmmPosterior(const Vector &w, const Matrix &mu, const Matrix &var,
                           const Vector &x) {
  Vector g(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    double v = w(k);
    for (Eigen::Index d = 0; d < x.size(); ++d)
      v *= std::exp(-0.5 * (x(d) - mu(k, d)) * (x(d) - mu(k, d)) / var(k, d)) /
           std::sqrt(2.0 * kPi * var(k, d));
    g(k) = v;
  }
  return g / g.sum();
}

// i-vector posterior mean via an explicit dense supervector system:
// (I + T' S^-1 N T) w = T' S^-1 f with N, S as (K D) x (K D) diagonals.
inline Vector IvectorDense(const Matrix &t, const Matrix &var, const Vector &n,
                           const Matrix &f) {
  const Eigen::Index k_comp = var.rows(), dim = var.cols(), kd = k_comp * dim;
  Matrix big_n = Matrix::Zero(kd, kd), big_s_inv = Matrix::Zero(kd, kd);
  Vector fsup(kd);
  for (Eigen::Index k = 0; k < k_comp; ++k)
    for (Eigen::Index d = 0; d < dim; ++d) {
      const Eigen::Index i = k * dim + d;
      big_n(i, i) = n(k);
      big_s_inv(i, i) = 1.0 / var(k, d);
      fsup(i) = f(k, d);
    }
  const Matrix prec =
      Matrix::Identity(t.cols(), t.cols()) + t.transpose() * big_s_inv * big_n * t;
  return prec.fullPivLu().solve(t.transpose() * big_s_inv * fsup);
}

struct Rates {
  double far, frr;
};

// Rates at threshold t by direct counting: far = spoof >= t, frr = genuine < t.
inline Rates CountRates(const std::vector<double> &g, const std::vector<double> &s, double t) {
  double fa = 0, fr = 0;
  for (double v : s) fa += v >= t;
  for (double v : g) fr += v < t;
  return {fa / s.size(), fr / g.size()};
}

// EER from a sweep over midpoints between consecutive distinct scores plus
// one threshold below and one above everything, counting each point
// directly. The crossing of frr - far is linearly interpolated between
// adjacent sweep points.
inline double EerSweep(const std::vector<double> &g, const std::vector<double> &s) {
  std::vector<double> all(g);
  all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<double> thr;
  thr.push_back(all.front() - 1.0);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) thr.push_back(0.5 * (all[i] + all[i + 1]));
  thr.push_back(all.back() + 1.0);
  Rates prev = CountRates(g, s, thr[0]);
  if (prev.frr - prev.far >= 0) return prev.far;
  for (std::size_t i = 1; i < thr.size(); ++i) {
    const Rates cur = CountRates(g, s, thr[i]);
    const double d1 = cur.frr - cur.far;
    if (d1 >= 0) {
      const double d0 = prev.frr - prev.far;
      if (d1 == 0) return cur.far;
      const double lam = -d0 / (d1 - d0);
      return prev.far + lam * (cur.far - prev.far);
    }
    prev = cur;
  }
  return prev.far;
}

// Nested-loop MFM and 2x2/2 max-pooling on channels-first flat arrays.
inline std::vector<double> Mfm(const std::vector<double> &x, std::size_t c, std::size_t h,
                               std::size_t w) {
  const std::size_t half = c / 2;
  std::vector<double> out(half * h * w);
  for (std::size_t ch = 0; ch < half; ++ch)
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < w; ++j) {
        const double a = x[(ch * h + i) * w + j];
        const double b = x[((ch + half) * h + i) * w + j];
        out[(ch * h + i) * w + j] = a >= b ? a : b;
      }
  return out;
}

inline std::vector<double> MaxPool(const std::vector<double> &x, std::size_t c,
                                   std::size_t h, std::size_t w) {
  const std::size_t oh = h / 2, ow = w / 2;
  std::vector<double> out(c * oh * ow);
  for (std::size_t ch = 0; ch < c; ++ch)
    for (std::size_t i = 0; i < oh; ++i)
      for (std::size_t j = 0; j < ow; ++j) {
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t di = 0; di < 2; ++di)
          for (std::size_t dj = 0; dj < 2; ++dj)
            m = std::max(m, x[(ch * h + 2 * i + di) * w + 2 * j + dj]);
        out[(ch * oh + i) * ow + j] = m;
      }
  return out;
}

inline std::vector<double> Gaussian(std::size_t n, unsigned seed, double sd = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, sd);
  std::vector<double> v(n);
  for (double &x : v) x = dist(rng);
  return v;
}

}  // namespace oracle

#endif  // REPLAYSPOOF_TESTS_ORACLES_H_
