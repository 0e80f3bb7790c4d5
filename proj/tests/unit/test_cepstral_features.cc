// tests/unit/test_cepstral_features.cc

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

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles/oracles.h"
#include "replayspoof/cepstral.h"
#include "replayspoof/feature_io.h"
#include "test_util.h"

using namespace replayspoof;
using testutil::CodeOf;

namespace {

// Light CQT so every case runs in milliseconds.
CqccConfig SmallCqcc() {
  CqccConfig cfg;
  cfg.cqt = {.f_min = 250.0, .bins_per_octave = 12, .n_bins = 60, .hop_length = 256};
  cfg.resample_bins = 32;
  cfg.n_coeffs = 12;
  return cfg;
}

// AR(p) process driven by unit white noise; a follows A(z) = 1 + sum a_k z^-k.
std::vector<double> ArProcess(const std::vector<double> &a, std::size_t n, unsigned seed) {
  const std::vector<double> e = oracle::Gaussian(n + 500, seed);
  std::vector<double> x(n + 500, 0.0);
  for (std::size_t t = 0; t < x.size(); ++t) {
    double v = e[t];
    for (std::size_t k = 0; k < a.size(); ++k)
      if (t > k) v -= a[k] * x[t - k - 1];
    x[t] = v;
  }
  return std::vector<double>(x.begin() + 500, x.end());
}

// Random stable A(z) from reflection coefficients in (-0.9, 0.9).
std::vector<double> RandomStablePolynomial(int p, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  std::vector<double> a;
  for (int i = 0; i < p; ++i) {
    const double k = u(rng);
    std::vector<double> next(a.size() + 1);
    for (std::size_t j = 0; j < a.size(); ++j) next[j] = a[j] + k * a[a.size() - 1 - j];
    next[a.size()] = k;
    a = next;
  }
  return a;
}

// Cepstrum of 1/A(z) read off a dense log-spectrum grid:
// c_m = mean_w log(1/|A(w)|^2) cos(m w).
std::vector<double> CepstrumBySpectrum(const std::vector<double> &a, int n) {
  const int grid = 1 << 14;
  std::vector<double> c(n, 0.0);
  for (int g = 0; g < grid; ++g) {
    const double w = 2.0 * std::numbers::pi * g / grid;
    double re = 1.0, im = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      re += a[k] * std::cos(w * (k + 1));
      im -= a[k] * std::sin(w * (k + 1));
    }
    const double l = -std::log(re * re + im * im);
    for (int m = 1; m < n; ++m) c[m] += l * std::cos(m * w);
  }
  for (double &v : c) v /= grid;
  return c;
}

}  // namespace

TEST_SUITE("cepstral-features") {

TEST_CASE("DCT of a constant vector") {
  const std::vector<double> c = DctIIOrtho(std::vector<double>(16, 2.0), 16);
  CHECK(c[0] == doctest::Approx(2.0 * 4.0).epsilon(1e-14));
  for (int k = 1; k < 16; ++k) CHECK(std::abs(c[k]) < 1e-13);
}

TEST_CASE("DCT matches the cosine-sum oracle") {
  for (int n : {1, 2, 7, 32, 96}) {
    const std::vector<double> x = oracle::Gaussian(n, 100 + n);
    const std::vector<double> got = DctIIOrtho(x, n);
    const std::vector<double> want = oracle::DctII(x, n);
    for (int k = 0; k < n; ++k) CHECK(std::abs(got[k] - want[k]) <= 1e-10);
  }
  const std::vector<double> x = oracle::Gaussian(32, 1);
  CHECK(DctIIOrtho(x, 5).size() == 5);
  CHECK(CodeOf([&] { DctIIOrtho(x, 33); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("DCT inverse and Parseval") {
  const std::vector<double> x = oracle::Gaussian(50, 77);
  const std::vector<double> c = DctIIOrtho(x, 50);
  const std::vector<double> y = InverseDctIIOrtho(c);
  double ex = 0, ec = 0;
  for (int i = 0; i < 50; ++i) {
    CHECK(std::abs(y[i] - x[i]) <= 1e-10);
    ex += x[i] * x[i];
    ec += c[i] * c[i];
  }
  CHECK(std::abs(ex - ec) <= 1e-10 * ex);
}

TEST_CASE("CQCC defaults") {
  CqccConfig cfg;
  CHECK(cfg.resample_bins == 96);
  CHECK(cfg.n_coeffs == 30);
}

TEST_CASE("CQCC of silence is the DCT of a constant spectrum") {
  const CqccConfig cfg = SmallCqcc();
  const FeatureMatrix f = Cqcc(Waveform(std::vector<double>(4000, 0.0), 16000), cfg);
  CHECK(f.dim() == 12);
  for (Index t = 0; t < f.frames(); ++t) {
    CHECK(f.values()(t, 0) ==
          doctest::Approx(std::sqrt(32.0) * std::log(kPowerFloor)).epsilon(1e-12));
    for (Index k = 1; k < 12; ++k) CHECK(std::abs(f.values()(t, k)) < 1e-9);
  }
}

TEST_CASE("uniform resampling is piecewise linear over the geometric grid") {
  const std::vector<double> v = oracle::Gaussian(20 * 3, 4);
  Matrix m = Eigen::Map<const Matrix>(v.data(), 20, 3);
  std::vector<double> f(20);
  for (int i = 0; i < 20; ++i) f[i] = 100.0 * std::pow(2.0, i / 4.0);
  const Matrix got = UniformResample(Spectrogram(m, f, 0.01, SpectrumScale::kLogPower), 33);
  REQUIRE(got.rows() == 33);
  for (int i = 0; i < 33; ++i) {
    const double target = f.front() + (f.back() - f.front()) * i / 32.0;
    int j = 0;
    while (j + 1 < 19 && f[j + 1] <= target) ++j;
    const double a = (target - f[j]) / (f[j + 1] - f[j]);
    for (int t = 0; t < 3; ++t)
      CHECK(got(i, t) == doctest::Approx((1 - a) * m(j, t) + a * m(j + 1, t)).epsilon(1e-12));
  }
}

TEST_CASE("CQCC equals the composition of its stages") {
  const CqccConfig cfg = SmallCqcc();
  const Waveform w(oracle::Gaussian(6000, 21, 0.1), 16000);
  const FeatureMatrix got = Cqcc(w, cfg);
  const Matrix uniform =
      UniformResample(CqtLogPowerSpectrogram(w, cfg.cqt), cfg.resample_bins);
  REQUIRE(got.frames() == uniform.cols());
  for (Index t = 0; t < uniform.cols(); ++t) {
    std::vector<double> col(uniform.rows());
    for (Index i = 0; i < uniform.rows(); ++i) col[i] = uniform(i, t);
    const std::vector<double> want = oracle::DctII(col, cfg.n_coeffs);
    for (int k = 0; k < cfg.n_coeffs; ++k)
      CHECK(got.values()(t, k) == doctest::Approx(want[k]).epsilon(1e-10));
  }
}

TEST_CASE("global gain only moves c0") {
  const CqccConfig cfg = SmallCqcc();
  const std::vector<double> x = oracle::Gaussian(6000, 22, 0.1);
  std::vector<double> y(x);
  const double g = 0.4;
  for (double &v : y) v *= g;
  const Matrix a = Cqcc(Waveform(x, 16000), cfg).values();
  const Matrix b = Cqcc(Waveform(y, 16000), cfg).values();
  const double shift = 2.0 * std::log(g) * std::sqrt(32.0);
  for (Index t = 0; t < a.rows(); ++t) {
    CHECK(b(t, 0) - a(t, 0) == doctest::Approx(shift).epsilon(1e-8));
    for (Index k = 1; k < a.cols(); ++k) CHECK(std::abs(b(t, k) - a(t, k)) < 1e-8);
  }
}

TEST_CASE("CQCC variants: mvn and cmvn") {
  CqccConfig cfg = SmallCqcc();
  const Waveform w(oracle::Gaussian(6000, 23, 0.1), 16000);
  cfg.cmvn = true;
  const Matrix c = Cqcc(w, cfg).values();
  for (Index d = 0; d < c.cols(); ++d) CHECK(std::abs(c.col(d).mean()) < 1e-10);
  cfg.cmvn = false;
  cfg.mvn = true;
  const Matrix m = Cqcc(w, cfg).values();
  const Matrix uniform = UniformResample(MvnSpectrum(CqtLogPowerSpectrogram(w, cfg.cqt)), 32);
  std::vector<double> col(32);
  for (int i = 0; i < 32; ++i) col[i] = uniform(i, 3);
  const std::vector<double> want = oracle::DctII(col, 12);
  for (int k = 0; k < 12; ++k) CHECK(m(3, k) == doctest::Approx(want[k]).epsilon(1e-10));
}

TEST_CASE("Levinson-Durbin matches the normal equations up to order 20") {
  std::mt19937_64 rng(31);
  for (int p : {1, 2, 5, 10, 16, 20}) {
    const std::vector<double> truth = RandomStablePolynomial(p, rng);
    const std::vector<double> x = ArProcess(truth, 4000, 40 + p);
    const std::vector<double> r = oracle::Autocorr(x, p);
    const LpcResult lpc = LevinsonDurbin(r, p);
    const std::vector<double> want = oracle::YuleWalker(r, p);
    for (int k = 0; k < p; ++k) CHECK(std::abs(lpc.a[k] - want[k]) <= 1e-8);
    // Prediction error power from the normal equations.
    double err = r[0];
    for (int k = 0; k < p; ++k) err += want[k] * r[k + 1];
    CHECK(lpc.error == doctest::Approx(err).epsilon(1e-8));
  }
}

TEST_CASE("AR(1) coefficient recovered from a long frame") {
  const std::vector<double> x = ArProcess({-0.9}, 2048 * 8, 99);
  const LpcResult lpc = LevinsonDurbin(oracle::Autocorr(x, 1), 1);
  CHECK(std::abs(lpc.a[0] + 0.9) <= 0.02);
}

TEST_CASE("unstable and degenerate autocorrelations") {
  CHECK(CodeOf([] { LevinsonDurbin(std::vector<double>{1.0, 1.0, 1.0}, 2); }) ==
        ErrorCode::kUnstableFilter);
  CHECK(CodeOf([] { LevinsonDurbin(std::vector<double>{1.0, 2.0}, 1); }) ==
        ErrorCode::kUnstableFilter);
  CHECK(CodeOf([] { LevinsonDurbin(std::vector<double>{0.0, 0.0}, 1); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("autocorrelation matches the lag sum") {
  const std::vector<double> x = oracle::Gaussian(300, 8);
  const std::vector<double> got = FrameAutocorrelation(x, 26);
  const std::vector<double> want = oracle::Autocorr(x, 26);
  for (int k = 0; k <= 26; ++k) CHECK(std::abs(got[k] - want[k]) <= 1e-10 * want[0]);
}

TEST_CASE("LPC cepstrum matches the log-spectrum integral") {
  std::mt19937_64 rng(12);
  const std::vector<double> a = RandomStablePolynomial(8, rng);
  LpcResult lpc;
  lpc.a = a;
  lpc.error = 0.3;
  const std::vector<double> got = LpcToCepstrum(lpc, 40);
  const std::vector<double> want = CepstrumBySpectrum(a, 40);
  CHECK(got[0] == doctest::Approx(std::log(0.3)));
  for (int m = 1; m < 40; ++m) CHECK(std::abs(got[m] - want[m]) <= 1e-9);
}

TEST_CASE("LPCC defaults, shape and zero frames") {
  LpccConfig cfg;
  CHECK(cfg.n_coeffs == 78);
  CHECK(cfg.lpc_order == 26);
  CHECK(cfg.framing.FrameLength(16000) == 2048);
  CHECK(cfg.framing.HopLength(16000) == 256);
  std::vector<double> x = oracle::Gaussian(16000, 5, 0.1);
  std::fill(x.begin(), x.begin() + 4096, 0.0);
  const FeatureMatrix f = Lpcc(Waveform(x, 16000), cfg);
  CHECK(f.dim() == 78);
  CHECK(f.frames() == (16000 - 2048) / 256 + 1);
  CHECK(f.values().row(0).cwiseAbs().maxCoeff() == 0.0);
  CHECK(f.values().row(f.frames() - 1).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("LPCC frame equals autocorrelation, Levinson and recursion applied by hand") {
  LpccConfig cfg;
  cfg.framing = {.window_seconds = 0.032, .hop_seconds = 0.016, .window = WindowType::kHann};
  cfg.lpc_order = 12;
  cfg.n_coeffs = 20;
  const std::vector<double> x = ArProcess({-1.2, 0.5}, 3000, 17);
  const FeatureMatrix f = Lpcc(Waveform(x, 16000), cfg);
  const Matrix frames = FrameSignal(x, 512, 256, WindowType::kHann);
  std::vector<double> fr(512);
  for (int n = 0; n < 512; ++n) fr[n] = frames(2, n);
  const std::vector<double> r = oracle::Autocorr(fr, 12);
  const std::vector<double> a = oracle::YuleWalker(r, 12);
  const std::vector<double> c = CepstrumBySpectrum(a, 20);
  for (int m = 1; m < 20; ++m) CHECK(std::abs(f.values()(2, m) - c[m]) <= 1e-7);
}

TEST_CASE("CMVN moments, idempotence and constant columns") {
  const std::vector<double> v = oracle::Gaussian(100 * 20, 3, 2.0);
  Matrix m = Eigen::Map<const Matrix>(v.data(), 100, 20);
  m.col(7).setConstant(4.0);
  const FeatureMatrix once = Cmvn(FeatureMatrix(m, "x"));
  for (Index d = 0; d < 20; ++d) {
    const double mean = once.values().col(d).mean();
    const double var = (once.values().col(d).array() - mean).square().mean();
    CHECK(std::abs(mean) < 1e-10);
    if (d == 7) {
      CHECK(once.values().col(d).cwiseAbs().maxCoeff() == 0.0);
    } else {
      CHECK(std::abs(var - 1.0) < 1e-10);
    }
  }
  const FeatureMatrix twice = Cmvn(once);
  CHECK((twice.values() - once.values()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(CodeOf([] { Cmvn(FeatureMatrix(Matrix::Ones(1, 3), "x")); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("feature container layout and round trip") {
  const std::vector<double> v = oracle::Gaussian(5 * 3, 6);
  FeatureMatrix f(Eigen::Map<const Matrix>(v.data(), 5, 3), "lpcc", "order=2");
  const std::vector<std::uint8_t> bytes = EncodeFeatureDump(ToDump(f));
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "RSFT");
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 3);  // F = dim
  CHECK(bytes[9] == 5);  // T = frames
  const FeatureMatrix back = FromDump(DecodeFeatureDump(bytes, "mem"));
  CHECK(back.name() == "lpcc");
  CHECK(back.fingerprint() == "order=2");
  CHECK((back.values() - f.values()).cwiseAbs().maxCoeff() <= 1e-6);
  // First value: row 0, column 0 of F x T = frame 0 dim 0, as float32 LE.
  float first;
  std::memcpy(&first, bytes.data() + 13, 4);
  CHECK(first == static_cast<float>(f.values()(0, 0)));
  std::vector<std::uint8_t> cut(bytes.begin(), bytes.begin() + 20);
  CHECK(CodeOf([&] { DecodeFeatureDump(cut, "cut"); }) == ErrorCode::kTruncatedData);
}

}  // TEST_SUITE
