// benchmarks/bench_main.cc

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
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "replayspoof/cepstral.h"
#include "replayspoof/eval.h"
#include "replayspoof/gmm.h"
#include "replayspoof/ivector.h"
#include "replayspoof/neural.h"
#include "replayspoof/tf_transforms.h"

namespace rs = replayspoof;

namespace {

std::vector<double> Noise(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 0.1);
  std::vector<double> x(n);
  for (double &v : x) v = g(rng);
  return x;
}

rs::Matrix NoiseMatrix(rs::Index rows, rs::Index cols, unsigned seed) {
  const std::vector<double> v = Noise(static_cast<std::size_t>(rows * cols), seed);
  return Eigen::Map<const rs::Matrix>(v.data(), rows, cols) * 10.0;
}

void BM_FftPower(benchmark::State &state) {
  const rs::Waveform w(Noise(16000, 1), 16000);
  rs::FftConfig cfg;
  cfg.n_fft = static_cast<int>(state.range(0));
  cfg.framing = {.window_seconds = cfg.n_fft / 16000.0, .hop_seconds = 0.01,
                 .window = rs::WindowType::kHann};
  for (auto _ : state) benchmark::DoNotOptimize(rs::FftPowerSpectrogram(w, cfg));
}
BENCHMARK(BM_FftPower)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_Cqt(benchmark::State &state) {
  const rs::Waveform w(Noise(16000, 2), 16000);
  const rs::CqtConfig cfg{.f_min = 62.5, .bins_per_octave = 24,
                          .n_bins = static_cast<int>(state.range(0)), .hop_length = 256};
  for (auto _ : state) benchmark::DoNotOptimize(rs::CqtPowerSpectrogram(w, cfg));
}
BENCHMARK(BM_Cqt)->Arg(96)->Arg(168)->Unit(benchmark::kMillisecond);

void BM_Lpcc(benchmark::State &state) {
  const rs::Waveform w(Noise(16000, 3), 16000);
  const rs::LpccConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(rs::Lpcc(w, cfg));
}
BENCHMARK(BM_Lpcc)->Unit(benchmark::kMillisecond);

void BM_GmmLoglik(benchmark::State &state) {
  const rs::Index k = state.range(0), d = 30;
  const rs::GmmModel m(rs::Vector::Constant(k, 1.0 / k), NoiseMatrix(k, d, 4),
                       rs::Matrix::Ones(k, d));
  const rs::Matrix frames = NoiseMatrix(1000, d, 5);
  for (auto _ : state) benchmark::DoNotOptimize(rs::GmmAvgLoglik(m, frames));
  state.SetItemsProcessed(state.iterations() * frames.rows());
}
BENCHMARK(BM_GmmLoglik)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Ivector(benchmark::State &state) {
  const rs::Index k = 64, d = 30, r = state.range(0);
  const rs::GmmModel ubm(rs::Vector::Constant(k, 1.0 / k), NoiseMatrix(k, d, 6),
                         rs::Matrix::Ones(k, d));
  const rs::TotalVariabilityModel tv(ubm, NoiseMatrix(k * d, r, 7) * 0.1);
  const rs::BaumWelchStats st = rs::ComputeBaumWelchStats(ubm, NoiseMatrix(300, d, 8));
  for (auto _ : state) benchmark::DoNotOptimize(rs::ExtractIvector(tv, st));
}
BENCHMARK(BM_Ivector)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Eer(benchmark::State &state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> g = Noise(n, 9), s = Noise(n, 10);
  for (double &v : g) v += 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(rs::ComputeEer(g, s));
}
BENCHMARK(BM_Eer)->Arg(1000)->Arg(100000);

void BM_MfmMaxPool(benchmark::State &state) {
  const rs::Tensor3 x(32, 864, 400, Noise(32 * 864 * 400, 11));
  for (auto _ : state) benchmark::DoNotOptimize(rs::MaxPool2x2(rs::Mfm(x)));
}
BENCHMARK(BM_MfmMaxPool)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
