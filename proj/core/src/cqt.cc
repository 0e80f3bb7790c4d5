// cqt.cc

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

// Constant-Q transform evaluated through the frequency domain.
//
// For bin k the CQT row is the circular cross-correlation y_k[n] =
// sum_d x[n + d] a_k[d] of the zero-padded signal with the centred kernel
// a_k, sampled at n = t * hop. With L = hop * M,
//
//   y_k[t hop] = 1/L sum_{r<M} F_k[r] exp(2 pi i r t / M),
//   F_k[r]     = sum_q X[r + qM] A_k[r + qM],
//
// where X = DFT(x) and A_k is the DFT of a_k with the +i sign. Folding the
// product spectrum modulo M turns the decimated inverse into a size-M
// transform, so each bin costs O(L) plus one small FFT and no intermediate
// full-rate signal is ever formed. The padding L >= len + N_max/2 + 1 keeps
// the circular wrap inside the zero region, so the result equals the direct
// sum exactly (up to rounding).

#include <algorithm>
#include <cmath>
#include <iterator>
#include <list>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "fft.h"
#include "replayspoof/error.h"
#include "replayspoof/tf_transforms.h"

namespace replayspoof {

double CqtConfig::Q() const {
  return 1.0 / (std::exp2(1.0 / bins_per_octave) - 1.0);
}

double CqtConfig::BinFrequency(int k) const {
  return f_min * std::exp2(static_cast<double>(k) / bins_per_octave);
}

int CqtConfig::KernelLength(int k, int sample_rate) const {
  return static_cast<int>(std::ceil(Q() * sample_rate / BinFrequency(k)));
}

namespace {

using fft::Complex;

void Validate(const CqtConfig &cfg, int sample_rate) {
  if (!(cfg.f_min > 0))
    throw Error(ErrorCode::kInvalidArgument, "CQT f_min must be positive");
  if (cfg.bins_per_octave < 1 || cfg.n_bins < 1 || cfg.hop_length < 1)
    throw Error(ErrorCode::kInvalidArgument,
                "CQT bins_per_octave, n_bins and hop_length must be positive");
  if (!(cfg.floor > 0))
    throw Error(ErrorCode::kInvalidArgument, "CQT power floor must be positive");
  const double nyquist = sample_rate / 2.0;
  for (int k = 0; k < cfg.n_bins; ++k) {
    if (cfg.BinFrequency(k) >= nyquist)
      throw Error(ErrorCode::kNyquistViolation,
                  "CQT bin " + std::to_string(k) + " at " +
                      std::to_string(cfg.BinFrequency(k)) +
                      " Hz is not below the Nyquist frequency " +
                      std::to_string(nyquist) + " Hz");
  }
}

int NextPowerOfTwo(long n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Spectra A_k of all kernels for one transform length.
struct KernelBank {
  int sample_rate;
  double f_min;
  int bins_per_octave;
  int n_bins;
  long length;
  std::vector<std::vector<Complex>> spectra;

  bool Matches(const CqtConfig &cfg, int fs, long L) const {
    return sample_rate == fs && f_min == cfg.f_min &&
           bins_per_octave == cfg.bins_per_octave && n_bins == cfg.n_bins &&
           length == L;
  }
};

std::vector<Complex> KernelSpectrum(const CqtConfig &cfg, int k, int fs, long L) {
  const int n = cfg.KernelLength(k, fs);
  const std::vector<double> w = MakeWindow(WindowType::kHann, n);
  double wsum = 0.0;
  for (double v : w) wsum += v;
  const double omega = 2.0 * std::numbers::pi * cfg.BinFrequency(k) / fs;
  std::vector<Complex> a(static_cast<std::size_t>(L), Complex(0.0, 0.0));
  const int half = n / 2;
  for (int m = 0; m < n; ++m) {
    const int d = m - half;
    const long idx = d >= 0 ? d : L + d;
    a[static_cast<std::size_t>(idx)] = std::polar(w[m] / wsum, -omega * d);
  }
  fft::ComplexInverse(a, a);
  return a;
}

// Kernel banks are cached only while small; the default 864-bin
// configuration, with multi-second low-frequency kernels, streams one kernel
// spectrum at a time instead.
constexpr std::size_t kMaxCachedBytes = std::size_t{192} << 20;

std::size_t BankBytes(int n_bins, long L) {
  return static_cast<std::size_t>(n_bins) * static_cast<std::size_t>(L) *
         sizeof(Complex);
}

class KernelCache {
 public:
  // Returns nullptr when the bank would exceed the cache budget.
  std::shared_ptr<const KernelBank> Get(const CqtConfig &cfg, int fs, long L) {
    if (BankBytes(cfg.n_bins, L) > kMaxCachedBytes) return nullptr;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      for (auto it = banks_.begin(); it != banks_.end(); ++it) {
        if ((*it)->Matches(cfg, fs, L)) {
          banks_.splice(banks_.begin(), banks_, it);
          return banks_.front();
        }
      }
    }
    auto bank = std::make_shared<KernelBank>();
    *bank = {fs, cfg.f_min, cfg.bins_per_octave, cfg.n_bins, L, {}};
    bank->spectra.reserve(static_cast<std::size_t>(cfg.n_bins));
    for (int k = 0; k < cfg.n_bins; ++k)
      bank->spectra.push_back(KernelSpectrum(cfg, k, fs, L));
    std::lock_guard<std::mutex> lock(mutex_);
    banks_.push_front(bank);
    std::size_t total = 0;
    for (auto it = banks_.begin(); it != banks_.end();) {
      total += BankBytes((*it)->n_bins, (*it)->length);
      it = total > kMaxCachedBytes ? banks_.erase(it) : std::next(it);
    }
    return bank;
  }

 private:
  std::mutex mutex_;
  std::list<std::shared_ptr<const KernelBank>> banks_;
};

KernelCache &Cache() {
  static KernelCache cache;
  return cache;
}

}  // namespace

Spectrogram CqtPowerSpectrogram(const Waveform &wave, const CqtConfig &cfg) {
  const int fs = wave.sample_rate();
  Validate(cfg, fs);
  const long len = static_cast<long>(wave.size());
  const int hop = cfg.hop_length;
  const long n_frames = (len - 1) / hop + 1;
  const int n_max = cfg.KernelLength(0, fs);
  const long needed = len + n_max / 2 + 1;
  const int m = NextPowerOfTwo(std::max<long>((needed + hop - 1) / hop, n_frames));
  const long L = static_cast<long>(hop) * m;

  std::vector<double> padded(static_cast<std::size_t>(L), 0.0);
  std::copy(wave.samples().begin(), wave.samples().end(), padded.begin());
  std::vector<Complex> half(static_cast<std::size_t>(L / 2 + 1));
  fft::RealForward(padded, half);
  std::vector<Complex> spectrum(static_cast<std::size_t>(L));
  for (long j = 0; j < L; ++j)
    spectrum[j] = j <= L / 2 ? half[j] : std::conj(half[L - j]);

  const std::shared_ptr<const KernelBank> bank = Cache().Get(cfg, fs, L);
  Matrix power(cfg.n_bins, n_frames);
  std::vector<Complex> folded(static_cast<std::size_t>(m));
  std::vector<Complex> scratch;
  const double inv_l = 1.0 / static_cast<double>(L);
  for (int k = 0; k < cfg.n_bins; ++k) {
    if (!bank) scratch = KernelSpectrum(cfg, k, fs, L);
    const std::vector<Complex> &kernel = bank ? bank->spectra[k] : scratch;
    std::fill(folded.begin(), folded.end(), Complex(0.0, 0.0));
    for (long base = 0; base < L; base += m) {
      for (int r = 0; r < m; ++r) folded[r] += spectrum[base + r] * kernel[base + r];
    }
    fft::ComplexInverse(folded, folded);
    for (long t = 0; t < n_frames; ++t) power(k, t) = std::norm(folded[t] * inv_l);
  }

  std::vector<double> freqs(static_cast<std::size_t>(cfg.n_bins));
  for (int k = 0; k < cfg.n_bins; ++k) freqs[k] = cfg.BinFrequency(k);
  return Spectrogram(std::move(power), std::move(freqs),
                     static_cast<double>(hop) / fs, SpectrumScale::kPower);
}

Spectrogram CqtLogPowerSpectrogram(const Waveform &wave, const CqtConfig &cfg) {
  return LogOfPower(CqtPowerSpectrogram(wave, cfg), cfg.floor);
}

}  // namespace replayspoof
