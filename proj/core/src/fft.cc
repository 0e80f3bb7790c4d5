// fft.cc

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

#include "fft.h"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "replayspoof/error.h"

namespace replayspoof::fft {

namespace {

enum class Kind { kRealForward, kComplexForward, kComplexInverse };

class PlanCache {
 public:
  ~PlanCache() {
    for (auto &[key, plan] : plans_) fftw_destroy_plan(plan);
  }

  // fftw_execute_* with new arrays is thread-safe; only planning is not.
  fftw_plan Get(Kind kind, int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find({kind, n});
    if (it != plans_.end()) return it->second;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = nullptr;
    if (kind == Kind::kRealForward) {
      std::vector<double> in(static_cast<std::size_t>(n));
      std::vector<Complex> out(static_cast<std::size_t>(n / 2 + 1));
      plan = fftw_plan_dft_r2c_1d(n, in.data(),
                                  reinterpret_cast<fftw_complex *>(out.data()),
                                  flags);
    } else {
      std::vector<Complex> a(static_cast<std::size_t>(n)), b(a.size());
      plan = fftw_plan_dft_1d(
          n, reinterpret_cast<fftw_complex *>(a.data()),
          reinterpret_cast<fftw_complex *>(b.data()),
          kind == Kind::kComplexForward ? FFTW_FORWARD : FFTW_BACKWARD, flags);
    }
    plans_.emplace(std::make_pair(kind, n), plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<Kind, int>, fftw_plan> plans_;
};

PlanCache &Cache() {
  static PlanCache cache;
  return cache;
}

void Complex1d(Kind kind, std::span<const Complex> in, std::span<Complex> out) {
  if (in.size() != out.size() || in.empty())
    throw Error(ErrorCode::kShapeMismatch, "complex FFT size mismatch");
  fftw_plan plan = Cache().Get(kind, static_cast<int>(in.size()));
  // Plans are out-of-place; a private copy of the input also makes
  // in == out safe.
  std::vector<Complex> scratch(in.begin(), in.end());
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex *>(scratch.data()),
                   reinterpret_cast<fftw_complex *>(out.data()));
}

}  // namespace

void RealForward(std::span<const double> in, std::span<Complex> out) {
  if (in.empty() || out.size() != in.size() / 2 + 1)
    throw Error(ErrorCode::kShapeMismatch, "real FFT size mismatch");
  fftw_plan plan = Cache().Get(Kind::kRealForward, static_cast<int>(in.size()));
  // r2c plans may scribble on their input, so hand FFTW a private copy.
  std::vector<double> scratch(in.begin(), in.end());
  fftw_execute_dft_r2c(plan, scratch.data(),
                       reinterpret_cast<fftw_complex *>(out.data()));
}

void ComplexForward(std::span<const Complex> in, std::span<Complex> out) {
  Complex1d(Kind::kComplexForward, in, out);
}

void ComplexInverse(std::span<const Complex> in, std::span<Complex> out) {
  Complex1d(Kind::kComplexInverse, in, out);
}

}  // namespace replayspoof::fft
