// fft.h

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

// Thin FFTW front end. Plans are created once per (kind, size) with
// FFTW_ESTIMATE | FFTW_UNALIGNED, so results do not depend on buffer
// alignment or planner timing and repeated runs are bit-identical.

#ifndef REPLAYSPOOF_FFT_H_
#define REPLAYSPOOF_FFT_H_

#include <complex>
#include <span>

namespace replayspoof::fft {

using Complex = std::complex<double>;

/// Forward DFT of a real sequence of length n = in.size();
/// out.size() must be n/2 + 1. Unnormalized.
void RealForward(std::span<const double> in, std::span<Complex> out);

/// Complex DFT of length n = in.size() (= out.size()). Unnormalized in both
/// directions; inverse uses exp(+2 pi i jk/n). in and out may alias.
void ComplexForward(std::span<const Complex> in, std::span<Complex> out);
void ComplexInverse(std::span<const Complex> in, std::span<Complex> out);

}  // namespace replayspoof::fft

#endif  // REPLAYSPOOF_FFT_H_
