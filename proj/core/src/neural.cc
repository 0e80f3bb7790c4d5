// neural.cc

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

#include "replayspoof/neural.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "replayspoof/error.h"

namespace replayspoof {

Tensor3::Tensor3(std::size_t channels, std::size_t height, std::size_t width)
    : c_(channels), h_(height), w_(width) {
  if (c_ == 0 || h_ == 0 || w_ == 0)
    throw Error(ErrorCode::kInvalidArgument, "tensor dimensions must be >= 1");
  v_.assign(c_ * h_ * w_, 0.0);
}

Tensor3::Tensor3(std::size_t channels, std::size_t height, std::size_t width,
                 std::vector<double> values)
    : c_(channels), h_(height), w_(width), v_(std::move(values)) {
  if (c_ == 0 || h_ == 0 || w_ == 0)
    throw Error(ErrorCode::kInvalidArgument, "tensor dimensions must be >= 1");
  if (v_.size() != c_ * h_ * w_)
    throw Error(ErrorCode::kShapeMismatch,
                "tensor expects " + std::to_string(c_ * h_ * w_) + " values, got " +
                    std::to_string(v_.size()));
  for (double v : v_)
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFinite, "tensor value not finite");
}

Tensor3 Mfm(const Tensor3 &x) {
  if (x.channels() % 2 != 0)
    throw Error(ErrorCode::kInvalidArgument,
                "MFM needs an even channel count, got " + std::to_string(x.channels()));
  const std::size_t k = x.channels() / 2;
  const std::size_t plane = x.height() * x.width();
  Tensor3 out(k, x.height(), x.width());
  const double *a = x.values().data();
  const double *b = a + k * plane;
  double *o = out.values().data();
  for (std::size_t i = 0; i < k * plane; ++i) o[i] = std::max(a[i], b[i]);
  return out;
}

Tensor3 MfmBackward(const Tensor3 &x, const Tensor3 &upstream) {
  if (x.channels() % 2 != 0)
    throw Error(ErrorCode::kInvalidArgument, "MFM needs an even channel count");
  const std::size_t k = x.channels() / 2;
  if (upstream.channels() != k || upstream.height() != x.height() ||
      upstream.width() != x.width())
    throw Error(ErrorCode::kShapeMismatch, "MFM upstream gradient has the wrong shape");
  const std::size_t plane = x.height() * x.width();
  Tensor3 grad(x.channels(), x.height(), x.width());
  const double *a = x.values().data();
  const double *b = a + k * plane;
  const double *g = upstream.values().data();
  double *out = grad.values().data();
  for (std::size_t i = 0; i < k * plane; ++i) {
    if (a[i] >= b[i]) out[i] = g[i];
    else out[k * plane + i] = g[i];
  }
  return grad;
}

Tensor3 MaxPool2x2(const Tensor3 &x) {
  if (x.height() < 2 || x.width() < 2)
    throw Error(ErrorCode::kInvalidArgument, "2x2 pooling needs height and width >= 2");
  const std::size_t oh = x.height() / 2, ow = x.width() / 2;
  Tensor3 out(x.channels(), oh, ow);
  for (std::size_t c = 0; c < x.channels(); ++c)
    for (std::size_t i = 0; i < oh; ++i)
      for (std::size_t j = 0; j < ow; ++j)
        out(c, i, j) = std::max({x(c, 2 * i, 2 * j), x(c, 2 * i, 2 * j + 1),
                                 x(c, 2 * i + 1, 2 * j), x(c, 2 * i + 1, 2 * j + 1)});
  return out;
}

}  // namespace replayspoof
