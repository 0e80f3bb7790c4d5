// replayspoof/neural.h

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

#ifndef REPLAYSPOOF_NEURAL_H_
#define REPLAYSPOOF_NEURAL_H_

#include <cstddef>
#include <vector>

namespace replayspoof {

/// Channels-first dense tensor: element (c, h, w) lives at
/// (c * height + h) * width + w.
class Tensor3 {
 public:
  /// Zero-filled. All dims must be >= 1.
  Tensor3(std::size_t channels, std::size_t height, std::size_t width);
  /// Takes ownership of values; size and finiteness are checked.
  Tensor3(std::size_t channels, std::size_t height, std::size_t width,
          std::vector<double> values);

  std::size_t channels() const { return c_; }
  std::size_t height() const { return h_; }
  std::size_t width() const { return w_; }
  const std::vector<double> &values() const { return v_; }
  std::vector<double> &values() { return v_; }

  double &operator()(std::size_t c, std::size_t h, std::size_t w) {
    return v_[(c * h_ + h) * w_ + w];
  }
  double operator()(std::size_t c, std::size_t h, std::size_t w) const {
    return v_[(c * h_ + h) * w_ + w];
  }

  bool operator==(const Tensor3 &) const = default;

 private:
  std::size_t c_, h_, w_;
  std::vector<double> v_;
};

/// out[c] = max(x[c], x[c + k]) element-wise, k = channels / 2.
Tensor3 Mfm(const Tensor3 &x);

/// Routes upstream (k channels) to the winning half of x; ties go to the
/// first half.
Tensor3 MfmBackward(const Tensor3 &x, const Tensor3 &upstream);

/// Non-overlapping 2x2 max with stride 2; an odd trailing row or column is
/// dropped.
Tensor3 MaxPool2x2(const Tensor3 &x);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_NEURAL_H_
