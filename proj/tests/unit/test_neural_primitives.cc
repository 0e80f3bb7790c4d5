// tests/unit/test_neural_primitives.cc

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
#include <limits>
#include <vector>

#include "doctest.h"
#include "oracles/oracles.h"
#include "replayspoof/neural.h"
#include "test_util.h"

using namespace replayspoof;
using testutil::CodeOf;

namespace {

Tensor3 RandomTensor(std::size_t c, std::size_t h, std::size_t w, unsigned seed) {
  return Tensor3(c, h, w, oracle::Gaussian(c * h * w, seed));
}

// Sum of upstream * mfm(x), the scalar whose gradient MfmBackward returns.
double Loss(const Tensor3 &x, const Tensor3 &up) {
  const Tensor3 y = Mfm(x);
  double s = 0;
  for (std::size_t i = 0; i < y.values().size(); ++i) s += y.values()[i] * up.values()[i];
  return s;
}

}  // namespace

TEST_SUITE("neural-primitives") {

TEST_CASE("mfm of identical halves returns the half") {
  const Tensor3 half = RandomTensor(3, 4, 5, 1);
  std::vector<double> v = half.values();
  v.insert(v.end(), half.values().begin(), half.values().end());
  CHECK(Mfm(Tensor3(6, 4, 5, v)) == half);
}

TEST_CASE("mfm of a hand example") {
  const Tensor3 y = Mfm(Tensor3(2, 1, 2, {1, 2, 3, 0}));
  CHECK(y.channels() == 1);
  CHECK(y.values() == std::vector<double>{3, 2});
}

TEST_CASE("mfm matches the nested-loop oracle exactly") {
  const Tensor3 x = RandomTensor(8, 5, 7, 2);
  CHECK(Mfm(x).values() == oracle::Mfm(x.values(), 8, 5, 7));
}

TEST_CASE("mfm dominates both halves and equals one of them") {
  const Tensor3 x = RandomTensor(6, 3, 4, 3);
  const Tensor3 y = Mfm(x);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const double a = x(c, i, j), b = x(c + 3, i, j), m = y(c, i, j);
        CHECK(m >= a);
        CHECK(m >= b);
        CHECK((m == a || m == b));
      }
}

TEST_CASE("mfm is positively homogeneous") {
  const Tensor3 x = RandomTensor(4, 6, 6, 4);
  for (double alpha : {0.0, 0.5, 1.0, 3.0, 1024.0}) {
    std::vector<double> scaled = x.values();
    for (double &v : scaled) v *= alpha;
    std::vector<double> want = Mfm(x).values();
    for (double &v : want) v *= alpha;
    CHECK(Mfm(Tensor3(4, 6, 6, scaled)).values() == want);
  }
}

TEST_CASE("mfm backward routes to the larger first half") {
  Tensor3 x(4, 2, 3);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        x(c, i, j) = 10.0 + c + i + j;
        x(c + 2, i, j) = -1.0 * (c + i + j);
      }
  const Tensor3 up = RandomTensor(2, 2, 3, 5);
  const Tensor3 g = MfmBackward(x, up);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(g(c, i, j) == up(c, i, j));
        CHECK(g(c + 2, i, j) == 0.0);
      }
}

TEST_CASE("mfm backward sends ties to the first half") {
  const Tensor3 x(2, 1, 1, {0.25, 0.25});
  const Tensor3 g = MfmBackward(x, Tensor3(1, 1, 1, {7.0}));
  CHECK(g(0, 0, 0) == 7.0);
  CHECK(g(1, 0, 0) == 0.0);
}

TEST_CASE("mfm backward matches central differences") {
  const double h = 1e-5;
  for (unsigned seed = 0; seed < 5; ++seed) {
    const Tensor3 x = RandomTensor(6, 4, 5, 10 + seed);
    const Tensor3 up = RandomTensor(3, 4, 5, 20 + seed);
    const Tensor3 g = MfmBackward(x, up);
    const std::size_t half = x.values().size() / 2;
    for (std::size_t i = 0; i < x.values().size(); ++i) {
      const std::size_t partner = i < half ? i + half : i - half;
      // Skip elements within the step of a tie, where max is not differentiable.
      if (std::abs(x.values()[i] - x.values()[partner]) < 10 * h) continue;
      Tensor3 plus = x, minus = x;
      plus.values()[i] += h;
      minus.values()[i] -= h;
      const double fd = (Loss(plus, up) - Loss(minus, up)) / (2 * h);
      const double an = g.values()[i];
      if (an == 0.0) {
        CHECK(std::abs(fd) <= 1e-9);
      } else {
        CHECK(oracle::RelErr(an, fd) <= 1e-6);
      }
    }
  }
}

TEST_CASE("max pool of a constant tensor") {
  const Tensor3 y = MaxPool2x2(Tensor3(2, 6, 4, std::vector<double>(48, -1.5)));
  CHECK(y.channels() == 2);
  CHECK(y.height() == 3);
  CHECK(y.width() == 2);
  CHECK(y.values() == std::vector<double>(12, -1.5));
}

TEST_CASE("max pool of one window") {
  CHECK(MaxPool2x2(Tensor3(1, 2, 2, {1, 2, 3, 4})).values() == std::vector<double>{4});
}

TEST_CASE("max pool matches the nested-loop oracle and drops odd edges") {
  const Tensor3 x = RandomTensor(3, 8, 10, 30);
  CHECK(MaxPool2x2(x).values() == oracle::MaxPool(x.values(), 3, 8, 10));
  const Tensor3 odd = RandomTensor(2, 5, 7, 31);
  const Tensor3 y = MaxPool2x2(odd);
  CHECK(y.height() == 2);
  CHECK(y.width() == 3);
  CHECK(y.values() == oracle::MaxPool(odd.values(), 2, 5, 7));
}

TEST_CASE("every pooled value is the max of its four sources") {
  const Tensor3 x = RandomTensor(2, 6, 6, 32);
  const Tensor3 y = MaxPool2x2(x);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const double m = std::max({x(c, 2 * i, 2 * j), x(c, 2 * i + 1, 2 * j),
                                   x(c, 2 * i, 2 * j + 1), x(c, 2 * i + 1, 2 * j + 1)});
        CHECK(y(c, i, j) == m);
      }
}

TEST_CASE("tensor and layer errors") {
  CHECK(CodeOf([] { Tensor3(0, 1, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { Tensor3(1, 1, 2, {1.0}); }) == ErrorCode::kShapeMismatch);
  CHECK(CodeOf([] {
          Tensor3(1, 1, 1, {std::numeric_limits<double>::quiet_NaN()});
        }) == ErrorCode::kNonFinite);
  CHECK(CodeOf([] { Mfm(Tensor3(3, 2, 2)); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { MfmBackward(Tensor3(4, 2, 2), Tensor3(2, 2, 3)); }) ==
        ErrorCode::kShapeMismatch);
  CHECK(CodeOf([] { MaxPool2x2(Tensor3(1, 1, 4)); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { MaxPool2x2(Tensor3(1, 4, 1)); }) == ErrorCode::kInvalidArgument);
}

}  // TEST_SUITE
