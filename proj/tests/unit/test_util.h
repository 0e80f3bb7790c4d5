// tests/unit/test_util.h

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

#ifndef REPLAYSPOOF_TESTS_UNIT_TEST_UTIL_H_
#define REPLAYSPOOF_TESTS_UNIT_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "replayspoof/error.h"

namespace testutil {

namespace fs = std::filesystem;

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string &tag) {
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            ("replayspoof_" + tag + "_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;
  const fs::path &path() const { return path_; }
  fs::path operator/(const std::string &name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline std::vector<std::uint8_t> ReadBytes(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void WriteBytes(const fs::path &p, const std::vector<std::uint8_t> &b) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char *>(b.data()), static_cast<std::streamsize>(b.size()));
}

inline std::string ReadText(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void WriteText(const fs::path &p, const std::string &s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
}

// Hand-assembled RIFF/WAVE image.
struct WavSpec {
  std::uint16_t format = 1;
  std::uint16_t channels = 1;
  std::uint32_t rate = 16000;
  std::uint16_t bits = 16;
  std::vector<std::int16_t> samples;
  bool extra_chunk = false;
  std::uint32_t truncate_by = 0;
};

inline void Put16(std::vector<std::uint8_t> &b, std::uint32_t v) {
  b.push_back(v & 0xff);
  b.push_back((v >> 8) & 0xff);
}
inline void Put32(std::vector<std::uint8_t> &b, std::uint32_t v) {
  Put16(b, v & 0xffff);
  Put16(b, v >> 16);
}
inline void PutTag(std::vector<std::uint8_t> &b, const char *t) { b.insert(b.end(), t, t + 4); }

inline std::vector<std::uint8_t> MakeWav(const WavSpec &s) {
  std::vector<std::uint8_t> body;
  PutTag(body, "WAVE");
  PutTag(body, "fmt ");
  Put32(body, 16);
  Put16(body, s.format);
  Put16(body, s.channels);
  Put32(body, s.rate);
  Put32(body, s.rate * s.channels * s.bits / 8);
  Put16(body, s.channels * s.bits / 8);
  Put16(body, s.bits);
  if (s.extra_chunk) {
    PutTag(body, "LIST");
    Put32(body, 4);
    PutTag(body, "INFO");
  }
  PutTag(body, "data");
  Put32(body, static_cast<std::uint32_t>(s.samples.size() * 2));
  for (std::int16_t v : s.samples) Put16(body, static_cast<std::uint16_t>(v));
  body.resize(body.size() - s.truncate_by);
  std::vector<std::uint8_t> out;
  PutTag(out, "RIFF");
  Put32(out, static_cast<std::uint32_t>(body.size()));
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

// Collects warnings for the lifetime of the object.
class WarningCapture {
 public:
  WarningCapture()
      : previous_(replayspoof::SetWarningHandler(
            [this](std::string_view m) { messages_.emplace_back(m); })) {}
  ~WarningCapture() { replayspoof::SetWarningHandler(previous_); }
  const std::vector<std::string> &messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
  replayspoof::WarningHandler previous_;
};

template <class Fn>
replayspoof::ErrorCode CodeOf(Fn fn) {
  try {
    fn();
  } catch (const replayspoof::Error &e) {
    return e.code();
  }
  throw std::runtime_error("expected replayspoof::Error");
}

}  // namespace testutil

#endif  // REPLAYSPOOF_TESTS_UNIT_TEST_UTIL_H_
