// replayspoof/audio_io.h

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

#ifndef REPLAYSPOOF_AUDIO_IO_H_
#define REPLAYSPOOF_AUDIO_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace replayspoof {

/// Every file the toolkit reads or writes is 16 kHz, 16-bit, mono PCM.
inline constexpr int kCanonicalSampleRate = 16000;

/// Mono PCM signal with nominal amplitude range [-1, 1]. Immutable once
/// constructed; the constructor rejects empty or non-finite input.
class Waveform {
 public:
  Waveform(std::vector<double> samples, int sample_rate);

  std::span<const double> samples() const { return samples_; }
  double operator[](std::size_t i) const { return samples_[i]; }
  std::size_t size() const { return samples_.size(); }
  int sample_rate() const { return sample_rate_; }
  double duration_seconds() const {
    return static_cast<double>(samples_.size()) / sample_rate_;
  }

 private:
  std::vector<double> samples_;
  int sample_rate_;
};

/// Parses a RIFF/WAVE byte image. `name` only appears in error messages.
/// Unknown chunks are skipped; only `fmt ` and `data` are required.
Waveform DecodeWav(std::span<const std::uint8_t> bytes, std::string_view name);

/// Serializes to a canonical 44-byte-header PCM16 mono image. Samples
/// outside [-1, 1] are clipped (one warning per call); 1.0 maps to 32767.
std::vector<std::uint8_t> EncodeWav(const Waveform &wave);

Waveform LoadWav(const std::filesystem::path &path);
void WriteWav(const std::filesystem::path &path, const Waveform &wave);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_AUDIO_IO_H_
