// audio_io.cc

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

#include "replayspoof/audio_io.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "replayspoof/error.h"
#include "byte_io.h"

namespace replayspoof {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::string Describe(std::string_view name) {
  return name.empty() ? std::string("<memory>") : std::string(name);
}

}  // namespace

Waveform::Waveform(std::vector<double> samples, int sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (samples_.empty())
    throw Error(ErrorCode::kInvalidArgument, "waveform has no samples");
  if (sample_rate_ <= 0)
    throw Error(ErrorCode::kInvalidArgument,
                "waveform sample rate must be positive, got " +
                    std::to_string(sample_rate_));
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i]))
      throw Error(ErrorCode::kNonFinite,
                  "non-finite waveform sample at index " + std::to_string(i));
  }
}

Waveform DecodeWav(std::span<const std::uint8_t> bytes, std::string_view name) {
  const std::string who = Describe(name);
  ByteReader in(bytes);
  if (bytes.size() < 12 || in.Tag() != "RIFF")
    throw Error(ErrorCode::kMalformedInput, who + ": not a RIFF container");
  in.U32();  // RIFF size; unreliable in the wild, chunk walk is authoritative
  if (in.Tag() != "WAVE")
    throw Error(ErrorCode::kMalformedInput, who + ": RIFF form is not WAVE");

  bool have_fmt = false;
  std::uint16_t channels = 0, bits = 0;
  std::uint32_t rate = 0;
  while (in.remaining() >= 8) {
    const std::string tag = in.Tag();
    const std::uint32_t size = in.U32();
    if (tag == "fmt ") {
      if (size < 16 || in.remaining() < size)
        throw Error(ErrorCode::kTruncatedData, who + ": short fmt chunk");
      const std::size_t start = in.position();
      std::uint16_t format = in.U16();
      channels = in.U16();
      rate = in.U32();
      in.U32();  // byte rate
      in.U16();  // block align
      bits = in.U16();
      if (format == kFormatExtensible && size >= 40) {
        in.U16();  // cbSize
        in.U16();  // valid bits
        in.U32();  // channel mask
        format = in.U16();  // first two bytes of the subformat GUID
      }
      if (format != kFormatPcm)
        throw Error(ErrorCode::kUnsupportedEncoding,
                    who + ": encoding tag " + std::to_string(format) +
                        " is not integer PCM");
      if (bits != 16)
        throw Error(ErrorCode::kUnsupportedEncoding,
                    who + ": " + std::to_string(bits) +
                        "-bit samples, only 16-bit PCM is supported");
      if (channels != 1)
        throw Error(ErrorCode::kChannelCount,
                    who + ": " + std::to_string(channels) +
                        " channels, expected mono");
      if (rate != static_cast<std::uint32_t>(kCanonicalSampleRate))
        throw Error(ErrorCode::kSampleRate,
                    who + ": sample rate " + std::to_string(rate) +
                        " Hz, expected " +
                        std::to_string(kCanonicalSampleRate));
      have_fmt = true;
      in.Seek(start + size + (size & 1u));
    } else if (tag == "data") {
      if (!have_fmt)
        throw Error(ErrorCode::kMalformedInput,
                    who + ": data chunk precedes fmt chunk");
      if (in.remaining() < size || size % 2 != 0)
        throw Error(ErrorCode::kTruncatedData,
                    who + ": data chunk declares " + std::to_string(size) +
                        " bytes but only " + std::to_string(in.remaining()) +
                        " remain");
      if (size == 0)
        throw Error(ErrorCode::kTruncatedData, who + ": empty data chunk");
      std::vector<double> samples(size / 2);
      for (double &s : samples) s = static_cast<std::int16_t>(in.U16()) / 32768.0;
      return Waveform(std::move(samples), static_cast<int>(rate));
    } else {
      if (in.remaining() < size) break;
      in.Seek(in.position() + size + (size & 1u));
    }
  }
  if (!have_fmt)
    throw Error(ErrorCode::kMalformedInput, who + ": no fmt chunk");
  throw Error(ErrorCode::kTruncatedData, who + ": no data chunk");
}

std::vector<std::uint8_t> EncodeWav(const Waveform &wave) {
  const auto n = static_cast<std::uint32_t>(wave.size());
  ByteWriter out;
  out.Tag("RIFF");
  out.U32(36 + 2 * n);
  out.Tag("WAVE");
  out.Tag("fmt ");
  out.U32(16);
  out.U16(kFormatPcm);
  out.U16(1);
  out.U32(static_cast<std::uint32_t>(wave.sample_rate()));
  out.U32(static_cast<std::uint32_t>(wave.sample_rate()) * 2);
  out.U16(2);
  out.U16(16);
  out.Tag("data");
  out.U32(2 * n);
  std::size_t clipped = 0;
  for (double s : wave.samples()) {
    double v = std::round(s * 32768.0);
    if (v > 32767.0 || v < -32768.0) {
      if (s > 1.0 || s < -1.0) ++clipped;
      v = v > 0 ? 32767.0 : -32768.0;
    }
    out.U16(static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }
  if (clipped > 0)
    Warn("clipped " + std::to_string(clipped) +
         " out-of-range samples while encoding WAV");
  return out.Take();
}

Waveform LoadWav(const std::filesystem::path &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw Error(ErrorCode::kMissingFile,
                "cannot open WAV file " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                                  std::istreambuf_iterator<char>());
  return DecodeWav(bytes, path.string());
}

void WriteWav(const std::filesystem::path &path, const Waveform &wave) {
  WriteFileBytes(path, EncodeWav(wave));
}

}  // namespace replayspoof
