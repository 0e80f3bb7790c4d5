// replayspoof/corpus.h

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

#ifndef REPLAYSPOOF_CORPUS_H_
#define REPLAYSPOOF_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "replayspoof/audio_io.h"

namespace replayspoof {

/// Loudspeaker-room-microphone stand-in applied to a clean utterance.
struct ReplayChannelConfig {
  std::vector<double> impulse_response{1.0};
  double lowpass_cutoff = 4000.0;
  /// +infinity disables the additive noise.
  double noise_snr_db = std::numeric_limits<double>::infinity();
  double gain = 1.0;
};

constexpr std::size_t kMaxImpulseResponseTaps = 4096;
constexpr int kLowpassTaps = 63;

/// Throws kInvalidArgument for an empty or over-long IR, a cutoff outside
/// (0, fs/2), a NaN SNR or a non-finite gain.
void ValidateChannel(const ReplayChannelConfig &channel, int sample_rate);

/// Hamming-windowed sinc low-pass with unit DC gain.
std::vector<double> WindowedSincLowpass(double cutoff_hz, int sample_rate,
                                        int taps = kLowpassTaps);

/// IR convolution (tail trimmed), zero-phase FIR low-pass, white noise at
/// noise_snr_db below the signal power (skipped for silent input), gain,
/// then clipping to [-1, 1]. Same length as the input.
Waveform SimulateReplay(const Waveform &wave, const ReplayChannelConfig &channel,
                        std::uint64_t seed);

struct CorpusSplit {
  std::string name;
  int genuine = 0;
  int spoof = 0;
};

struct SynthCorpusConfig {
  std::uint64_t seed = 0;
  int sample_rate = kCanonicalSampleRate;
  int speakers = 6;
  int phrases = 3;
  std::vector<CorpusSplit> splits{{"train", 100, 100}, {"eval", 50, 50}};
  double min_duration = 0.9;
  double max_duration = 1.3;
  double min_f0 = 95.0;
  double max_f0 = 240.0;
  /// Highest harmonic frequency as a fraction of the sample rate.
  double harmonic_ceiling = 0.48;
  /// Genuine recordings carry white room noise at an SNR in this range.
  double room_snr_min_db = 35.0;
  double room_snr_max_db = 50.0;
  // Replay channel draws.
  double cutoff_min_hz = 3000.0;
  double cutoff_max_hz = 5000.0;
  double snr_min_db = 25.0;
  double snr_max_db = 40.0;
  int ir_min_taps = 64;
  int ir_max_taps = 512;
  double gain_min = 0.7;
  double gain_max = 1.0;
};

/// Every file of a corpus, keyed by path relative to the corpus root:
/// wav/<trial>.wav, <split>.protocol and manifest.json.
struct SynthCorpus {
  std::map<std::string, std::vector<std::uint8_t>> files;
};

SynthCorpus GenerateSynthCorpus(const SynthCorpusConfig &cfg);

/// Writes every file under out_dir and returns the manifest path.
/// Throws kUnwritablePath naming the directory on failure.
std::filesystem::path WriteSynthCorpus(const SynthCorpus &corpus,
                                       const std::filesystem::path &out_dir);

/// True when every corpus file exists under root with identical bytes.
bool CorpusMatchesDisk(const SynthCorpus &corpus, const std::filesystem::path &root);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_CORPUS_H_
