// tests/unit/test_corpus_protocol.cc

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
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles/oracles.h"
#include "replayspoof/audio_io.h"
#include "replayspoof/corpus.h"
#include "replayspoof/protocol.h"
#include "replayspoof/tf_transforms.h"
#include "test_util.h"

using namespace replayspoof;
using testutil::CodeOf;

namespace {

// Mean power per frequency bin, averaged over frames.
std::vector<double> AverageSpectrum(const Waveform &w, std::vector<double> *freqs) {
  FftConfig cfg;
  cfg.framing.window_seconds = 0.064;
  cfg.framing.hop_seconds = 0.032;
  cfg.n_fft = 1024;
  const Spectrogram s = FftPowerSpectrogram(w, cfg);
  *freqs = s.bin_frequencies();
  std::vector<double> out(s.freq_bins());
  for (Index k = 0; k < s.freq_bins(); ++k) out[k] = s.values().row(k).mean();
  return out;
}

double BandEnergy(const std::vector<double> &spec, const std::vector<double> &freqs,
                  double lo, double hi) {
  double e = 0;
  for (std::size_t k = 0; k < spec.size(); ++k)
    if (freqs[k] >= lo && freqs[k] < hi) e += spec[k];
  return e;
}

// Fraction of spectral energy at or above `cut` Hz.
double HighFraction(const Waveform &w, double cut) {
  std::vector<double> f;
  const std::vector<double> s = AverageSpectrum(w, &f);
  return BandEnergy(s, f, cut, 1e9) / BandEnergy(s, f, 0, 1e9);
}

Waveform WhiteNoise(std::size_t n, unsigned seed, double sd = 0.1) {
  return Waveform(oracle::Gaussian(n, seed, sd), 16000);
}

SynthCorpusConfig SmallCorpus(std::uint64_t seed) {
  SynthCorpusConfig cfg;
  cfg.seed = seed;
  cfg.splits = {{"train", 10, 10}};
  cfg.min_duration = 0.5;
  cfg.max_duration = 0.6;
  return cfg;
}

std::string Text(const std::vector<std::uint8_t> &b) { return {b.begin(), b.end()}; }

}  // namespace

TEST_SUITE("corpus-protocol") {

TEST_CASE("untagged protocol line") {
  const std::vector<Trial> t = ParseProtocol("T_001 genuine S01 P05 - - -\n");
  REQUIRE(t.size() == 1);
  CHECK(t[0] == Trial{"T_001", Label::kGenuine, "S01", "P05", "", "", ""});
}

TEST_CASE("fully tagged protocol line") {
  const std::vector<Trial> t = ParseProtocol("T_002 spoof S01 P05 balcony dev1 mic2");
  REQUIRE(t.size() == 1);
  CHECK(t[0] == Trial{"T_002", Label::kSpoof, "S01", "P05", "balcony", "dev1", "mic2"});
}

TEST_CASE("short protocol line names its line number") {
  try {
    ParseProtocol("T_001 genuine S01 P05 - - -\n\nT_003 genuine S01\n", "p.txt");
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMalformedInput);
    CHECK(std::string(e.what()).find("p.txt:3") != std::string::npos);
  }
}

TEST_CASE("protocol rejects unknown labels and duplicate ids") {
  CHECK(CodeOf([] { ParseProtocol("T_1 bonafide S P - - -"); }) == ErrorCode::kMalformedInput);
  try {
    ParseProtocol("A genuine S P - - -\nB spoof S P - - -\nA spoof S P - - -\n");
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kDuplicateId);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  const std::vector<Trial> u = ParseProtocol("X unknown - - - - -");
  CHECK(u[0].label == Label::kUnknown);
  CHECK(u[0].speaker_id.empty());
}

TEST_CASE("protocol format round-trips") {
  const std::vector<Trial> t{{"a", Label::kGenuine, "S1", "P1", "", "", ""},
                             {"b", Label::kSpoof, "S2", "P2", "e", "p", "r"},
                             {"c", Label::kUnknown, "", "", "", "", ""}};
  CHECK(ParseProtocol(FormatProtocol(t)) == t);
  testutil::TempDir dir("protocol");
  WriteProtocol(t, dir / "x.protocol");
  CHECK(ReadProtocol(dir / "x.protocol") == t);
  CHECK(CodeOf([&] { ReadProtocol(dir / "missing"); }) == ErrorCode::kMissingFile);
}

TEST_CASE("single phrase gives one bucket equal to the input") {
  std::vector<Trial> t;
  for (int i = 0; i < 5; ++i) t.push_back({"t" + std::to_string(i), Label::kGenuine, "S", "P1", "", "", ""});
  const auto buckets = PartitionByPhrase(t);
  REQUIRE(buckets.size() == 1);
  CHECK(buckets.at("P1") == t);
}

TEST_CASE("phrase partition is disjoint and exhaustive") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> phrase(1, 3);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Trial> t;
    for (int i = 0; i < 60; ++i)
      t.push_back({"t" + std::to_string(rep) + "_" + std::to_string(i),
                   (i % 2) ? Label::kSpoof : Label::kGenuine, "S",
                   "P" + std::to_string(phrase(rng)), "", "", ""});
    const auto buckets = PartitionByPhrase(t);
    CHECK(buckets.size() <= 3);
    std::multiset<std::string> seen;
    std::size_t total = 0;
    for (const auto &[key, trials] : buckets) {
      total += trials.size();
      for (const Trial &tr : trials) {
        CHECK(tr.phrase_id == key);
        seen.insert(tr.trial_id);
      }
    }
    CHECK(total == t.size());
    std::multiset<std::string> want;
    for (const Trial &tr : t) want.insert(tr.trial_id);
    CHECK(seen == want);
  }
}

TEST_CASE("near-identity channel passes the signal") {
  // Broadband but below the low-pass transition band.
  std::vector<double> x(8000);
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = 0.3 * std::sin(2 * oracle::kPi * 440.0 * i / 16000.0) +
           0.2 * std::sin(2 * oracle::kPi * 2500.0 * i / 16000.0);
  const Waveform in(x, 16000);
  ReplayChannelConfig ch;
  ch.lowpass_cutoff = 7999.0;
  const Waveform out = SimulateReplay(in, ch, 1);
  REQUIRE(out.size() == in.size());
  double err = 0;
  for (std::size_t i = 0; i < x.size(); ++i) err += std::pow(out[i] - x[i], 2);
  CHECK(std::sqrt(err / x.size()) <= 1e-3);
}

TEST_CASE("silent input stays silent") {
  ReplayChannelConfig ch;
  ch.noise_snr_db = 20.0;
  ch.impulse_response = {1.0, 0.5, 0.25};
  const Waveform out = SimulateReplay(Waveform(std::vector<double>(4000, 0.0), 16000), ch, 2);
  for (double v : out.samples()) CHECK(v == 0.0);
}

TEST_CASE("low-pass at 4 kHz attenuates above 5 kHz by 30 dB") {
  ReplayChannelConfig ch;
  ch.lowpass_cutoff = 4000.0;
  const Waveform out = SimulateReplay(WhiteNoise(32000, 4), ch, 3);
  std::vector<double> f;
  const std::vector<double> s = AverageSpectrum(out, &f);
  const double pass = BandEnergy(s, f, 0, 3500) / 3500.0;
  const double stop = BandEnergy(s, f, 5000, 8001) / 3000.0;
  CHECK(10.0 * std::log10(pass / stop) >= 30.0);
}

TEST_CASE("replay keeps length and range and is seed-deterministic") {
  ReplayChannelConfig ch;
  ch.impulse_response = oracle::Gaussian(300, 5, 0.2);
  ch.impulse_response[0] = 1.0;
  ch.noise_snr_db = 10.0;
  ch.gain = 3.0;
  const Waveform in = WhiteNoise(5000, 6, 0.5);
  const Waveform a = SimulateReplay(in, ch, 42), b = SimulateReplay(in, ch, 42),
                 c = SimulateReplay(in, ch, 43);
  CHECK(a.size() == in.size());
  for (double v : a.samples()) {
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) <= 1.0);
  }
  CHECK(std::equal(a.samples().begin(), a.samples().end(), b.samples().begin()));
  CHECK(!std::equal(a.samples().begin(), a.samples().end(), c.samples().begin()));
}

TEST_CASE("channel validation") {
  ReplayChannelConfig ch;
  ch.lowpass_cutoff = 8000.0;
  CHECK(CodeOf([&] { ValidateChannel(ch, 16000); }) == ErrorCode::kNyquistViolation);
  ch.lowpass_cutoff = 4000.0;
  ch.impulse_response.clear();
  CHECK(CodeOf([&] { ValidateChannel(ch, 16000); }) == ErrorCode::kInvalidArgument);
  ch.impulse_response.assign(kMaxImpulseResponseTaps + 1, 0.0);
  CHECK(CodeOf([&] { ValidateChannel(ch, 16000); }) == ErrorCode::kInvalidArgument);
  ch.impulse_response = {std::numeric_limits<double>::infinity()};
  CHECK(CodeOf([&] { ValidateChannel(ch, 16000); }) == ErrorCode::kNonFinite);
}

TEST_CASE("corpus has the configured trial and file counts") {
  const SynthCorpus c = GenerateSynthCorpus(SmallCorpus(1));
  const std::vector<Trial> t = ParseProtocol(Text(c.files.at("train.protocol")));
  CHECK(t.size() == 20);
  std::set<std::string> ids;
  int genuine = 0, wavs = 0;
  for (const Trial &tr : t) {
    ids.insert(tr.trial_id);
    genuine += tr.label == Label::kGenuine;
    CHECK(c.files.count("wav/" + tr.trial_id + ".wav") == 1);
  }
  for (const auto &[name, bytes] : c.files) wavs += name.rfind("wav/", 0) == 0;
  CHECK(ids.size() == 20);
  CHECK(genuine == 10);
  CHECK(wavs == 20);
  CHECK(c.files.count("manifest.json") == 1);
}

TEST_CASE("corpus generation is byte-identical for a seed") {
  const SynthCorpus a = GenerateSynthCorpus(SmallCorpus(7));
  const SynthCorpus b = GenerateSynthCorpus(SmallCorpus(7));
  const SynthCorpus c = GenerateSynthCorpus(SmallCorpus(8));
  CHECK(a.files == b.files);
  CHECK(a.files != c.files);
  testutil::TempDir dir("corpus");
  WriteSynthCorpus(a, dir.path());
  CHECK(CorpusMatchesDisk(b, dir.path()));
  CHECK(!CorpusMatchesDisk(c, dir.path()));
}

TEST_CASE("spoofed trials carry less high-band energy") {
  SynthCorpusConfig cfg = SmallCorpus(11);
  cfg.splits = {{"train", 20, 20}};
  const SynthCorpus c = GenerateSynthCorpus(cfg);
  const double cut = cfg.cutoff_max_hz;
  double g = 0, s = 0;
  for (const Trial &tr : ParseProtocol(Text(c.files.at("train.protocol")))) {
    const Waveform w = DecodeWav(c.files.at("wav/" + tr.trial_id + ".wav"), tr.trial_id);
    const double h = HighFraction(w, cut);
    if (tr.label == Label::kGenuine) {
      g += h / 20.0;
    } else {
      s += h / 20.0;
      CHECK(!tr.environment.empty());
    }
  }
  CHECK(s < 0.1 * g);
}

TEST_CASE("corpus refuses an unwritable directory") {
  testutil::TempDir dir("corpus_bad");
  testutil::WriteText(dir / "file", "x");
  const SynthCorpus c = GenerateSynthCorpus(SmallCorpus(2));
  CHECK(CodeOf([&] { WriteSynthCorpus(c, dir / "file" / "sub"); }) ==
        ErrorCode::kUnwritablePath);
}

}  // TEST_SUITE
