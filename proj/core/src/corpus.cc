// corpus.cc

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

#include "replayspoof/corpus.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <system_error>

#include <json.hpp>

#include "byte_io.h"
#include "replayspoof/error.h"
#include "replayspoof/protocol.h"
#include "seeding.h"

namespace replayspoof {

void ValidateChannel(const ReplayChannelConfig &channel, int sample_rate) {
  if (channel.impulse_response.empty() ||
      channel.impulse_response.size() > kMaxImpulseResponseTaps)
    throw Error(ErrorCode::kInvalidArgument,
                "impulse response must have 1.." + std::to_string(kMaxImpulseResponseTaps) +
                    " taps");
  for (double v : channel.impulse_response)
    if (!std::isfinite(v))
      throw Error(ErrorCode::kNonFinite, "impulse response is not finite");
  if (!(channel.lowpass_cutoff > 0.0) || !(channel.lowpass_cutoff < sample_rate / 2.0))
    throw Error(ErrorCode::kNyquistViolation,
                "low-pass cutoff must lie in (0, " + std::to_string(sample_rate / 2) + ") Hz");
  if (std::isnan(channel.noise_snr_db))
    throw Error(ErrorCode::kInvalidArgument, "noise SNR is NaN");
  if (!std::isfinite(channel.gain))
    throw Error(ErrorCode::kInvalidArgument, "channel gain must be finite");
}

std::vector<double> WindowedSincLowpass(double cutoff_hz, int sample_rate, int taps) {
  if (taps < 1 || taps % 2 == 0)
    throw Error(ErrorCode::kInvalidArgument, "low-pass needs an odd tap count");
  if (!(cutoff_hz > 0) || !(cutoff_hz < sample_rate / 2.0))
    throw Error(ErrorCode::kNyquistViolation, "low-pass cutoff outside (0, fs/2)");
  const double fc = cutoff_hz / sample_rate;
  const int mid = taps / 2;
  std::vector<double> h(static_cast<std::size_t>(taps));
  double sum = 0.0;
  for (int n = 0; n < taps; ++n) {
    const int m = n - mid;
    const double sinc =
        m == 0 ? 2.0 * fc : std::sin(2.0 * std::numbers::pi * fc * m) / (std::numbers::pi * m);
    const double window =
        taps == 1 ? 1.0 : 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * n / (taps - 1));
    h[n] = sinc * window;
    sum += h[n];
  }
  for (double &v : h) v /= sum;
  return h;
}

Waveform SimulateReplay(const Waveform &wave, const ReplayChannelConfig &channel,
                        std::uint64_t seed) {
  ValidateChannel(channel, wave.sample_rate());
  const std::span<const double> x = wave.samples();
  const std::size_t n = x.size();
  const std::vector<double> &ir = channel.impulse_response;

  std::vector<double> room(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kmax = std::min(ir.size(), i + 1);
    double acc = 0.0;
    for (std::size_t k = 0; k < kmax; ++k) acc += ir[k] * x[i - k];
    room[i] = acc;
  }

  const std::vector<double> lp =
      WindowedSincLowpass(channel.lowpass_cutoff, wave.sample_rate());
  const std::ptrdiff_t mid = kLowpassTaps / 2;
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::ptrdiff_t k = 0; k < kLowpassTaps; ++k) {
      const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + mid - k;
      if (j >= 0 && j < static_cast<std::ptrdiff_t>(n)) acc += lp[k] * room[j];
    }
    y[i] = acc;
  }

  double power = 0.0;
  for (double v : y) power += v * v;
  power /= static_cast<double>(n);
  if (power > 0.0 && std::isfinite(channel.noise_snr_db)) {
    const double sigma = std::sqrt(power / std::pow(10.0, channel.noise_snr_db / 10.0));
    std::mt19937_64 rng(DeriveSeed(seed, 0));
    std::normal_distribution<double> gauss(0.0, sigma);
    for (double &v : y) v += gauss(rng);
  }
  for (double &v : y) v = std::clamp(v * channel.gain, -1.0, 1.0);
  return Waveform(std::move(y), wave.sample_rate());
}

namespace {

struct Voice {
  double f0;
  double tilt;
  double formant_hz;
};

struct Phrase {
  std::vector<double> pitch;  // per-syllable multiplier of f0
  std::vector<double> share;  // per-syllable fraction of the duration
};

Voice DrawVoice(const SynthCorpusConfig &cfg, int speaker) {
  std::mt19937_64 rng(DeriveSeed(cfg.seed, 0x5000 + static_cast<std::uint64_t>(speaker)));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Voice v;
  v.f0 = cfg.min_f0 + (cfg.max_f0 - cfg.min_f0) * u(rng);
  v.tilt = 0.6 + 0.4 * u(rng);
  v.formant_hz = 500.0 + 2500.0 * u(rng);
  return v;
}

Phrase DrawPhrase(const SynthCorpusConfig &cfg, int phrase) {
  std::mt19937_64 rng(DeriveSeed(cfg.seed, 0x6000 + static_cast<std::uint64_t>(phrase)));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int syllables = 3 + static_cast<int>(u(rng) * 3.0);
  Phrase p;
  double total = 0.0;
  for (int s = 0; s < syllables; ++s) {
    p.pitch.push_back(0.8 + 0.45 * u(rng));
    p.share.push_back(0.6 + u(rng));
    total += p.share.back();
  }
  for (double &s : p.share) s /= total;
  return p;
}

// Harmonic "voiced speech": per-syllable pitch targets with vibrato, a
// spectral tilt with one formant-like bump, raised-sine syllable envelopes
// and white room noise.
std::vector<double> RenderUtterance(const SynthCorpusConfig &cfg, const Voice &voice,
                                    const Phrase &phrase, double duration,
                                    double room_snr_db, std::mt19937_64 &rng) {
  const int fs = cfg.sample_rate;
  const std::size_t n = static_cast<std::size_t>(std::lround(duration * fs));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double ceiling = cfg.harmonic_ceiling * fs;
  const double f0_peak = voice.f0 * 1.25 * 1.03;
  const int harmonics = std::max(1, static_cast<int>(ceiling / f0_peak));
  std::vector<std::complex<double>> coef(static_cast<std::size_t>(harmonics));
  for (int h = 1; h <= harmonics; ++h) {
    const double fh = h * voice.f0;
    const double bump = 1.0 + 2.0 * std::exp(-std::pow((fh - voice.formant_hz) / 700.0, 2));
    const double amp = std::pow(static_cast<double>(h), -voice.tilt) * bump;
    coef[h - 1] = std::polar(amp, 2.0 * std::numbers::pi * u(rng));
  }
  const double vibrato_hz = 4.0 + 2.0 * u(rng);
  const double jitter = 0.01 + 0.02 * u(rng);

  std::vector<double> bounds{0.0};
  for (double s : phrase.share) bounds.push_back(bounds.back() + s);
  std::vector<double> out(n, 0.0);
  double phase = 0.0;
  std::size_t syl = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pos = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    while (syl + 1 < phrase.pitch.size() && pos >= bounds[syl + 1]) ++syl;
    const double local = (pos - bounds[syl]) / (bounds[syl + 1] - bounds[syl]);
    const double env = std::pow(std::sin(std::numbers::pi * std::clamp(local, 0.0, 1.0)), 0.6);
    const double t = static_cast<double>(i) / fs;
    const double f0 = voice.f0 * phrase.pitch[syl] *
                      (1.0 + jitter * std::sin(2.0 * std::numbers::pi * vibrato_hz * t));
    phase = std::fmod(phase + 2.0 * std::numbers::pi * f0 / fs, 2.0 * std::numbers::pi);
    const std::complex<double> step = std::polar(1.0, phase);
    std::complex<double> z = step;
    double acc = 0.0;
    for (int h = 1; h <= harmonics && h * f0 < ceiling; ++h) {
      acc += (coef[h - 1] * z).imag();
      z *= step;
    }
    out[i] = env * acc;
  }
  double peak = 0.0;
  for (double v : out) peak = std::max(peak, std::abs(v));
  const double target = 0.5 + 0.2 * u(rng);
  if (peak > 0.0)
    for (double &v : out) v *= target / peak;
  double power = 0.0;
  for (double v : out) power += v * v;
  power /= static_cast<double>(n);
  const double sigma = std::sqrt(power / std::pow(10.0, room_snr_db / 10.0));
  std::normal_distribution<double> gauss(0.0, sigma);
  for (double &v : out) v = std::clamp(v + gauss(rng), -1.0, 1.0);
  return out;
}

struct ChannelDraw {
  ReplayChannelConfig channel;
  int ir_taps;
  double ir_decay;
  std::uint64_t seed;
};

ChannelDraw DrawChannel(const SynthCorpusConfig &cfg, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ChannelDraw d;
  d.ir_taps = cfg.ir_min_taps +
              static_cast<int>(u(rng) * (cfg.ir_max_taps - cfg.ir_min_taps + 1));
  d.ir_taps = std::min(d.ir_taps, cfg.ir_max_taps);
  d.ir_decay = 0.15 * d.ir_taps + 0.15 * d.ir_taps * u(rng);
  std::normal_distribution<double> gauss(0.0, 1.0);
  d.channel.impulse_response.assign(static_cast<std::size_t>(d.ir_taps), 0.0);
  d.channel.impulse_response[0] = 1.0;
  for (int k = 1; k < d.ir_taps; ++k)
    d.channel.impulse_response[k] = 0.25 * std::exp(-k / d.ir_decay) * gauss(rng);
  d.channel.lowpass_cutoff = cfg.cutoff_min_hz + (cfg.cutoff_max_hz - cfg.cutoff_min_hz) * u(rng);
  d.channel.noise_snr_db = cfg.snr_min_db + (cfg.snr_max_db - cfg.snr_min_db) * u(rng);
  d.channel.gain = cfg.gain_min + (cfg.gain_max - cfg.gain_min) * u(rng);
  d.seed = rng();
  return d;
}

std::string Numbered(const char *prefix, int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%0*d", prefix, width, value);
  return buf;
}

void CheckConfig(const SynthCorpusConfig &cfg) {
  auto bad = [](const std::string &what) {
    throw Error(ErrorCode::kInvalidArgument, "corpus config: " + what);
  };
  if (cfg.sample_rate != kCanonicalSampleRate) bad("sample_rate must be 16000");
  if (cfg.speakers < 1 || cfg.phrases < 1) bad("speakers and phrases must be >= 1");
  if (cfg.splits.empty()) bad("no splits");
  for (const CorpusSplit &s : cfg.splits) {
    if (s.name.empty()) bad("split without a name");
    if (s.genuine < 0 || s.spoof < 0 || s.genuine + s.spoof == 0)
      bad("split '" + s.name + "' has no trials");
  }
  if (!(cfg.min_duration > 0.05) || cfg.max_duration < cfg.min_duration)
    bad("durations must satisfy 0.05 < min <= max");
  if (!(cfg.min_f0 > 20) || cfg.max_f0 < cfg.min_f0) bad("f0 range invalid");
  if (!(cfg.harmonic_ceiling > 0) || !(cfg.harmonic_ceiling < 0.5))
    bad("harmonic_ceiling must be in (0, 0.5)");
  if (!(cfg.cutoff_min_hz > 0) || cfg.cutoff_max_hz < cfg.cutoff_min_hz ||
      !(cfg.cutoff_max_hz < cfg.sample_rate / 2.0))
    bad("cutoff range invalid");
  if (cfg.ir_min_taps < 1 || cfg.ir_max_taps < cfg.ir_min_taps ||
      cfg.ir_max_taps > static_cast<int>(kMaxImpulseResponseTaps))
    bad("IR tap range invalid");
  if (cfg.snr_max_db < cfg.snr_min_db || cfg.room_snr_max_db < cfg.room_snr_min_db)
    bad("SNR range invalid");
  if (cfg.gain_max < cfg.gain_min || !(cfg.gain_min > 0)) bad("gain range invalid");
}

std::vector<std::uint8_t> Bytes(const std::string &s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

SynthCorpus GenerateSynthCorpus(const SynthCorpusConfig &cfg) {
  CheckConfig(cfg);
  nlohmann::ordered_json manifest;
  manifest["format"] = "replayspoof-synth-corpus";
  manifest["version"] = 1;
  manifest["seed"] = cfg.seed;
  manifest["sample_rate"] = cfg.sample_rate;

  std::vector<Voice> voices;
  nlohmann::ordered_json jv = nlohmann::ordered_json::array();
  for (int s = 0; s < cfg.speakers; ++s) {
    voices.push_back(DrawVoice(cfg, s));
    jv.push_back({{"id", Numbered("S", s + 1, 2)},
                  {"f0_hz", voices.back().f0},
                  {"tilt", voices.back().tilt},
                  {"formant_hz", voices.back().formant_hz}});
  }
  manifest["speakers"] = jv;
  std::vector<Phrase> phrases;
  nlohmann::ordered_json jp = nlohmann::ordered_json::array();
  for (int p = 0; p < cfg.phrases; ++p) {
    phrases.push_back(DrawPhrase(cfg, p));
    jp.push_back({{"id", Numbered("P", p + 1, 2)},
                  {"pitch", phrases.back().pitch},
                  {"share", phrases.back().share}});
  }
  manifest["phrases"] = jp;

  SynthCorpus corpus;
  nlohmann::ordered_json trials_json = nlohmann::ordered_json::array();
  nlohmann::ordered_json splits_json = nlohmann::ordered_json::array();
  for (std::size_t si = 0; si < cfg.splits.size(); ++si) {
    const CorpusSplit &split = cfg.splits[si];
    const std::uint64_t split_seed = DeriveSeed(cfg.seed, 0x100 + si);
    std::vector<Trial> protocol;
    const int total = split.genuine + split.spoof;
    std::vector<bool> is_genuine(static_cast<std::size_t>(total), false);
    std::fill_n(is_genuine.begin(), split.genuine, true);
    {
      std::mt19937_64 order_rng(split_seed);
      for (int i = total - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        const int j = pick(order_rng);
        const bool tmp = is_genuine[i];
        is_genuine[i] = is_genuine[j];
        is_genuine[j] = tmp;
      }
    }
    for (int i = 0; i < total; ++i) {
      const bool genuine = is_genuine[i];
      const std::uint64_t trial_seed = DeriveSeed(split_seed, static_cast<std::uint64_t>(i));
      std::mt19937_64 rng(trial_seed);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      const int speaker = std::min(cfg.speakers - 1, static_cast<int>(u(rng) * cfg.speakers));
      const int phrase = std::min(cfg.phrases - 1, static_cast<int>(u(rng) * cfg.phrases));
      const double duration =
          cfg.min_duration + (cfg.max_duration - cfg.min_duration) * u(rng);
      const double room_snr =
          cfg.room_snr_min_db + (cfg.room_snr_max_db - cfg.room_snr_min_db) * u(rng);

      Trial trial;
      trial.trial_id = split.name + "_" + Numbered("", i + 1, 4);
      trial.label = genuine ? Label::kGenuine : Label::kSpoof;
      trial.speaker_id = Numbered("S", speaker + 1, 2);
      trial.phrase_id = Numbered("P", phrase + 1, 2);
      nlohmann::ordered_json tj{{"id", trial.trial_id},
                                {"split", split.name},
                                {"label", LabelName(trial.label)},
                                {"speaker", trial.speaker_id},
                                {"phrase", trial.phrase_id},
                                {"path", "wav/" + trial.trial_id + ".wav"},
                                {"seed", trial_seed},
                                {"duration_s", duration},
                                {"room_snr_db", room_snr}};

      std::vector<double> samples =
          RenderUtterance(cfg, voices[speaker], phrases[phrase], duration, room_snr, rng);
      Waveform wave(std::move(samples), cfg.sample_rate);
      if (!genuine) {
        const ChannelDraw draw = DrawChannel(cfg, rng);
        trial.environment = Numbered("env", 1 + static_cast<int>(draw.seed % 4), 1);
        trial.playback = Numbered("pb", 1 + static_cast<int>((draw.seed >> 8) % 5), 1);
        trial.recording = Numbered("rec", 1 + static_cast<int>((draw.seed >> 16) % 5), 1);
        tj["channel"] = {{"ir_taps", draw.ir_taps},
                         {"ir_decay_samples", draw.ir_decay},
                         {"lowpass_cutoff_hz", draw.channel.lowpass_cutoff},
                         {"noise_snr_db", draw.channel.noise_snr_db},
                         {"gain", draw.channel.gain},
                         {"noise_seed", draw.seed}};
        wave = SimulateReplay(wave, draw.channel, draw.seed);
      }
      corpus.files["wav/" + trial.trial_id + ".wav"] = EncodeWav(wave);
      trials_json.push_back(std::move(tj));
      protocol.push_back(std::move(trial));
    }
    const std::string protocol_name = split.name + ".protocol";
    corpus.files[protocol_name] = Bytes(FormatProtocol(protocol));
    splits_json.push_back({{"name", split.name},
                           {"protocol", protocol_name},
                           {"genuine", split.genuine},
                           {"spoof", split.spoof}});
  }
  manifest["splits"] = splits_json;
  manifest["trials"] = trials_json;
  corpus.files["manifest.json"] = Bytes(manifest.dump(2) + "\n");
  return corpus;
}

std::filesystem::path WriteSynthCorpus(const SynthCorpus &corpus,
                                       const std::filesystem::path &out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir / "wav", ec);
  if (ec)
    throw Error(ErrorCode::kUnwritablePath,
                "cannot create corpus directory " + out_dir.string() + ": " + ec.message());
  for (const auto &[rel, bytes] : corpus.files) WriteFileBytes(out_dir / rel, bytes);
  return out_dir / "manifest.json";
}

bool CorpusMatchesDisk(const SynthCorpus &corpus, const std::filesystem::path &root) {
  for (const auto &[rel, bytes] : corpus.files) {
    const std::filesystem::path p = root / rel;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(p, ec)) return false;
    if (std::filesystem::file_size(p, ec) != bytes.size() || ec) return false;
    if (ReadFileBytes(p) != bytes) return false;
  }
  return true;
}

}  // namespace replayspoof
