// tools/pipeline_config.cc

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

#include "pipeline_config.h"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "replayspoof/error.h"

namespace replayspoof::cli {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string &path, const std::string &what) {
  throw Error(ErrorCode::kInvalidArgument, "config " + path + ": " + what);
}

// Typed access to one JSON object that remembers which keys were read so
// that misspelled keys are reported instead of silently ignored.
class Section {
 public:
  Section(const json &j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) Fail(path_, "expected an object");
  }

  bool Has(const std::string &key) const { return j_.contains(key); }
  std::string Path(const std::string &key) const { return path_ + "." + key; }

  const json &Raw(const std::string &key) {
    seen_.insert(key);
    return j_.at(key);
  }

  double Number(const std::string &key, double fallback) {
    if (!Has(key)) return fallback;
    const json &v = Raw(key);
    if (!v.is_number()) Fail(Path(key), "expected a number");
    return v.get<double>();
  }

  int Integer(const std::string &key, int fallback) {
    if (!Has(key)) return fallback;
    const json &v = Raw(key);
    if (!v.is_number_integer()) Fail(Path(key), "expected an integer");
    return v.get<int>();
  }

  std::uint64_t Unsigned(const std::string &key, std::uint64_t fallback) {
    if (!Has(key)) return fallback;
    const json &v = Raw(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      Fail(Path(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }

  bool Bool(const std::string &key, bool fallback) {
    if (!Has(key)) return fallback;
    const json &v = Raw(key);
    if (!v.is_boolean()) Fail(Path(key), "expected true or false");
    return v.get<bool>();
  }

  std::string String(const std::string &key, const std::string &fallback) {
    if (!Has(key)) return fallback;
    const json &v = Raw(key);
    if (!v.is_string()) Fail(Path(key), "expected a string");
    return v.get<std::string>();
  }

  void Finish() const {
    for (const auto &item : j_.items())
      if (!seen_.count(item.key())) Fail(Path(item.key()), "unknown key");
  }

 private:
  const json &j_;
  std::string path_;
  std::set<std::string> seen_;
};

void Require(bool ok, const std::string &path, const std::string &what) {
  if (!ok) Fail(path, what);
}

WindowType ParseWindow(const std::string &name, const std::string &path) {
  if (name == "hann") return WindowType::kHann;
  if (name == "rectangular") return WindowType::kRectangular;
  Fail(path, "window must be \"hann\" or \"rectangular\"");
}

FramingConfig ParseFraming(Section &s, FramingConfig f) {
  f.window_seconds = s.Number("window_seconds", f.window_seconds);
  f.hop_seconds = s.Number("hop_seconds", f.hop_seconds);
  if (s.Has("window")) f.window = ParseWindow(s.String("window", "hann"), s.Path("window"));
  Require(f.window_seconds > 0 && f.window_seconds <= 2.0, s.Path("window_seconds"),
          "must be in (0, 2]");
  Require(f.hop_seconds > 0 && f.hop_seconds <= f.window_seconds, s.Path("hop_seconds"),
          "must be in (0, window_seconds]");
  return f;
}

CqtConfig ParseCqt(Section &s, CqtConfig c) {
  c.f_min = s.Number("f_min", c.f_min);
  c.bins_per_octave = s.Integer("bins_per_octave", c.bins_per_octave);
  c.n_bins = s.Integer("n_bins", c.n_bins);
  c.hop_length = s.Integer("hop_length", c.hop_length);
  Require(c.f_min > 0, s.Path("f_min"), "must be positive");
  Require(c.bins_per_octave >= 1, s.Path("bins_per_octave"), "must be >= 1");
  Require(c.n_bins >= 1, s.Path("n_bins"), "must be >= 1");
  Require(c.hop_length >= 1, s.Path("hop_length"), "must be >= 1");
  Require(c.BinFrequency(c.n_bins - 1) < kCanonicalSampleRate / 2.0, s.Path("n_bins"),
          "highest bin must stay below 8000 Hz");
  return c;
}

FftConfig ParseFft(Section &s, FftConfig f) {
  f.framing = ParseFraming(s, f.framing);
  f.n_fft = s.Integer("n_fft", f.n_fft);
  Require(f.n_fft >= f.framing.FrameLength(kCanonicalSampleRate), s.Path("n_fft"),
          "must be >= the frame length in samples");
  return f;
}

FeatureSpec ParseFeature(const std::string &name, const json &j) {
  Section s(j, "features." + name);
  FeatureSpec f;
  f.name = name;
  const std::string type = s.String("type", "");
  if (type == "cqcc") {
    f.type = FeatureType::kCqcc;
    f.cqcc.cqt = ParseCqt(s, f.cqcc.cqt);
    f.cqcc.resample_bins = s.Integer("resample_bins", f.cqcc.resample_bins);
    f.cqcc.n_coeffs = s.Integer("n_coeffs", f.cqcc.n_coeffs);
    f.cqcc.mvn = s.Bool("mvn", f.cqcc.mvn);
    f.cqcc.cmvn = s.Bool("cmvn", f.cqcc.cmvn);
    Require(f.cqcc.resample_bins >= 2, s.Path("resample_bins"), "must be >= 2");
    Require(f.cqcc.n_coeffs >= 1 && f.cqcc.n_coeffs <= f.cqcc.resample_bins,
            s.Path("n_coeffs"), "must be in [1, resample_bins]");
  } else if (type == "lpcc") {
    f.type = FeatureType::kLpcc;
    f.lpcc.framing = ParseFraming(s, f.lpcc.framing);
    f.lpcc.lpc_order = s.Integer("lpc_order", f.lpcc.lpc_order);
    f.lpcc.n_coeffs = s.Integer("n_coeffs", f.lpcc.n_coeffs);
    f.lpcc.cmvn = s.Bool("cmvn", f.lpcc.cmvn);
    Require(f.lpcc.lpc_order >= 1, s.Path("lpc_order"), "must be >= 1");
    Require(f.lpcc.n_coeffs >= 1, s.Path("n_coeffs"), "must be >= 1");
  } else if (type == "fft") {
    f.type = FeatureType::kFft;
    f.fft = ParseFft(s, f.fft);
    f.log_power = s.Bool("log", true);
  } else if (type == "cqt") {
    f.type = FeatureType::kCqt;
    f.cqt = ParseCqt(s, f.cqt);
    f.log_power = s.Bool("log", true);
  } else if (type == "dwt") {
    f.type = FeatureType::kDwt;
    f.dwt.levels = s.Integer("levels", f.dwt.levels);
    f.dwt.frame_length = s.Integer("frame_length", f.dwt.frame_length);
    f.dwt.hop_length = s.Integer("hop_length", f.dwt.hop_length);
    Require(f.dwt.levels >= 1 && f.dwt.levels <= 12, s.Path("levels"), "must be in [1, 12]");
    Require(f.dwt.frame_length >= 1 && f.dwt.frame_length % (1 << f.dwt.levels) == 0,
            s.Path("frame_length"), "must be a positive multiple of 2^levels");
    Require(f.dwt.hop_length >= 1, s.Path("hop_length"), "must be >= 1");
  } else if (type == "deemd") {
    f.type = FeatureType::kDeemd;
    f.deemd.fft = ParseFft(s, f.deemd.fft);
    f.deemd.eemd.ensemble_size = s.Integer("ensemble_size", f.deemd.eemd.ensemble_size);
    f.deemd.eemd.noise_strength_factor =
        s.Number("noise_strength", f.deemd.eemd.noise_strength_factor);
    f.deemd.eemd.sift.max_sift_iters =
        s.Integer("max_sift_iters", f.deemd.eemd.sift.max_sift_iters);
    f.deemd.eemd.sift.sd_threshold = s.Number("sd_threshold", f.deemd.eemd.sift.sd_threshold);
    f.deemd.log_output = s.Bool("log", f.deemd.log_output);
    Require(f.deemd.eemd.ensemble_size >= 1, s.Path("ensemble_size"), "must be >= 1");
    Require(f.deemd.eemd.noise_strength_factor >= 0, s.Path("noise_strength"),
            "must be >= 0");
    Require(f.deemd.eemd.sift.max_sift_iters >= 1, s.Path("max_sift_iters"), "must be >= 1");
    Require(f.deemd.eemd.sift.sd_threshold > 0, s.Path("sd_threshold"), "must be > 0");
  } else {
    Fail(s.Path("type"), "must be one of cqcc, lpcc, fft, cqt, dwt, deemd");
  }
  s.Finish();
  return f;
}

GmmTrainConfig ParseGmm(Section &s, const std::string &prefix, GmmTrainConfig g) {
  g.components = s.Integer(prefix + "components", g.components);
  g.iterations = s.Integer(prefix + "iterations", g.iterations);
  g.variance_floor_ratio = s.Number(prefix + "variance_floor", g.variance_floor_ratio);
  Require(g.components >= 1, s.Path(prefix + "components"), "must be >= 1");
  Require(g.iterations >= 0, s.Path(prefix + "iterations"), "must be >= 0");
  Require(g.variance_floor_ratio > 0, s.Path(prefix + "variance_floor"), "must be > 0");
  return g;
}

SystemSpec ParseSystem(const std::string &name, const json &j) {
  Section s(j, "systems." + name);
  SystemSpec sys;
  sys.name = name;
  const std::string type = s.String("type", "");
  sys.feature = s.String("feature", "");
  Require(!sys.feature.empty(), s.Path("feature"), "must name a feature block");
  sys.phrase_dependent = s.Bool("phrase_dependent", false);
  if (type == "gmm") {
    sys.type = SystemType::kGmm;
    sys.gmm = ParseGmm(s, "", sys.gmm);
  } else if (type == "ivec-svm") {
    sys.type = SystemType::kIvecSvm;
    sys.gmm = ParseGmm(s, "ubm_", {.components = 128});
    sys.tv.rank = s.Integer("rank", sys.tv.rank);
    sys.tv.iterations = s.Integer("t_iterations", sys.tv.iterations);
    sys.svm.c = s.Number("svm_c", sys.svm.c);
    sys.ubm_shared = s.Bool("ubm_shared", true);
    sys.t_shared = s.Bool("t_shared", true);
    sys.svm_shared = s.Bool("svm_shared", true);
    Require(sys.tv.rank >= 1, s.Path("rank"), "must be >= 1");
    Require(sys.tv.iterations >= 0, s.Path("t_iterations"), "must be >= 0");
    Require(sys.svm.c > 0, s.Path("svm_c"), "must be > 0");
    Require(sys.ubm_shared || !sys.t_shared, s.Path("t_shared"),
            "a shared T-matrix needs a shared UBM");
  } else {
    Fail(s.Path("type"), "must be \"gmm\" or \"ivec-svm\"");
  }
  s.Finish();
  return sys;
}

SynthCorpusConfig ParseCorpus(const json &j) {
  Section s(j, "corpus");
  SynthCorpusConfig c;
  c.speakers = s.Integer("speakers", c.speakers);
  c.phrases = s.Integer("phrases", c.phrases);
  if (s.Has("splits")) {
    const json &arr = s.Raw("splits");
    if (!arr.is_array()) Fail(s.Path("splits"), "expected an array");
    c.splits.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Section sp(arr[i], s.Path("splits") + "[" + std::to_string(i) + "]");
      CorpusSplit split;
      split.name = sp.String("name", "");
      split.genuine = sp.Integer("genuine", 0);
      split.spoof = sp.Integer("spoof", 0);
      sp.Finish();
      c.splits.push_back(split);
    }
  }
  c.min_duration = s.Number("min_duration", c.min_duration);
  c.max_duration = s.Number("max_duration", c.max_duration);
  c.min_f0 = s.Number("min_f0", c.min_f0);
  c.max_f0 = s.Number("max_f0", c.max_f0);
  c.harmonic_ceiling = s.Number("harmonic_ceiling", c.harmonic_ceiling);
  c.room_snr_min_db = s.Number("room_snr_min_db", c.room_snr_min_db);
  c.room_snr_max_db = s.Number("room_snr_max_db", c.room_snr_max_db);
  c.cutoff_min_hz = s.Number("cutoff_min_hz", c.cutoff_min_hz);
  c.cutoff_max_hz = s.Number("cutoff_max_hz", c.cutoff_max_hz);
  c.snr_min_db = s.Number("snr_min_db", c.snr_min_db);
  c.snr_max_db = s.Number("snr_max_db", c.snr_max_db);
  c.ir_min_taps = s.Integer("ir_min_taps", c.ir_min_taps);
  c.ir_max_taps = s.Integer("ir_max_taps", c.ir_max_taps);
  c.gain_min = s.Number("gain_min", c.gain_min);
  c.gain_max = s.Number("gain_max", c.gain_max);
  s.Finish();
  return c;
}

}  // namespace

std::string_view FeatureTypeName(FeatureType type) {
  switch (type) {
    case FeatureType::kCqcc: return "cqcc";
    case FeatureType::kLpcc: return "lpcc";
    case FeatureType::kFft: return "fft";
    case FeatureType::kCqt: return "cqt";
    case FeatureType::kDwt: return "dwt";
    case FeatureType::kDeemd: return "deemd";
  }
  return "unknown";
}

const FeatureSpec &PipelineConfig::Feature(const std::string &name) const {
  const auto it = features.find(name);
  if (it == features.end())
    throw Error(ErrorCode::kInvalidArgument, "config has no feature block '" + name + "'");
  return it->second;
}

const SystemSpec &PipelineConfig::System(const std::string &name) const {
  const auto it = systems.find(name);
  if (it == systems.end())
    throw Error(ErrorCode::kInvalidArgument, "config has no system block '" + name + "'");
  return it->second;
}

PipelineConfig ParsePipelineConfig(std::string_view json_text, std::string_view source) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::kMalformedInput,
                std::string(source) + ": invalid JSON: " + e.what());
  }
  Section s(root, std::string(source));
  PipelineConfig cfg;
  cfg.seed = s.Unsigned("seed", 0);
  if (s.Has("corpus")) cfg.corpus = ParseCorpus(s.Raw("corpus"));
  cfg.corpus.seed = cfg.seed;
  if (s.Has("paths")) {
    Section p(s.Raw("paths"), "paths");
    cfg.corpus_dir = p.String("corpus_dir", cfg.corpus_dir.string());
    cfg.work_dir = p.String("work_dir", cfg.work_dir.string());
    Require(!cfg.corpus_dir.empty(), p.Path("corpus_dir"), "must not be empty");
    Require(!cfg.work_dir.empty(), p.Path("work_dir"), "must not be empty");
    p.Finish();
  }
  if (s.Has("features")) {
    const json &f = s.Raw("features");
    if (!f.is_object()) Fail("features", "expected an object");
    for (const auto &item : f.items())
      cfg.features.emplace(item.key(), ParseFeature(item.key(), item.value()));
  }
  if (s.Has("systems")) {
    const json &f = s.Raw("systems");
    if (!f.is_object()) Fail("systems", "expected an object");
    for (const auto &item : f.items()) {
      SystemSpec sys = ParseSystem(item.key(), item.value());
      if (!cfg.features.count(sys.feature))
        Fail("systems." + item.key() + ".feature",
             "unknown feature block '" + sys.feature + "'");
      cfg.systems.emplace(item.key(), std::move(sys));
    }
  }
  s.Finish();
  return cfg;
}

PipelineConfig LoadPipelineConfig(const std::filesystem::path &path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kMissingFile, "cannot open config " + path.string());
  std::stringstream buffer;
  buffer << file.rdbuf();
  return ParsePipelineConfig(buffer.str(), path.string());
}

void OverrideSeed(PipelineConfig &cfg, std::uint64_t seed) {
  cfg.seed = seed;
  cfg.corpus.seed = seed;
}

}  // namespace replayspoof::cli
