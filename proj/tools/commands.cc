// tools/commands.cc

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

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "replayspoof/cepstral.h"
#include "replayspoof/corpus.h"
#include "replayspoof/eemd.h"
#include "replayspoof/error.h"
#include "replayspoof/eval.h"
#include "replayspoof/fusion.h"
#include "replayspoof/gmm.h"
#include "replayspoof/ivector.h"
#include "replayspoof/model_io.h"
#include "replayspoof/protocol.h"
#include "replayspoof/scores.h"
#include "replayspoof/svm.h"

namespace replayspoof::cli {

namespace {

std::string Fmt(const char *format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string Exact(double v) { return Fmt("%.17g", v); }

// Runs fn(i) for i in [0, n) on up to `jobs` threads. fn must not throw.
template <class Fn>
void ParallelFor(std::size_t n, int jobs, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1, jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (std::thread &t : pool) t.join();
}

void EnsureDirectory(const fs::path &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw Error(ErrorCode::kUnwritablePath,
                "cannot create directory " + dir.string() +
                    (ec ? ": " + ec.message() : std::string()));
}

fs::path FeaturePath(const fs::path &dir, const std::string &trial_id) {
  return dir / (trial_id + ".rsft");
}

// frames x dim
Matrix LoadFrames(const fs::path &dir, const std::string &trial_id) {
  const fs::path path = FeaturePath(dir, trial_id);
  if (!fs::exists(path))
    throw Error(ErrorCode::kMissingFile,
                "missing features for trial " + trial_id + " (" + path.string() + ")");
  return ReadFeatureDump(path).values.transpose();
}

std::vector<Matrix> LoadAllFrames(const fs::path &dir, const std::vector<Trial> &trials,
                                  int jobs) {
  std::vector<Matrix> frames(trials.size());
  std::vector<std::optional<Error>> errors(trials.size());
  ParallelFor(trials.size(), jobs, [&](std::size_t i) {
    try {
      frames[i] = LoadFrames(dir, trials[i].trial_id);
    } catch (const Error &e) {
      errors[i] = e;
    }
  });
  for (const auto &e : errors)
    if (e) throw *e;
  return frames;
}

Matrix Pool(const std::vector<Matrix> &frames, const std::vector<std::size_t> &which) {
  Index rows = 0, dim = -1;
  for (std::size_t i : which) {
    rows += frames[i].rows();
    if (dim < 0) dim = frames[i].cols();
    if (frames[i].cols() != dim)
      throw Error(ErrorCode::kShapeMismatch, "feature files have different dimensions");
  }
  Matrix pooled(rows, std::max<Index>(dim, 0));
  Index at = 0;
  for (std::size_t i : which) {
    pooled.middleRows(at, frames[i].rows()) = frames[i];
    at += frames[i].rows();
  }
  return pooled;
}

// "" for a model shared across phrases, otherwise the phrase id.
std::string GroupOf(const SystemSpec &sys, bool shared, const Trial &t) {
  return (!sys.phrase_dependent || shared) ? std::string() : t.phrase_id;
}

fs::path ModelFile(const fs::path &dir, const std::string &stem, const std::string &group) {
  return dir / (group.empty() ? stem + ".rsmd" : stem + "." + group + ".rsmd");
}

std::map<std::string, std::vector<std::size_t>> Groups(
    const SystemSpec &sys, bool shared, const std::vector<Trial> &trials,
    const std::vector<std::size_t> &subset) {
  std::map<std::string, std::vector<std::size_t>> out;
  for (std::size_t i : subset) out[GroupOf(sys, shared, trials[i])].push_back(i);
  return out;
}

std::uint64_t ModelSeed(const PipelineConfig &cfg, const SystemSpec &sys,
                        const std::string &role, const std::string &group) {
  return DeriveSeedFor(cfg.seed, sys.name + "/" + role + "/" + group);
}

void RequireBothClasses(const std::vector<Trial> &trials, const std::string &what) {
  bool g = false, s = false;
  for (const Trial &t : trials) {
    g = g || t.label == Label::kGenuine;
    s = s || t.label == Label::kSpoof;
  }
  if (!g || !s)
    throw Error(ErrorCode::kSingleClass, what + " needs both genuine and spoof trials");
}

ModelBlob LoadModel(const fs::path &path) {
  if (!fs::exists(path))
    throw Error(ErrorCode::kMissingFile, "missing model " + path.string());
  return ReadModelBlob(path);
}

// Lazily loaded per-group models for scoring.
template <class T, class Load>
class ModelCache {
 public:
  ModelCache(fs::path dir, std::string stem, Load load)
      : dir_(std::move(dir)), stem_(std::move(stem)), load_(load) {}
  const T &Get(const std::string &group) {
    auto it = models_.find(group);
    if (it == models_.end())
      it = models_.emplace(group, load_(LoadModel(ModelFile(dir_, stem_, group)))).first;
    return it->second;
  }

 private:
  fs::path dir_;
  std::string stem_;
  Load load_;
  std::map<std::string, T> models_;
};

template <class T, class Load>
ModelCache<T, Load> MakeCache(const fs::path &dir, const std::string &stem, Load load) {
  return ModelCache<T, Load>(dir, stem, load);
}

std::string Summary(const char *what, std::size_t ok, std::size_t failed) {
  return std::string(what) + ": " + std::to_string(ok) + " ok, " + std::to_string(failed) +
         " failed";
}

}  // namespace

std::uint64_t StableHash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t DeriveSeedFor(std::uint64_t seed, std::string_view name) {
  // splitmix64 over (seed, hash(name))
  std::uint64_t z = seed ^ (StableHash(name) + 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int ExitCodeFor(const Error &e) {
  return e.code() == ErrorCode::kUnwritablePath ? 2 : 1;
}

// ---------------------------------------------------------------- synth

int CmdSynth(const PipelineConfig &cfg, const fs::path &out_dir, std::ostream &out,
             std::ostream &err) {
  const SynthCorpus corpus = GenerateSynthCorpus(cfg.corpus);
  if (CorpusMatchesDisk(corpus, out_dir)) {
    out << "identical corpus: " << out_dir.string() << "\n";
    out << (out_dir / "manifest.json").string() << "\n";
    return 0;
  }
  const fs::path manifest = WriteSynthCorpus(corpus, out_dir);
  std::size_t wavs = 0;
  for (const auto &item : corpus.files) wavs += item.first.rfind("wav/", 0) == 0;
  err << "wrote " << wavs << " utterances to " << out_dir.string() << "\n";
  out << manifest.string() << "\n";
  return 0;
}

// -------------------------------------------------------------- extract

FeatureDump ExtractFeature(const FeatureSpec &spec, const Waveform &wave,
                           std::uint64_t trial_seed) {
  FeatureDump dump;
  auto spectrogram = [&](const Spectrogram &s) {
    dump.values = s.values();
    dump.metadata["hop_seconds"] = Exact(s.hop_seconds());
    dump.metadata["bin_min_hz"] = Exact(s.bin_frequencies().front());
    dump.metadata["bin_max_hz"] = Exact(s.bin_frequencies().back());
  };
  switch (spec.type) {
    case FeatureType::kCqcc:
      dump = ToDump(Cqcc(wave, spec.cqcc));
      break;
    case FeatureType::kLpcc:
      dump = ToDump(Lpcc(wave, spec.lpcc));
      break;
    case FeatureType::kFft:
      spectrogram(spec.log_power ? FftLogPowerSpectrogram(wave, spec.fft)
                                 : FftPowerSpectrogram(wave, spec.fft));
      break;
    case FeatureType::kCqt:
      spectrogram(spec.log_power ? CqtLogPowerSpectrogram(wave, spec.cqt)
                                 : CqtPowerSpectrogram(wave, spec.cqt));
      break;
    case FeatureType::kDwt:
      spectrogram(DwtScalogram(wave, spec.dwt));
      break;
    case FeatureType::kDeemd: {
      DeltaEemdConfig c = spec.deemd;
      c.eemd.seed = trial_seed;
      spectrogram(DeltaEemdSpectrogram(wave, c));
      dump.metadata["eemd_seed"] = std::to_string(trial_seed);
      break;
    }
  }
  dump.metadata["feature"] = spec.name;
  dump.metadata["type"] = std::string(FeatureTypeName(spec.type));
  return dump;
}

int CmdExtract(const PipelineConfig &cfg, const ExtractArgs &args,
               const GlobalOptions &opts, std::ostream &out, std::ostream &err) {
  const FeatureSpec &spec = cfg.Feature(args.feature);
  const std::vector<Trial> trials = ReadProtocol(args.protocol);
  EnsureDirectory(args.out_dir);
  std::vector<std::string> failures(trials.size());
  ParallelFor(trials.size(), opts.jobs, [&](std::size_t i) {
    const Trial &t = trials[i];
    try {
      const Waveform wave = LoadWav(args.audio_dir / (t.trial_id + ".wav"));
      const FeatureDump dump =
          ExtractFeature(spec, wave, DeriveSeedFor(cfg.seed, spec.name + "/" + t.trial_id));
      WriteFeatureDump(FeaturePath(args.out_dir, t.trial_id), dump);
    } catch (const Error &e) {
      failures[i] = e.what();
    }
  });
  std::size_t failed = 0;
  bool unwritable = false;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    if (failures[i].empty()) continue;
    ++failed;
    unwritable = unwritable || failures[i].rfind("cannot write", 0) == 0;
    err << "extract " << trials[i].trial_id << ": " << failures[i] << "\n";
  }
  out << Summary(("extract " + spec.name).c_str(), trials.size() - failed, failed) << "\n";
  if (failed == 0 || opts.keep_going) return 0;
  return unwritable ? 2 : 1;
}

// ---------------------------------------------------------------- train

int CmdTrain(const PipelineConfig &cfg, const TrainArgs &args, const GlobalOptions &opts,
             std::ostream &out, std::ostream &err) {
  const SystemSpec &sys = cfg.System(args.system);
  std::vector<Trial> trials;
  for (Trial &t : ReadProtocol(args.protocol))
    if (t.label != Label::kUnknown) trials.push_back(std::move(t));
  RequireBothClasses(trials, "training");
  const std::vector<Matrix> frames = LoadAllFrames(args.features_dir, trials, opts.jobs);
  EnsureDirectory(args.model_dir);

  std::vector<std::size_t> all(trials.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  if (sys.type == SystemType::kGmm) {
    for (const auto &[group, members] : Groups(sys, false, trials, all)) {
      for (Label label : {Label::kGenuine, Label::kSpoof}) {
        std::vector<std::size_t> which;
        for (std::size_t i : members)
          if (trials[i].label == label) which.push_back(i);
        const std::string role(LabelName(label));
        if (which.empty())
          throw Error(ErrorCode::kSingleClass,
                      "phrase " + group + " has no " + role + " training trials");
        GmmTrainConfig gc = sys.gmm;
        gc.seed = ModelSeed(cfg, sys, role, group);
        const GmmTrainResult r = GmmEmTrain(Pool(frames, which), gc);
        WriteModelBlob(ToBlob(r.model), ModelFile(args.model_dir, role, group));
        out << sys.name << " " << role << (group.empty() ? "" : " phrase " + group)
            << ": " << which.size() << " trials, avg loglik "
            << Fmt("%.6f", r.loglik_history.back()) << "\n";
      }
    }
    return 0;
  }

  // ivec-svm
  std::map<std::string, GmmModel> ubms;
  for (const auto &[group, members] : Groups(sys, sys.ubm_shared, trials, all)) {
    GmmTrainConfig gc = sys.gmm;
    gc.seed = ModelSeed(cfg, sys, "ubm", group);
    GmmTrainResult r = GmmEmTrain(Pool(frames, members), gc);
    WriteModelBlob(ToBlob(r.model), ModelFile(args.model_dir, "ubm", group));
    out << sys.name << " ubm" << (group.empty() ? "" : " phrase " + group) << ": avg loglik "
        << Fmt("%.6f", r.loglik_history.back()) << "\n";
    ubms.emplace(group, std::move(r.model));
  }
  std::vector<BaumWelchStats> stats(trials.size());
  ParallelFor(trials.size(), opts.jobs, [&](std::size_t i) {
    stats[i] = ComputeBaumWelchStats(ubms.at(GroupOf(sys, sys.ubm_shared, trials[i])),
                                     frames[i]);
  });

  std::vector<Vector> ivectors(trials.size());
  std::map<std::string, Vector> means;
  for (const auto &[group, members] : Groups(sys, sys.t_shared, trials, all)) {
    std::vector<BaumWelchStats> subset;
    for (std::size_t i : members) subset.push_back(stats[i]);
    const GmmModel &ubm = ubms.at(GroupOf(sys, sys.ubm_shared, trials[members.front()]));
    TvTrainConfig tc = sys.tv;
    tc.seed = ModelSeed(cfg, sys, "tmatrix", group);
    const TvTrainResult r = TrainTMatrix(ubm, subset, tc);
    WriteModelBlob(ToBlob(r.model), ModelFile(args.model_dir, "tmatrix", group));
    out << sys.name << " tmatrix" << (group.empty() ? "" : " phrase " + group)
        << ": rank " << r.model.rank() << ", objective "
        << Fmt("%.6f", r.objective_history.back()) << "\n";
    std::vector<Vector> raw;
    for (std::size_t k = 0; k < members.size(); ++k)
      raw.push_back(ExtractIvector(r.model, subset[k]));
    const NormalizedVectors norm = CenterLengthNormalize(raw);
    WriteModelBlob(ToBlob(norm.mean), ModelFile(args.model_dir, "mean", group));
    for (std::size_t k = 0; k < members.size(); ++k) ivectors[members[k]] = norm.vectors[k];
  }

  for (const auto &[group, members] : Groups(sys, sys.svm_shared, trials, all)) {
    Matrix x(static_cast<Index>(members.size()), ivectors[members.front()].size());
    std::vector<int> y;
    for (std::size_t k = 0; k < members.size(); ++k) {
      x.row(static_cast<Index>(k)) = ivectors[members[k]].transpose();
      y.push_back(trials[members[k]].label == Label::kGenuine ? 1 : -1);
    }
    const SvmTrainResult r = SvmTrainLinear(x, y, sys.svm);
    WriteModelBlob(ToBlob(r.model), ModelFile(args.model_dir, "svm", group));
    out << sys.name << " svm" << (group.empty() ? "" : " phrase " + group) << ": primal "
        << Fmt("%.6f", r.primal) << ", dual " << Fmt("%.6f", r.dual) << ", epochs "
        << r.epochs << "\n";
  }
  (void)err;
  return 0;
}

// ---------------------------------------------------------------- score

int CmdScore(const PipelineConfig &cfg, const ScoreArgs &args, const GlobalOptions &opts,
             std::ostream &out, std::ostream &err) {
  const SystemSpec &sys = cfg.System(args.system);
  const std::vector<Trial> trials = ReadProtocol(args.protocol);
  const std::vector<Matrix> frames = LoadAllFrames(args.features_dir, trials, opts.jobs);
  std::vector<double> scores(trials.size());

  if (sys.type == SystemType::kGmm) {
    auto genuine = MakeCache<GmmModel>(args.model_dir, "genuine", GmmFromBlob);
    auto spoof = MakeCache<GmmModel>(args.model_dir, "spoof", GmmFromBlob);
    for (const Trial &t : trials) {
      genuine.Get(GroupOf(sys, false, t));
      spoof.Get(GroupOf(sys, false, t));
    }
    ParallelFor(trials.size(), opts.jobs, [&](std::size_t i) {
      const std::string g = GroupOf(sys, false, trials[i]);
      scores[i] = LlrScore(genuine.Get(g), spoof.Get(g), frames[i]);
    });
  } else {
    auto ubm = MakeCache<GmmModel>(args.model_dir, "ubm", GmmFromBlob);
    auto tmat = MakeCache<TotalVariabilityModel>(args.model_dir, "tmatrix", TMatrixFromBlob);
    auto mean = MakeCache<Vector>(args.model_dir, "mean", VectorFromBlob);
    auto svm = MakeCache<SvmModel>(args.model_dir, "svm", SvmFromBlob);
    for (const Trial &t : trials) {
      ubm.Get(GroupOf(sys, sys.ubm_shared, t));
      tmat.Get(GroupOf(sys, sys.t_shared, t));
      mean.Get(GroupOf(sys, sys.t_shared, t));
      svm.Get(GroupOf(sys, sys.svm_shared, t));
    }
    std::vector<std::optional<Error>> errors(trials.size());
    ParallelFor(trials.size(), opts.jobs, [&](std::size_t i) {
      const Trial &t = trials[i];
      try {
        const BaumWelchStats s =
            ComputeBaumWelchStats(ubm.Get(GroupOf(sys, sys.ubm_shared, t)), frames[i]);
        const Vector w = ExtractIvector(tmat.Get(GroupOf(sys, sys.t_shared, t)), s);
        const NormalizedVectors n =
            CenterLengthNormalize({w}, mean.Get(GroupOf(sys, sys.t_shared, t)));
        scores[i] = SvmScore(svm.Get(GroupOf(sys, sys.svm_shared, t)), n.vectors[0]);
      } catch (const Error &e) {
        errors[i] = Error(e.code(), "trial " + t.trial_id + ": " + e.what());
      }
    });
    for (const auto &e : errors)
      if (e) throw *e;
  }

  ScoreSet set;
  for (std::size_t i = 0; i < trials.size(); ++i) set.Add(trials[i].trial_id, scores[i]);
  if (!args.out_scores.parent_path().empty()) EnsureDirectory(args.out_scores.parent_path());
  WriteScores(set, args.out_scores);
  out << "scored " << set.size() << " trials with " << sys.name << " -> "
      << args.out_scores.string() << "\n";
  (void)err;
  return 0;
}

// ----------------------------------------------------------------- fuse

namespace {

// Score files aligned on the first file's trial order; errors list the
// symmetric difference of the id sets.
Matrix AlignScores(const std::vector<fs::path> &paths, std::vector<std::string> *ids) {
  if (paths.empty()) throw Error(ErrorCode::kInvalidArgument, "no score files given");
  std::vector<ScoreSet> sets;
  for (const fs::path &p : paths) sets.push_back(ReadScores(p));
  ids->clear();
  for (const auto &e : sets[0].entries()) ids->push_back(e.first);
  const std::set<std::string> reference(ids->begin(), ids->end());
  for (std::size_t s = 1; s < sets.size(); ++s) {
    std::vector<std::string> missing, extra;
    for (const std::string &id : *ids)
      if (!sets[s].Find(id)) missing.push_back(id);
    for (const auto &e : sets[s].entries())
      if (!reference.count(e.first)) extra.push_back(e.first);
    if (!missing.empty() || !extra.empty()) {
      std::string msg = "score files " + paths[0].string() + " and " + paths[s].string() +
                        " have different trials:";
      for (const std::string &id : missing) msg += " " + id + " (only in first)";
      for (const std::string &id : extra) msg += " " + id + " (only in second)";
      throw Error(ErrorCode::kMalformedInput, msg);
    }
  }
  Matrix m(static_cast<Index>(ids->size()), static_cast<Index>(sets.size()));
  for (std::size_t i = 0; i < ids->size(); ++i)
    for (std::size_t s = 0; s < sets.size(); ++s)
      m(static_cast<Index>(i), static_cast<Index>(s)) = *sets[s].Find((*ids)[i]);
  return m;
}

std::map<std::string, Label> LabelMap(const fs::path &protocol) {
  std::map<std::string, Label> labels;
  for (const Trial &t : ReadProtocol(protocol)) labels[t.trial_id] = t.label;
  return labels;
}

}  // namespace

int CmdFuse(const FuseArgs &args, std::ostream &out, std::ostream &err) {
  FusionModel model;
  if (!args.protocol.empty()) {
    std::vector<std::string> ids;
    const Matrix all = AlignScores(args.scores, &ids);
    const std::map<std::string, Label> labels = LabelMap(args.protocol);
    std::vector<Index> rows;
    std::vector<int> y;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto it = labels.find(ids[i]);
      if (it == labels.end())
        throw Error(ErrorCode::kMalformedInput,
                    "trial " + ids[i] + " is not in " + args.protocol.string());
      if (it->second == Label::kUnknown) continue;
      rows.push_back(static_cast<Index>(i));
      y.push_back(it->second == Label::kGenuine ? 1 : -1);
    }
    Matrix x(static_cast<Index>(rows.size()), all.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) x.row(static_cast<Index>(k)) = all.row(rows[k]);
    FusionTrainConfig fc;
    fc.l2 = args.l2;
    fc.balance_classes = args.balance_classes;
    const FusionTrainResult r = FusionTrain(x, y, fc);
    model = r.model;
    out << "fusion weights";
    for (Index s = 0; s < model.weights.size(); ++s) out << " " << Fmt("%.6g", model.weights(s));
    out << " offset " << Fmt("%.6g", model.offset) << " (" << r.iterations
        << " iterations, loss " << Fmt("%.6g", r.loss_history.back()) << ")\n";
    if (!args.model_out.empty()) WriteModelBlob(ToBlob(model), args.model_out);
  } else if (!args.model_in.empty()) {
    model = FusionFromBlob(LoadModel(args.model_in));
  } else {
    throw Error(ErrorCode::kInvalidArgument, "fuse needs --protocol (train) or --model");
  }

  if (!args.scores_out.empty()) {
    const std::vector<fs::path> &inputs = args.apply.empty() ? args.scores : args.apply;
    std::vector<std::string> ids;
    const Matrix s = AlignScores(inputs, &ids);
    if (s.cols() != model.weights.size())
      throw Error(ErrorCode::kShapeMismatch,
                  "fusion model expects " + std::to_string(model.weights.size()) +
                      " score files, got " + std::to_string(s.cols()));
    ScoreSet fused;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const Vector row = s.row(static_cast<Index>(i)).transpose();
      fused.Add(ids[i], FusionApply(model, std::span<const double>(row.data(), row.size())));
    }
    WriteScores(fused, args.scores_out);
    out << "fused " << fused.size() << " trials -> " << args.scores_out.string() << "\n";
  }
  (void)err;
  return 0;
}

// ----------------------------------------------------------------- eval

int CmdEval(const EvalArgs &args, std::ostream &out, std::ostream &err) {
  const ScoreSet scores = ReadScores(args.scores);
  const std::map<std::string, Label> labels = LabelMap(args.protocol);
  std::vector<double> genuine, spoof;
  std::vector<std::string> unlisted;
  for (const auto &[id, score] : scores.entries()) {
    const auto it = labels.find(id);
    if (it == labels.end()) {
      unlisted.push_back(id);
      continue;
    }
    if (it->second == Label::kGenuine) genuine.push_back(score);
    else if (it->second == Label::kSpoof) spoof.push_back(score);
  }
  std::vector<std::string> unscored;
  for (const auto &[id, label] : labels)
    if (label != Label::kUnknown && !scores.Find(id)) unscored.push_back(id);
  if (!unlisted.empty() || !unscored.empty()) {
    std::string msg = "scores and protocol disagree:";
    for (const std::string &id : unlisted) msg += " " + id + " (not in protocol)";
    for (const std::string &id : unscored) msg += " " + id + " (not scored)";
    throw Error(ErrorCode::kMalformedInput, msg);
  }
  const EerResult eer = ComputeEer(genuine, spoof);
  out << "EER " << Fmt("%.2f", 100.0 * eer.eer) << "% threshold " << Fmt("%.6g", eer.threshold)
      << " (" << genuine.size() << " genuine, " << spoof.size() << " spoof)\n";
  if (!args.det_out.empty()) {
    std::string text = "# far frr threshold\n";
    for (const DetPoint &p : DetPoints(genuine, spoof))
      text += Exact(p.far) + " " + Exact(p.frr) + " " + Exact(p.threshold) + "\n";
    std::ofstream file(args.det_out, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file)
      throw Error(ErrorCode::kUnwritablePath, "cannot write " + args.det_out.string());
  }
  (void)err;
  return 0;
}

// -------------------------------------------------------------- inspect

int CmdInspect(const fs::path &path, std::ostream &out, std::ostream &err) {
  const std::string ext = path.extension().string();
  if (ext == ".rsmd") {
    out << ModelToText(ReadModelBlob(path));
  } else if (ext == ".rsft") {
    const FeatureDump d = ReadFeatureDump(path);
    out << "rows " << d.values.rows() << "\ncols " << d.values.cols() << "\n";
    for (const auto &[k, v] : d.metadata) out << k << " " << v << "\n";
    if (d.values.size() > 0)
      out << "min " << Fmt("%.6g", d.values.minCoeff()) << "\nmax "
          << Fmt("%.6g", d.values.maxCoeff()) << "\nmean " << Fmt("%.6g", d.values.mean())
          << "\n";
  } else if (ext == ".wav") {
    const Waveform w = LoadWav(path);
    double peak = 0.0;
    for (double v : w.samples()) peak = std::max(peak, std::abs(v));
    out << "samples " << w.size() << "\nsample_rate " << w.sample_rate() << "\nduration "
        << Fmt("%.6f", w.duration_seconds()) << "\npeak " << Fmt("%.6f", peak) << "\n";
  } else {
    err << "inspect: unsupported file type '" << ext << "'\n";
    return 1;
  }
  return 0;
}

}  // namespace replayspoof::cli
