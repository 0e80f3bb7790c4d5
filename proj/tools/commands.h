// tools/commands.h

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

#ifndef REPLAYSPOOF_TOOLS_COMMANDS_H_
#define REPLAYSPOOF_TOOLS_COMMANDS_H_

// Subcommand bodies. Each returns a process exit status, writes results to
// `out` and diagnostics to `err`, and throws replayspoof::Error for
// failures that abort the whole command.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pipeline_config.h"
#include "replayspoof/audio_io.h"
#include "replayspoof/error.h"
#include "replayspoof/feature_io.h"

namespace replayspoof::cli {

namespace fs = std::filesystem;

struct GlobalOptions {
  int jobs = 1;
  bool keep_going = false;
};

/// Exit status for a failure that aborts a command.
int ExitCodeFor(const Error &e);

/// 64-bit FNV-1a; used to derive per-name seeds.
std::uint64_t StableHash(std::string_view text);

/// Seed for a named stream (model role, trial id) under the global seed.
std::uint64_t DeriveSeedFor(std::uint64_t seed, std::string_view name);

int CmdSynth(const PipelineConfig &cfg, const fs::path &out_dir, std::ostream &out,
             std::ostream &err);

/// Computes one feature for one utterance. `trial_seed` feeds stochastic
/// features (deemd).
FeatureDump ExtractFeature(const FeatureSpec &spec, const Waveform &wave,
                           std::uint64_t trial_seed);

struct ExtractArgs {
  std::string feature;
  fs::path protocol;
  fs::path audio_dir;
  fs::path out_dir;
};
int CmdExtract(const PipelineConfig &cfg, const ExtractArgs &args,
               const GlobalOptions &opts, std::ostream &out, std::ostream &err);

struct TrainArgs {
  std::string system;
  fs::path protocol;
  fs::path features_dir;
  fs::path model_dir;
};
int CmdTrain(const PipelineConfig &cfg, const TrainArgs &args, const GlobalOptions &opts,
             std::ostream &out, std::ostream &err);

struct ScoreArgs {
  std::string system;
  fs::path protocol;
  fs::path features_dir;
  fs::path model_dir;
  fs::path out_scores;
};
int CmdScore(const PipelineConfig &cfg, const ScoreArgs &args, const GlobalOptions &opts,
             std::ostream &out, std::ostream &err);

struct FuseArgs {
  /// Score files used for training (with protocol) or for applying.
  std::vector<fs::path> scores;
  fs::path protocol;
  fs::path model_in;
  fs::path model_out;
  /// Score files to fuse with the model; defaults to `scores`.
  std::vector<fs::path> apply;
  fs::path scores_out;
  double l2 = 1e-6;
  bool balance_classes = false;
};
int CmdFuse(const FuseArgs &args, std::ostream &out, std::ostream &err);

struct EvalArgs {
  fs::path scores;
  fs::path protocol;
  fs::path det_out;
};
int CmdEval(const EvalArgs &args, std::ostream &out, std::ostream &err);

/// Human-readable dump of a model, feature or WAV file.
int CmdInspect(const fs::path &path, std::ostream &out, std::ostream &err);

}  // namespace replayspoof::cli

#endif  // REPLAYSPOOF_TOOLS_COMMANDS_H_
