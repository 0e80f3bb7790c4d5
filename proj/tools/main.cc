// tools/main.cc

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

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "pipeline_config.h"
#include "replayspoof/error.h"

namespace rs = replayspoof;
namespace cli = replayspoof::cli;

int main(int argc, char **argv) {
  CLI::App app{"Replay spoofing detection toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string config_path;
  std::optional<std::uint64_t> seed;
  cli::GlobalOptions opts;
  app.add_option("--config", config_path, "Pipeline configuration (JSON)");
  app.add_option("--seed", seed, "Override the global seed");
  app.add_option("--jobs", opts.jobs, "Worker threads for per-trial work")
      ->check(CLI::Range(1, 1024));
  app.add_flag("--keep-going", opts.keep_going, "Report per-file failures but exit 0");

  std::string synth_out;
  auto *synth = app.add_subcommand("synth", "Generate the synthetic corpus");
  synth->add_option("--out", synth_out, "Output directory (default: paths.corpus_dir)");

  cli::ExtractArgs ex;
  auto *extract = app.add_subcommand("extract", "Extract one feature type for every trial");
  extract->add_option("--feature", ex.feature, "Feature block name")->required();
  extract->add_option("--protocol", ex.protocol, "Protocol file")->required();
  extract->add_option("--audio-dir", ex.audio_dir, "WAV directory (default: <corpus>/wav)");
  extract->add_option("--out", ex.out_dir, "Output directory (default: <work>/features/NAME)");

  cli::TrainArgs tr;
  auto *train = app.add_subcommand("train", "Train the models of one system");
  train->add_option("--system", tr.system, "System block name")->required();
  train->add_option("--protocol", tr.protocol, "Training protocol (default: <corpus>/train.protocol)");
  train->add_option("--features", tr.features_dir, "Feature directory");
  train->add_option("--models", tr.model_dir, "Model directory (default: <work>/models/NAME)");

  cli::ScoreArgs sc;
  auto *score = app.add_subcommand("score", "Score trials with a trained system");
  score->add_option("--system", sc.system, "System block name")->required();
  score->add_option("--protocol", sc.protocol, "Protocol of trials to score")->required();
  score->add_option("--features", sc.features_dir, "Feature directory");
  score->add_option("--models", sc.model_dir, "Model directory");
  score->add_option("--out", sc.out_scores, "Score file")->required();

  cli::FuseArgs fu;
  auto *fuse = app.add_subcommand("fuse", "Train and/or apply linear score fusion");
  fuse->add_option("--scores", fu.scores, "Score files, one per system")->required();
  fuse->add_option("--protocol", fu.protocol, "Labels for training the fusion");
  fuse->add_option("--model", fu.model_in, "Existing fusion model to apply");
  fuse->add_option("--model-out", fu.model_out, "Where to save the trained model");
  fuse->add_option("--apply", fu.apply, "Score files to fuse (default: --scores)");
  fuse->add_option("--out", fu.scores_out, "Fused score file");
  fuse->add_option("--l2", fu.l2, "L2 penalty")->check(CLI::NonNegativeNumber);
  fuse->add_flag("--balance-classes", fu.balance_classes, "Equal total weight per class");

  cli::EvalArgs ev;
  auto *eval = app.add_subcommand("eval", "Equal error rate of a score file");
  eval->add_option("--scores", ev.scores, "Score file")->required();
  eval->add_option("--protocol", ev.protocol, "Protocol with labels")->required();
  eval->add_option("--det-out", ev.det_out, "Write DET points (far frr threshold)");

  std::string inspect_path;
  auto *inspect = app.add_subcommand("inspect", "Describe a model, feature or WAV file");
  inspect->add_option("path", inspect_path, "File to inspect")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (inspect->parsed()) return cli::CmdInspect(inspect_path, std::cout, std::cerr);
    if (eval->parsed()) return cli::CmdEval(ev, std::cout, std::cerr);
    if (fuse->parsed() && config_path.empty()) return cli::CmdFuse(fu, std::cout, std::cerr);

    if (config_path.empty())
      throw rs::Error(rs::ErrorCode::kInvalidArgument, "--config is required");
    cli::PipelineConfig cfg = cli::LoadPipelineConfig(config_path);
    if (seed) cli::OverrideSeed(cfg, *seed);

    if (synth->parsed())
      return cli::CmdSynth(cfg, synth_out.empty() ? cfg.corpus_dir : cli::fs::path(synth_out), std::cout,
                           std::cerr);
    if (extract->parsed()) {
      if (ex.audio_dir.empty()) ex.audio_dir = cfg.corpus_dir / "wav";
      if (ex.out_dir.empty()) ex.out_dir = cfg.work_dir / "features" / ex.feature;
      return cli::CmdExtract(cfg, ex, opts, std::cout, std::cerr);
    }
    if (train->parsed()) {
      const cli::SystemSpec &sys = cfg.System(tr.system);
      if (tr.protocol.empty()) tr.protocol = cfg.corpus_dir / "train.protocol";
      if (tr.features_dir.empty()) tr.features_dir = cfg.work_dir / "features" / sys.feature;
      if (tr.model_dir.empty()) tr.model_dir = cfg.work_dir / "models" / sys.name;
      return cli::CmdTrain(cfg, tr, opts, std::cout, std::cerr);
    }
    if (score->parsed()) {
      const cli::SystemSpec &sys = cfg.System(sc.system);
      if (sc.features_dir.empty()) sc.features_dir = cfg.work_dir / "features" / sys.feature;
      if (sc.model_dir.empty()) sc.model_dir = cfg.work_dir / "models" / sys.name;
      return cli::CmdScore(cfg, sc, opts, std::cout, std::cerr);
    }
    if (fuse->parsed()) return cli::CmdFuse(fu, std::cout, std::cerr);
  } catch (const rs::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::ExitCodeFor(e);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
