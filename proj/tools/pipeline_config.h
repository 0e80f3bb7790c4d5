// tools/pipeline_config.h

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

#ifndef REPLAYSPOOF_TOOLS_PIPELINE_CONFIG_H_
#define REPLAYSPOOF_TOOLS_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "replayspoof/cepstral.h"
#include "replayspoof/corpus.h"
#include "replayspoof/eemd.h"
#include "replayspoof/gmm.h"
#include "replayspoof/ivector.h"
#include "replayspoof/svm.h"
#include "replayspoof/tf_transforms.h"

namespace replayspoof::cli {

enum class FeatureType { kCqcc, kLpcc, kFft, kCqt, kDwt, kDeemd };

std::string_view FeatureTypeName(FeatureType type);

struct FeatureSpec {
  std::string name;
  FeatureType type = FeatureType::kCqcc;
  CqccConfig cqcc;
  LpccConfig lpcc;
  FftConfig fft;
  CqtConfig cqt;
  DwtConfig dwt;
  DeltaEemdConfig deemd;
  /// log(max(power, floor)) output for fft and cqt.
  bool log_power = true;
};

enum class SystemType { kGmm, kIvecSvm };

struct SystemSpec {
  std::string name;
  SystemType type = SystemType::kGmm;
  std::string feature;
  /// gmm: class models. ivec-svm: UBM.
  GmmTrainConfig gmm;
  TvTrainConfig tv;
  SvmTrainConfig svm;
  bool phrase_dependent = false;
  bool ubm_shared = true;
  bool t_shared = true;
  bool svm_shared = true;
};

struct PipelineConfig {
  std::uint64_t seed = 0;
  SynthCorpusConfig corpus;
  std::filesystem::path corpus_dir = "corpus";
  std::filesystem::path work_dir = "work";
  std::map<std::string, FeatureSpec> features;
  std::map<std::string, SystemSpec> systems;

  const FeatureSpec &Feature(const std::string &name) const;
  const SystemSpec &System(const std::string &name) const;
};

/// Parses the JSON configuration; unknown keys and out-of-range values
/// raise kInvalidArgument with the offending key path.
PipelineConfig ParsePipelineConfig(std::string_view json_text,
                                   std::string_view source = "<config>");
PipelineConfig LoadPipelineConfig(const std::filesystem::path &path);

/// Replaces the global seed and the corpus seed.
void OverrideSeed(PipelineConfig &cfg, std::uint64_t seed);

}  // namespace replayspoof::cli

#endif  // REPLAYSPOOF_TOOLS_PIPELINE_CONFIG_H_
