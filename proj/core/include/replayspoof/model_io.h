// replayspoof/model_io.h

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

#ifndef REPLAYSPOOF_MODEL_IO_H_
#define REPLAYSPOOF_MODEL_IO_H_

// Binary model container, little-endian:
//   "RSMD"  u8 version (1)  u8 kind  u32 ndims  u32 dims[ndims]
//   f64 payload, row-major
// Payload layouts:
//   GMM      dims {K, D}     weights, means, variances
//   TMATRIX  dims {K, D, R}  UBM payload, then T ((K*D) x R)
//   VECTOR   dims {N}        values
//   SVM      dims {D}        weight, bias
//   FUSION   dims {M}        weights, offset

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "replayspoof/fusion.h"
#include "replayspoof/gmm.h"
#include "replayspoof/ivector.h"
#include "replayspoof/svm.h"

namespace replayspoof {

enum class ModelKind : std::uint8_t {
  kGmm = 1,
  kTMatrix = 2,
  kVector = 3,
  kSvm = 4,
  kFusion = 5,
};

std::string_view ModelKindName(ModelKind kind);

struct ModelBlob {
  ModelKind kind = ModelKind::kVector;
  std::vector<std::uint32_t> dims;
  std::vector<double> payload;
};

std::vector<std::uint8_t> EncodeModelBlob(const ModelBlob &blob);
ModelBlob DecodeModelBlob(std::span<const std::uint8_t> bytes,
                          std::string_view name = "<model>");

ModelBlob ToBlob(const GmmModel &model);
ModelBlob ToBlob(const TotalVariabilityModel &model);
ModelBlob ToBlob(const Vector &vector);
ModelBlob ToBlob(const SvmModel &model);
ModelBlob ToBlob(const FusionModel &model);

/// Throw kMalformedInput when the blob has another kind or a bad size.
GmmModel GmmFromBlob(const ModelBlob &blob);
TotalVariabilityModel TMatrixFromBlob(const ModelBlob &blob);
Vector VectorFromBlob(const ModelBlob &blob);
SvmModel SvmFromBlob(const ModelBlob &blob);
FusionModel FusionFromBlob(const ModelBlob &blob);

void WriteModelBlob(const ModelBlob &blob, const std::filesystem::path &path);
ModelBlob ReadModelBlob(const std::filesystem::path &path);

/// Indented JSON with the kind, dims and named parameter arrays.
std::string ModelToText(const ModelBlob &blob);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_MODEL_IO_H_
