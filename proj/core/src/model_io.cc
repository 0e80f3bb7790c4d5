// model_io.cc

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

#include "replayspoof/model_io.h"

#include <json.hpp>

#include "byte_io.h"
#include "replayspoof/error.h"

namespace replayspoof {

namespace {

constexpr std::uint8_t kVersion = 1;

void AppendRowMajor(const Matrix &m, std::vector<double> *out) {
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out->push_back(m(r, c));
}

Matrix TakeRowMajor(const std::vector<double> &in, std::size_t *pos, Index rows,
                    Index cols) {
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = in[(*pos)++];
  return m;
}

void Expect(const ModelBlob &blob, ModelKind kind, std::size_t ndims) {
  if (blob.kind != kind)
    throw Error(ErrorCode::kMalformedInput,
                "expected a " + std::string(ModelKindName(kind)) + " model, found " +
                    std::string(ModelKindName(blob.kind)));
  if (blob.dims.size() != ndims)
    throw Error(ErrorCode::kMalformedInput,
                std::string(ModelKindName(kind)) + " model needs " +
                    std::to_string(ndims) + " dims");
  for (std::uint32_t d : blob.dims)
    if (d == 0) throw Error(ErrorCode::kMalformedInput, "model has a zero dimension");
}

void ExpectPayload(const ModelBlob &blob, std::size_t n) {
  if (blob.payload.size() != n)
    throw Error(ErrorCode::kMalformedInput,
                std::string(ModelKindName(blob.kind)) + " payload has " +
                    std::to_string(blob.payload.size()) + " values, expected " +
                    std::to_string(n));
}

std::vector<double> RowVector(const std::vector<double> &p, std::size_t from,
                              std::size_t n) {
  return std::vector<double>(p.begin() + from, p.begin() + from + n);
}

nlohmann::json Rows(const std::vector<double> &p, std::size_t from, std::size_t rows,
                    std::size_t cols) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < rows; ++r) out.push_back(RowVector(p, from + r * cols, cols));
  return out;
}

}  // namespace

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kGmm: return "gmm";
    case ModelKind::kTMatrix: return "tmatrix";
    case ModelKind::kVector: return "vector";
    case ModelKind::kSvm: return "svm";
    case ModelKind::kFusion: return "fusion";
  }
  return "unknown";
}

std::vector<std::uint8_t> EncodeModelBlob(const ModelBlob &blob) {
  ByteWriter w;
  w.Tag("RSMD");
  w.U8(kVersion);
  w.U8(static_cast<std::uint8_t>(blob.kind));
  w.U32(static_cast<std::uint32_t>(blob.dims.size()));
  for (std::uint32_t d : blob.dims) w.U32(d);
  for (double v : blob.payload) w.F64(v);
  return w.Take();
}

ModelBlob DecodeModelBlob(std::span<const std::uint8_t> bytes, std::string_view name) {
  ByteReader r(bytes);
  if (r.Tag() != "RSMD")
    throw Error(ErrorCode::kMalformedInput, std::string(name) + ": not an RSMD model");
  const std::uint8_t version = r.U8();
  if (version != kVersion)
    throw Error(ErrorCode::kMalformedInput,
                std::string(name) + ": unsupported model version " + std::to_string(version));
  ModelBlob blob;
  const std::uint8_t kind = r.U8();
  if (kind < 1 || kind > 5)
    throw Error(ErrorCode::kMalformedInput,
                std::string(name) + ": unknown model kind " + std::to_string(kind));
  blob.kind = static_cast<ModelKind>(kind);
  const std::uint32_t ndims = r.U32();
  if (ndims > 8)
    throw Error(ErrorCode::kMalformedInput, std::string(name) + ": too many dims");
  for (std::uint32_t i = 0; i < ndims; ++i) blob.dims.push_back(r.U32());
  if (r.remaining() % 8 != 0)
    throw Error(ErrorCode::kTruncatedData,
                std::string(name) + ": payload is not a whole number of float64 values");
  const std::size_t n = r.remaining() / 8;
  blob.payload.reserve(n);
  for (std::size_t i = 0; i < n; ++i) blob.payload.push_back(r.F64());
  return blob;
}

ModelBlob ToBlob(const GmmModel &model) {
  ModelBlob b{ModelKind::kGmm,
              {static_cast<std::uint32_t>(model.components()),
               static_cast<std::uint32_t>(model.dim())},
              {}};
  b.payload.assign(model.weights().data(), model.weights().data() + model.components());
  AppendRowMajor(model.means(), &b.payload);
  AppendRowMajor(model.variances(), &b.payload);
  return b;
}

ModelBlob ToBlob(const TotalVariabilityModel &model) {
  ModelBlob b = ToBlob(model.ubm());
  b.kind = ModelKind::kTMatrix;
  b.dims.push_back(static_cast<std::uint32_t>(model.rank()));
  AppendRowMajor(model.t_matrix(), &b.payload);
  return b;
}

ModelBlob ToBlob(const Vector &vector) {
  return {ModelKind::kVector,
          {static_cast<std::uint32_t>(vector.size())},
          std::vector<double>(vector.data(), vector.data() + vector.size())};
}

ModelBlob ToBlob(const SvmModel &model) {
  ModelBlob b{ModelKind::kSvm, {static_cast<std::uint32_t>(model.weight.size())},
              std::vector<double>(model.weight.data(),
                                  model.weight.data() + model.weight.size())};
  b.payload.push_back(model.bias);
  return b;
}

ModelBlob ToBlob(const FusionModel &model) {
  ModelBlob b{ModelKind::kFusion, {static_cast<std::uint32_t>(model.weights.size())},
              std::vector<double>(model.weights.data(),
                                  model.weights.data() + model.weights.size())};
  b.payload.push_back(model.offset);
  return b;
}

namespace {

GmmModel GmmFromPayload(const std::vector<double> &p, Index k, Index d) {
  std::size_t pos = 0;
  Vector w(k);
  for (Index i = 0; i < k; ++i) w(i) = p[pos++];
  Matrix means = TakeRowMajor(p, &pos, k, d);
  Matrix vars = TakeRowMajor(p, &pos, k, d);
  return GmmModel(std::move(w), std::move(means), std::move(vars));
}

}  // namespace

GmmModel GmmFromBlob(const ModelBlob &blob) {
  Expect(blob, ModelKind::kGmm, 2);
  const Index k = blob.dims[0], d = blob.dims[1];
  ExpectPayload(blob, static_cast<std::size_t>(k + 2 * k * d));
  return GmmFromPayload(blob.payload, k, d);
}

TotalVariabilityModel TMatrixFromBlob(const ModelBlob &blob) {
  Expect(blob, ModelKind::kTMatrix, 3);
  const Index k = blob.dims[0], d = blob.dims[1], r = blob.dims[2];
  ExpectPayload(blob, static_cast<std::size_t>(k + 2 * k * d + k * d * r));
  std::size_t pos = static_cast<std::size_t>(k + 2 * k * d);
  Matrix t = TakeRowMajor(blob.payload, &pos, k * d, r);
  return TotalVariabilityModel(GmmFromPayload(blob.payload, k, d), std::move(t));
}

Vector VectorFromBlob(const ModelBlob &blob) {
  Expect(blob, ModelKind::kVector, 1);
  ExpectPayload(blob, blob.dims[0]);
  return Eigen::Map<const Vector>(blob.payload.data(), blob.dims[0]);
}

SvmModel SvmFromBlob(const ModelBlob &blob) {
  Expect(blob, ModelKind::kSvm, 1);
  ExpectPayload(blob, blob.dims[0] + 1);
  return {Eigen::Map<const Vector>(blob.payload.data(), blob.dims[0]),
          blob.payload.back()};
}

FusionModel FusionFromBlob(const ModelBlob &blob) {
  Expect(blob, ModelKind::kFusion, 1);
  ExpectPayload(blob, blob.dims[0] + 1);
  return {Eigen::Map<const Vector>(blob.payload.data(), blob.dims[0]),
          blob.payload.back()};
}

void WriteModelBlob(const ModelBlob &blob, const std::filesystem::path &path) {
  WriteFileBytes(path, EncodeModelBlob(blob));
}

ModelBlob ReadModelBlob(const std::filesystem::path &path) {
  const std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  return DecodeModelBlob(bytes, path.string());
}

std::string ModelToText(const ModelBlob &blob) {
  nlohmann::ordered_json j;
  j["kind"] = ModelKindName(blob.kind);
  j["dims"] = blob.dims;
  const std::vector<double> &p = blob.payload;
  switch (blob.kind) {  // the typed decoders validate sizes first
    case ModelKind::kGmm:
    case ModelKind::kTMatrix: {
      if (blob.kind == ModelKind::kGmm) GmmFromBlob(blob);
      else TMatrixFromBlob(blob);
      const std::size_t k = blob.dims.at(0), d = blob.dims.at(1);
      j["weights"] = RowVector(p, 0, k);
      j["means"] = Rows(p, k, k, d);
      j["variances"] = Rows(p, k + k * d, k, d);
      if (blob.kind == ModelKind::kTMatrix)
        j["t_matrix"] = Rows(p, k + 2 * k * d, k * d, blob.dims.at(2));
      break;
    }
    case ModelKind::kVector:
      VectorFromBlob(blob);
      j["values"] = p;
      break;
    case ModelKind::kSvm:
      SvmFromBlob(blob);
      j["weight"] = RowVector(p, 0, blob.dims.at(0));
      j["bias"] = p.back();
      break;
    case ModelKind::kFusion:
      FusionFromBlob(blob);
      j["weights"] = RowVector(p, 0, blob.dims.at(0));
      j["offset"] = p.back();
      break;
  }
  return j.dump(2) + "\n";
}

}  // namespace replayspoof
