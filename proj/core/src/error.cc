// error.cc

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

#include "replayspoof/error.h"

#include <iostream>
#include <mutex>
#include <utility>

namespace replayspoof {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingFile: return "missing-file";
    case ErrorCode::kUnwritablePath: return "unwritable-path";
    case ErrorCode::kUnsupportedEncoding: return "unsupported-encoding";
    case ErrorCode::kChannelCount: return "channel-count";
    case ErrorCode::kSampleRate: return "sample-rate";
    case ErrorCode::kTruncatedData: return "truncated-data";
    case ErrorCode::kMalformedInput: return "malformed-input";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kSignalTooShort: return "signal-too-short";
    case ErrorCode::kNyquistViolation: return "nyquist-violation";
    case ErrorCode::kUnstableFilter: return "unstable-filter";
    case ErrorCode::kSingleClass: return "single-class";
    case ErrorCode::kNonFinite: return "non-finite";
  }
  return "unknown";
}

namespace {

std::mutex g_warning_mutex;
WarningHandler g_warning_handler;

}  // namespace

WarningHandler SetWarningHandler(WarningHandler handler) {
  std::lock_guard<std::mutex> lock(g_warning_mutex);
  std::swap(handler, g_warning_handler);
  return handler;
}

void Warn(std::string_view message) {
  std::lock_guard<std::mutex> lock(g_warning_mutex);
  if (g_warning_handler) {
    g_warning_handler(message);
  } else {
    std::cerr << "WARNING: " << message << '\n';
  }
}

}  // namespace replayspoof
