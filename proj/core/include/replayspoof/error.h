// replayspoof/error.h

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

#ifndef REPLAYSPOOF_ERROR_H_
#define REPLAYSPOOF_ERROR_H_

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace replayspoof {

enum class ErrorCode {
  kMissingFile,
  kUnwritablePath,
  kUnsupportedEncoding,
  kChannelCount,
  kSampleRate,
  kTruncatedData,
  kMalformedInput,
  kDuplicateId,
  kInvalidArgument,
  kShapeMismatch,
  kSignalTooShort,
  kNyquistViolation,
  kUnstableFilter,
  kSingleClass,
  kNonFinite,
};

const char *ErrorCodeName(ErrorCode code);

/// All library failures are reported by throwing Error; code() tells the
/// caller which precondition or format rule was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Non-fatal diagnostics (clipping, ridge regularization, ...) go through a
/// process-wide handler. The default writes "WARNING: <msg>" to stderr.
using WarningHandler = std::function<void(std::string_view)>;

/// Installs `handler` and returns the previous one. Passing an empty
/// function restores the default.
WarningHandler SetWarningHandler(WarningHandler handler);
void Warn(std::string_view message);

}  // namespace replayspoof

#endif  // REPLAYSPOOF_ERROR_H_
