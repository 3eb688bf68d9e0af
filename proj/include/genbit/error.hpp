// Copyright 2026 The GenBit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENBIT_ERROR_HPP
#define GENBIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace genbit {

enum class ErrorKind {
  InvalidArgument,
  InvalidBase,
  ParseError,
  CorruptStream,
  FramingError,
  BadMagic,
  UnsupportedVersion,
  TruncatedFile,
  UndefinedRate,
  EmptyCorpus,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CorruptStream: return "CorruptStream";
    case ErrorKind::FramingError: return "FramingError";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::TruncatedFile: return "TruncatedFile";
    case ErrorKind::UndefinedRate: return "UndefinedRate";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
  }
  return "Unknown";
}

/// Every failure raised by the library. what() is prefixed with the error name,
/// e.g. "CorruptStream: padding bits are not zero".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace genbit

#endif  // GENBIT_ERROR_HPP
