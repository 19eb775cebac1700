// Copyright 2026 The gr4sd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gr4sd {

enum class Errc {
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  NotBasicIrreducible,
  ContextMismatch,
  IndexOutOfRange,
  EvenLength,
  BadParamLength,
  RangeError,
  TooLarge,
  ParseError,
};

constexpr const char* to_string(Errc code) {
  switch (code) {
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotBasicIrreducible: return "NotBasicIrreducible";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::EvenLength: return "EvenLength";
    case Errc::BadParamLength: return "BadParamLength";
    case Errc::RangeError: return "RangeError";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gr4sd
