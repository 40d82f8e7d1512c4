// Copyright 2026 The lrqaoa Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace lrqaoa {

enum class Errc {
  invalid_size,
  dimension,
  invalid_argument,
  invalid_config,
  state,
  capacity,
  undefined_overlap,
  fit,
  aborted_run,
  io,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library. The code selects the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// CLI exit codes: 2 validation, 3 capacity, 4 runtime failure.
inline int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::capacity:
      return 3;
    case Errc::aborted_run:
    case Errc::io:
    case Errc::fit:
    case Errc::undefined_overlap:
      return 4;
    default:
      return 2;
  }
}

}  // namespace lrqaoa
