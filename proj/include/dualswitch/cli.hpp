// Copyright 2026 The dualswitch Authors
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

// Command-line front end.
//
//   dualswitch star-build  --n N [--side left|right]
//   dualswitch star-switch --n N [--pi-l CYCLES] [--pi-r CYCLES] [--side left|right]
//   dualswitch star-search --n N
//   dualswitch odd-build   --m M
//   dualswitch odd-switch  --m M --t T
//   dualswitch spectrum    FILE
//   dualswitch predict-odd --m M --t T
//   dualswitch verify-paper
//
// Common flags: --format json|text|graph6, --out PATH.
// Exit status: 0 success, 1 verification failure, 2 invalid arguments.

#include "dualswitch/star.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dualswitch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidArguments = 2;

enum class Command { star_build, star_switch, star_search, odd_build, odd_switch, spectrum, predict_odd, verify_paper };
enum class Format { json, text, graph6 };

struct RunConfig {
  Command command = Command::verify_paper;
  int n = 5;
  int m = 3;
  int t = 1;
  std::string pi_l = "(2 4)";
  std::string pi_r = "(2 3)(4 5)";
  Side side = Side::left;
  /// Unset means the command's default: graph6 for the build commands, json otherwise.
  std::optional<Format> format;
  std::optional<std::string> output_path;
  std::string input_path;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Range and compatibility checks; throws UsageError.
void validate(const RunConfig& config);

/// Executes a validated-or-not config; validation runs first.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dualswitch::cli
