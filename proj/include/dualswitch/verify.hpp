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

// The reproduction checks behind `dualswitch verify-paper`: the switched
// Star and Odd graph spectra, the lemmas they rest on, and the agreement of
// the exact spectra with the floating-point oracle.

#include "dualswitch/serialize.hpp"

#include <string>
#include <vector>

namespace dualswitch {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  Json details;
};

/// Runs every check in order. Deterministic: the same details on every run.
std::vector<CheckResult> run_reproduction_checks();

/// {"checks": [...], "passed": bool}
Json to_json(const std::vector<CheckResult>& results);

/// Spectra quoted for the three 4-regular graphs.
Spectrum star5_component_spectrum();
Spectrum odd4_switched_spectrum(int t);

}  // namespace dualswitch
