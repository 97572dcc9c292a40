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

// JSON forms of the domain types. Key order is fixed so that identical
// values always serialise to identical bytes.

#include "dualswitch/graph.hpp"
#include "dualswitch/spectra.hpp"
#include "dualswitch/star.hpp"
#include "dualswitch/switching.hpp"

#include <json.hpp>

namespace dualswitch {

using Json = nlohmann::ordered_json;

/// [{"value": v, "multiplicity": k}, ...], descending.
Json to_json(const Spectrum& s);
/// Inverse of to_json(Spectrum). Throws std::invalid_argument.
Spectrum spectrum_from_json(const Json& j);

/// {"integral": bool, "spectrum": [...], "n": int, "primes": [...]}, plus
/// "deficiency" for non-integral graphs.
Json to_json(const IntegralityVerdict& verdict, std::size_t n);

/// {"n": int, "pi_l": cycle-string, "pi_r": cycle-string}
Json to_json(const SwitchPair& pair);
/// Throws std::invalid_argument on missing fields or bad cycle notation.
SwitchPair switch_pair_from_json(const Json& j);

Json to_json(const PairReport& report);
Json to_json(const SwitchReport& report, const Graph& g);
Json to_json(const DegreeProfile& profile);

}  // namespace dualswitch
