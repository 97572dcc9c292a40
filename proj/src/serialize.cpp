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

#include "dualswitch/serialize.hpp"

namespace dualswitch {

Json to_json(const Spectrum& s) {
  Json out = Json::array();
  for (const Eigenpair& e : s.entries()) out.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return out;
}

Spectrum spectrum_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("spectrum JSON must be an array");
  std::vector<Eigenpair> entries;
  for (const Json& e : j) {
    if (!e.is_object() || !e.contains("value") || !e.contains("multiplicity") || !e["value"].is_number_integer() ||
        !e["multiplicity"].is_number_integer()) {
      throw std::invalid_argument("spectrum entries need integer \"value\" and \"multiplicity\"");
    }
    entries.push_back({e["value"].get<std::int64_t>(), e["multiplicity"].get<std::int64_t>()});
  }
  return Spectrum(std::move(entries));
}

Json to_json(const IntegralityVerdict& verdict, std::size_t n) {
  Json out;
  out["integral"] = verdict.integral;
  out["spectrum"] = verdict.spectrum ? to_json(*verdict.spectrum) : Json::array();
  out["n"] = n;
  out["primes"] = verdict.primes;
  if (verdict.deficiency) out["deficiency"] = *verdict.deficiency;
  return out;
}

Json to_json(const SwitchPair& pair) {
  return {{"n", pair.n}, {"pi_l", format_cycles(pair.pi_l)}, {"pi_r", format_cycles(pair.pi_r)}};
}

SwitchPair switch_pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pi_l") || !j.contains("pi_r") ||
      !j["n"].is_number_integer() || !j["pi_l"].is_string() || !j["pi_r"].is_string()) {
    throw std::invalid_argument("switch pair JSON needs integer \"n\" and string \"pi_l\", \"pi_r\"");
  }
  const int n = j["n"].get<int>();
  return SwitchPair(n, parse_cycles(j["pi_l"].get<std::string>(), n), parse_cycles(j["pi_r"].get<std::string>(), n));
}

Json to_json(const PairReport& report) {
  return {{"order2", report.cond_order2},
          {"different_parity", report.cond_parity},
          {"normalizes", report.cond_normalizes},
          {"nonconjugate", report.cond_nonconjugate},
          {"overall", report.overall}};
}

Json to_json(const SwitchReport& report, const Graph& g) {
  Json out = {{"is_involution", report.is_involution},
              {"is_automorphism", report.is_automorphism},
              {"swaps_only_nonadjacent", report.swaps_only_nonadjacent}};
  if (report.violating_pair) {
    out["violating_pair"] = {g.label(report.violating_pair->first), g.label(report.violating_pair->second)};
  } else {
    out["violating_pair"] = nullptr;
  }
  return out;
}

Json to_json(const DegreeProfile& profile) {
  return {{"min", profile.min_degree}, {"max", profile.max_degree}, {"regular", profile.regular}};
}

}  // namespace dualswitch
