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

#include "dualswitch/switching.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace dualswitch {

namespace {

std::string describe(const SwitchReport& r) {
  std::string out = "map is not a valid switching involution:";
  if (!r.is_involution) out += " not an involution;";
  if (!r.is_automorphism) out += " not an automorphism;";
  if (!r.swaps_only_nonadjacent) {
    out += " swaps adjacent vertices";
    if (r.violating_pair) {
      out += " " + std::to_string(r.violating_pair->first) + " and " + std::to_string(r.violating_pair->second);
    }
    out += ";";
  }
  return out;
}

std::size_t common_neighbours(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t count = 0;
  for (std::size_t w = 0; w < a.size(); ++w) count += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return count;
}

}  // namespace

SwitchValidationError::SwitchValidationError(SwitchReport report)
    : std::invalid_argument(describe(report)), report_(std::move(report)) {}

SwitchReport validate_switch_involution(const Graph& g, const VertexMap& f) {
  if (f.size() != g.order()) throw std::invalid_argument("vertex map size differs from the graph order");
  SwitchReport report;
  report.is_involution = f.is_involution();
  report.is_automorphism = is_automorphism(g, f);
  report.swaps_only_nonadjacent = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f(v) != v && g.adjacent(v, f(v))) {
      report.swaps_only_nonadjacent = false;
      report.violating_pair = Edge{std::min(v, f(v)), std::max(v, f(v))};
      break;
    }
  }
  return report;
}

Graph dual_seidel_switch(const Graph& g, const VertexMap& f) {
  const SwitchReport report = validate_switch_involution(g, f);
  if (!report.valid()) throw SwitchValidationError(report);
  BitMatrix adjacency(g.order());
  for (Vertex u = 0; u < g.order(); ++u) std::ranges::copy(g.row(f(u)), adjacency.row(u).begin());
  // The Graph constructor re-checks symmetry and the zero diagonal.
  return Graph(std::move(adjacency), g.labels());
}

bool square_identity_check(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw std::invalid_argument("graphs differ in order");
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u; v < g.order(); ++v) {
      if (common_neighbours(g.row(u), g.row(v)) != common_neighbours(h.row(u), h.row(v))) return false;
    }
  }
  return true;
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> adjacency_square(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> sq(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = u; v < n; ++v) {
      sq(u, v) = sq(v, u) = static_cast<std::int64_t>(
          common_neighbours(g.row(static_cast<Vertex>(u)), g.row(static_cast<Vertex>(v))));
    }
  }
  return sq;
}

StarSplitReport split_star_switch(const Graph& switched, const VertexMap& f, const Bipartition& parts) {
  const std::size_t n = switched.order();
  if (f.size() != n || parts.part0.size() + parts.part1.size() != n) {
    throw std::invalid_argument("map, partition and graph sizes disagree");
  }
  std::vector<int> side(n, -1);
  for (Vertex v : parts.part0) side[v] = 0;
  for (Vertex v : parts.part1) side[v] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == -1) throw std::invalid_argument("partition does not cover every vertex");
    if (side[f(v)] == side[v]) throw std::invalid_argument("switching map does not swap the two parts");
  }

  StarSplitReport report;
  report.components = components(switched);
  if (report.components.size() != 2) {
    throw std::logic_error("switched graph has " + std::to_string(report.components.size()) +
                           " components; two are expected");
  }
  const Component& first = report.components[0];
  const Component& second = report.components[1];

  const auto whole_part = [&](const Component& c) {
    const int s = side[c.vertices.front()];
    const auto& part = s == 0 ? parts.part0 : parts.part1;
    return c.vertices.size() == part.size() &&
           std::all_of(c.vertices.begin(), c.vertices.end(), [&](Vertex v) { return side[v] == s; });
  };
  report.parts_match = whole_part(first) && whole_part(second);

  std::vector<Vertex> local(n, n);
  for (std::size_t k = 0; k < second.vertices.size(); ++k) local[second.vertices[k]] = k;
  std::vector<Vertex> images;
  bool maps_across = first.vertices.size() == second.vertices.size();
  for (Vertex v : first.vertices) {
    if (local[f(v)] == n) {
      maps_across = false;
      break;
    }
    images.push_back(local[f(v)]);
  }
  if (maps_across) {
    report.witness = VertexMap(std::move(images));
    report.isomorphic = check_iso_by_map(first.graph, second.graph, report.witness);
  }
  return report;
}

}  // namespace dualswitch
