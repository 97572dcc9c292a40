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

// Dual Seidel switching: for an order-2 automorphism phi of G that swaps only
// non-adjacent vertices, P A(G) is again a symmetric 0/1 matrix with zero
// diagonal (P the permutation matrix of phi), and (P A)^2 = A^2.

#include "dualswitch/graph.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dualswitch {

struct SwitchReport {
  bool is_involution = false;
  bool is_automorphism = false;
  bool swaps_only_nonadjacent = false;
  /// A pair {v, f(v)} with v ~ f(v); present iff swaps_only_nonadjacent is false.
  std::optional<Edge> violating_pair;

  bool valid() const noexcept { return is_involution && is_automorphism && swaps_only_nonadjacent; }
};

/// Raised when a switch is requested under a map that fails validation.
class SwitchValidationError : public std::invalid_argument {
 public:
  explicit SwitchValidationError(SwitchReport report);
  const SwitchReport& report() const noexcept { return report_; }

 private:
  SwitchReport report_;
};

/// Fixed points of f are allowed. Throws std::invalid_argument if f and g
/// differ in size.
SwitchReport validate_switch_involution(const Graph& g, const VertexMap& f);

/// The graph with adjacency P A(g): row u is row f(u) of A(g). Labels are kept.
/// Throws SwitchValidationError unless validate_switch_involution passes.
Graph dual_seidel_switch(const Graph& g, const VertexMap& f);

/// Whether A(g)^2 == A(h)^2 entrywise. Throws std::invalid_argument on
/// size mismatch.
bool square_identity_check(const Graph& g, const Graph& h);

/// A^2 as a dense integer matrix (common-neighbour counts).
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> adjacency_square(const Graph& g);

struct StarSplitReport {
  std::vector<Component> components;  // exactly two, ordered by smallest vertex
  bool parts_match = false;           // each component is one whole original part
  bool isomorphic = false;            // restriction of f is an isomorphism between them
  VertexMap witness;                  // component 0 local index -> component 1 local index
};

/// Splits a graph obtained by switching a bipartite graph under a
/// part-swapping involution f. Throws std::invalid_argument if f does not
/// swap the given parts, and std::logic_error if the graph does not have
/// exactly two components.
StarSplitReport split_star_switch(const Graph& switched, const VertexMap& f, const Bipartition& parts);

}  // namespace dualswitch
