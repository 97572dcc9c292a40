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

// Star graphs Cay(Sym_n, S) with S = {(1 i) : 2 <= i <= n}, and the
// two-sided shift maps x -> pi_l * x * pi_r used to switch them.

#include "dualswitch/graph.hpp"
#include "dualswitch/perm.hpp"

#include <vector>

namespace dualswitch {

enum class Side { left, right };

std::string to_string(Side side);
/// Accepts "left" or "right"; throws std::invalid_argument otherwise.
Side parse_side(std::string_view text);

/// The n - 1 transpositions (1 i). Throws std::invalid_argument for n < 3.
std::vector<Permutation> star_gen_set(int n);

/// The star graph on Sym_n for 3 <= n <= 7. Vertex k is
/// SymmetricGroup(n)[k] and carries its cycle notation as label.
///   left:  x ~ y  iff  y^-1 x in S
///   right: x ~ y  iff  x y^-1 in S
Graph build_star(int n, Side side = Side::left);

/// Whether p S p^-1 = S. Evaluated by conjugating every generator and
/// cross-checked against the stabiliser criterion p(1) = 1; a disagreement
/// throws std::logic_error.
bool normalizes_gens(const Permutation& p);

struct SwitchPair {
  int n = 0;
  Permutation pi_l;
  Permutation pi_r;

  /// Throws std::invalid_argument unless both have degree n.
  SwitchPair(int n, Permutation pi_l, Permutation pi_r);
  /// The pair ((2 4), (2 3)(4 5)), valid for every n >= 5.
  static SwitchPair standard(int n);

  friend bool operator==(const SwitchPair&, const SwitchPair&) = default;
};

/// The four sufficient conditions for x -> pi_l x pi_r to be an order-2
/// automorphism of the left star graph that swaps only non-adjacent
/// vertices lying in different parity classes.
struct PairReport {
  bool cond_order2 = false;        // both have order exactly 2
  bool cond_parity = false;        // parities differ
  bool cond_normalizes = false;    // pi_r S pi_r^-1 = S
  bool cond_nonconjugate = false;  // pi_l not conjugate to any pi_r (1 i)
  bool overall = false;
};

/// Evaluates each condition independently. For Side::right the roles of
/// pi_l and pi_r are exchanged (inversion x -> x^-1 carries the left star
/// graph onto the right one and pi_l x pi_r onto pi_r x pi_l).
PairReport check_switch_pair(const SwitchPair& pair, Side side = Side::left);

/// Vertex k -> rank of pi_l * x_k * pi_r in SymmetricGroup(n).
VertexMap pair_to_vertex_map(const SwitchPair& pair);

/// Every pair (pi_l, pi_r) with pi_r in Stab(1) passing all four conditions
/// for the left star graph, sorted lexicographically by (pi_l, pi_r).
/// Requires 3 <= n <= 6.
std::vector<SwitchPair> search_switch_pairs(int n);

}  // namespace dualswitch
