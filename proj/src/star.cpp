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

#include "dualswitch/star.hpp"

#include <algorithm>

namespace dualswitch {

std::string to_string(Side side) { return side == Side::left ? "left" : "right"; }

Side parse_side(std::string_view text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw std::invalid_argument("side must be \"left\" or \"right\", got \"" + std::string(text) + "\"");
}

std::vector<Permutation> star_gen_set(int n) {
  if (n < 3) throw std::invalid_argument("star generating set needs n >= 3, got n = " + std::to_string(n));
  std::vector<Permutation> gens;
  for (int i = 2; i <= n; ++i) gens.push_back(Permutation::transposition(n, 1, i));
  return gens;
}

Graph build_star(int n, Side side) {
  if (n < 3 || n > 7) throw std::invalid_argument("star graphs are built for 3 <= n <= 7, got n = " + std::to_string(n));
  const SymmetricGroup group(n);
  const auto gens = star_gen_set(n);
  BitMatrix adjacency(group.size());
  std::vector<std::string> labels;
  labels.reserve(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) {
    const Permutation& x = group[k];
    for (const Permutation& s : gens) {
      // y^-1 x = s gives y = x s^-1; x y^-1 = s gives y = s^-1 x; s is an involution.
      const Permutation y = side == Side::left ? compose(x, s) : compose(s, x);
      adjacency.set(k, group.rank(y));
    }
    labels.push_back(format_cycles(x));
  }
  return Graph(std::move(adjacency), std::move(labels));
}

bool normalizes_gens(const Permutation& p) {
  const int n = p.degree();
  const auto gens = star_gen_set(n);
  bool by_conjugation = true;
  for (const Permutation& s : gens) {
    const Permutation image = conjugate(s, p);
    if (std::find(gens.begin(), gens.end(), image) == gens.end()) {
      by_conjugation = false;
      break;
    }
  }
  const bool by_stabiliser = p(1) == 1;
  if (by_conjugation != by_stabiliser) {
    throw std::logic_error("normaliser test disagrees with the stabiliser criterion for " + format_cycles(p));
  }
  return by_conjugation;
}

SwitchPair::SwitchPair(int degree, Permutation left, Permutation right)
    : n(degree), pi_l(std::move(left)), pi_r(std::move(right)) {
  if (pi_l.degree() != n || pi_r.degree() != n) {
    throw std::invalid_argument("switch pair permutations must have degree " + std::to_string(n));
  }
}

SwitchPair SwitchPair::standard(int n) {
  if (n < 5) throw std::invalid_argument("the standard pair ((2 4), (2 3)(4 5)) needs n >= 5");
  return SwitchPair(n, parse_cycles("(2 4)", n), parse_cycles("(2 3)(4 5)", n));
}

PairReport check_switch_pair(const SwitchPair& pair, Side side) {
  const Permutation& outer = side == Side::left ? pair.pi_l : pair.pi_r;
  const Permutation& inner = side == Side::left ? pair.pi_r : pair.pi_l;
  PairReport report;
  report.cond_order2 = pair.pi_l.order() == 2 && pair.pi_r.order() == 2;
  report.cond_parity = parity(pair.pi_l) != parity(pair.pi_r);
  report.cond_normalizes = normalizes_gens(inner);
  // Conjugacy classes of Sym_n are exactly the cycle types.
  const CycleType outer_type = cycle_type(outer);
  report.cond_nonconjugate = true;
  for (const Permutation& s : star_gen_set(pair.n)) {
    if (cycle_type(compose(inner, s)) == outer_type) {
      report.cond_nonconjugate = false;
      break;
    }
  }
  report.overall = report.cond_order2 && report.cond_parity && report.cond_normalizes && report.cond_nonconjugate;
  return report;
}

VertexMap pair_to_vertex_map(const SwitchPair& pair) {
  const SymmetricGroup group(pair.n);
  std::vector<Vertex> images(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) images[k] = group.rank(compose(compose(pair.pi_l, group[k]), pair.pi_r));
  return VertexMap(std::move(images));
}

std::vector<SwitchPair> search_switch_pairs(int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("switch pair search supports 3 <= n <= 6, got n = " + std::to_string(n));
  const auto all = involutions(n);
  std::vector<Permutation> stabilising;
  std::copy_if(all.begin(), all.end(), std::back_inserter(stabilising), [](const Permutation& p) { return p(1) == 1; });

  std::vector<SwitchPair> found;
  for (const Permutation& left : all) {
    for (const Permutation& right : stabilising) {
      if (parity(left) == parity(right)) continue;
      SwitchPair pair(n, left, right);
      if (check_switch_pair(pair).overall) found.push_back(std::move(pair));
    }
  }
  // involutions() is lexicographic, so `found` is already ordered by (pi_l, pi_r).
  return found;
}

}  // namespace dualswitch
