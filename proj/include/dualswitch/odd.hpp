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

// Odd graphs O_{m+1}: vertices are the m-subsets of X = {1, ..., 2m+1},
// adjacent when disjoint. Also the involutions tau_t = (1 2)(3 4)...(2t-1 2t),
// the four-cell partitions V_{i,j}, the eigenfunctions f_{i,j}, and the
// spectrum predicted for the switched graphs O^t_{m+1}.

#include "dualswitch/graph.hpp"
#include "dualswitch/perm.hpp"
#include "dualswitch/spectra.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace dualswitch {

inline constexpr int kMaxOddGraphM = 5;
inline constexpr int kMaxPredictionM = 6;

/// An m-subset of {1, ..., 2m+1}, members sorted ascending.
class SubsetVertex {
 public:
  /// Throws std::invalid_argument unless members are m distinct points of
  /// {1, ..., 2m+1}; the input need not be sorted.
  SubsetVertex(int m, std::vector<int> members);

  int m() const noexcept { return m_; }
  int universe() const noexcept { return 2 * m_ + 1; }
  const std::vector<int>& members() const noexcept { return members_; }
  bool contains(int point) const noexcept;

  friend bool operator==(const SubsetVertex&, const SubsetVertex&) = default;

 private:
  int m_;
  std::vector<int> members_;
};

/// "{1,3,5}".
std::string format_subset(const SubsetVertex& s);

/// Colexicographic rank: sum over k of C(s_k - 1, k) for members s_1 < ... < s_m.
std::size_t subset_rank(const SubsetVertex& s);
/// Throws std::out_of_range unless rank < C(2m+1, m).
SubsetVertex subset_unrank(int m, std::size_t rank);

/// Vertex count C(2m+1, m).
std::size_t odd_graph_order(int m);

/// O_{m+1} for 1 <= m <= 5; vertex k is subset_unrank(m, k) with its
/// "{...}" label.
Graph build_odd(int m);

/// tau_t as a permutation of degree 2m+1.
Permutation tau_permutation(int m, int t);

/// The vertex involution Y -> tau_t(Y) on O_{m+1}, 1 <= t <= m.
VertexMap tau_map(int m, int t);

/// Cells of the partition determined by two distinct points i, j.
enum class Cell { both = 0, first_only = 1, second_only = 2, neither = 3 };

std::string to_string(Cell cell);

/// Throws std::invalid_argument if i == j.
Cell classify_cell(const SubsetVertex& v, int i, int j);

using QuotientMatrix = Eigen::Matrix<std::int64_t, 4, 4>;

/// Verifies that {V_ij, V_ij', V_i'j, V_i'j'} is equitable in `odd` (which must
/// be build_odd(m)) and returns the quotient matrix, rows and columns in the
/// Cell order. Throws std::logic_error if some cell count is not constant.
QuotientMatrix check_equitable(const Graph& odd, int m, int i, int j);
QuotientMatrix check_equitable(int m, int i, int j);

/// The quotient matrix expected for every pair i != j.
QuotientMatrix expected_quotient_matrix(int m);

using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// f_{i,j}: +1 on V_{i,j'}, -1 on V_{i',j}, 0 elsewhere.
IntVector eigenfunction_f(int m, int i, int j);

/// Gram matrix of f_{1,2m+1}, ..., f_{2m,2m+1}. Throws std::logic_error
/// unless it equals C(2m-1, m-1) (J + I). Requires m >= 2.
IntMatrix gram_check(int m);

/// Number of i-subsets of X fixed setwise by tau_t, from the closed form
/// sum_j C(t, j) C(2m+1-2t, i-2j). For m <= 4 the closed form is checked
/// against enumeration (std::logic_error on mismatch).
std::int64_t count_fixed_subsets(int m, int t, int i);

/// nf_i = (#{i-subsets moved by tau_t} - #{(i-1)-subsets moved by tau_t}) / 2.
std::int64_t moved_half_difference(int m, int t, int i);

/// Spectrum of O^t_{m+1} (1 <= t <= m-1, m <= 6): for i = 0..m the value
/// (-1)^(i+1)(m+1-i) receives nf_i and (-1)^i(m+1-i) the remainder of
/// C(2m+1, i) - C(2m+1, i-1).
Spectrum predicted_switch_spectrum(int m, int t);

/// Spectrum of O_{m+1}: (-1)^i (m+1-i) with multiplicity C(2m+1,i) - C(2m+1,i-1).
Spectrum odd_spectrum_formula(int m);

}  // namespace dualswitch
