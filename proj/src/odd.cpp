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

#include "dualswitch/odd.hpp"

#include "dualswitch/linalg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

namespace dualswitch {

namespace {

void require_m(int m, int max_m) {
  if (m < 1 || m > max_m) {
    throw std::invalid_argument("m must satisfy 1 <= m <= " + std::to_string(max_m) + ", got m = " + std::to_string(m));
  }
}

void require_points(int m, int i, int j) {
  const int universe = 2 * m + 1;
  if (i < 1 || j < 1 || i > universe || j > universe) {
    throw std::invalid_argument("points must lie in [1, " + std::to_string(universe) + "]");
  }
  if (i == j) throw std::invalid_argument("points i and j must be distinct");
}

std::uint32_t mask_of(const SubsetVertex& s) {
  std::uint32_t mask = 0;
  for (int point : s.members()) mask |= 1U << (point - 1);
  return mask;
}

std::uint32_t apply_tau_mask(std::uint32_t mask, int t) {
  std::uint32_t out = mask;
  for (int k = 0; k < t; ++k) {
    const std::uint32_t a = (mask >> (2 * k)) & 1U;
    const std::uint32_t b = (mask >> (2 * k + 1)) & 1U;
    out &= ~(3U << (2 * k));
    out |= (b << (2 * k)) | (a << (2 * k + 1));
  }
  return out;
}

}  // namespace

SubsetVertex::SubsetVertex(int m, std::vector<int> members) : m_(m), members_(std::move(members)) {
  if (m < 1) throw std::invalid_argument("subset size m must be positive");
  std::sort(members_.begin(), members_.end());
  if (static_cast<int>(members_.size()) != m) {
    throw std::invalid_argument("subset must have exactly " + std::to_string(m) + " members");
  }
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("subset members must be distinct");
  }
  if (members_.front() < 1 || members_.back() > 2 * m + 1) {
    throw std::invalid_argument("subset members must lie in [1, " + std::to_string(2 * m + 1) + "]");
  }
}

bool SubsetVertex::contains(int point) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), point);
}

std::string format_subset(const SubsetVertex& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.members().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(s.members()[k]);
  }
  return out + "}";
}

std::size_t subset_rank(const SubsetVertex& s) {
  std::size_t rank = 0;
  for (std::size_t k = 0; k < s.members().size(); ++k) {
    rank += static_cast<std::size_t>(binomial_i64(s.members()[k] - 1, static_cast<long>(k) + 1));
  }
  return rank;
}

SubsetVertex subset_unrank(int m, std::size_t rank) {
  if (m < 1) throw std::invalid_argument("subset size m must be positive");
  const std::size_t count = static_cast<std::size_t>(binomial_i64(2 * m + 1, m));
  if (rank >= count) {
    throw std::out_of_range("subset rank " + std::to_string(rank) + " outside [0, " + std::to_string(count) + ")");
  }
  std::vector<int> members(static_cast<std::size_t>(m));
  // Greedy colex decoding from the largest member down.
  int candidate = 2 * m;
  for (int k = m; k >= 1; --k) {
    while (static_cast<std::size_t>(binomial_i64(candidate, k)) > rank) --candidate;
    rank -= static_cast<std::size_t>(binomial_i64(candidate, k));
    members[static_cast<std::size_t>(k - 1)] = candidate + 1;
    --candidate;
  }
  return SubsetVertex(m, std::move(members));
}

std::size_t odd_graph_order(int m) { return static_cast<std::size_t>(binomial_i64(2 * m + 1, m)); }

Graph build_odd(int m) {
  require_m(m, kMaxOddGraphM);
  const std::size_t n = odd_graph_order(m);
  std::vector<std::uint32_t> masks(n);
  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < n; ++k) {
    const SubsetVertex s = subset_unrank(m, k);
    masks[k] = mask_of(s);
    labels[k] = format_subset(s);
  }
  BitMatrix adjacency(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if ((masks[u] & masks[v]) == 0) adjacency.set(u, v);
    }
  }
  return Graph(std::move(adjacency), std::move(labels));
}

Permutation tau_permutation(int m, int t) {
  if (t < 0 || t > m) throw std::invalid_argument("t must satisfy 0 <= t <= m");
  Permutation tau = Permutation::identity(2 * m + 1);
  for (int k = 1; k <= t; ++k) tau = compose(tau, Permutation::transposition(2 * m + 1, 2 * k - 1, 2 * k));
  return tau;
}

VertexMap tau_map(int m, int t) {
  require_m(m, kMaxOddGraphM);
  if (t < 1 || t > m) {
    throw std::invalid_argument("t must satisfy 1 <= t <= m = " + std::to_string(m) + ", got t = " + std::to_string(t));
  }
  const Permutation tau = tau_permutation(m, t);
  const std::size_t n = odd_graph_order(m);
  std::vector<Vertex> images(n);
  for (std::size_t k = 0; k < n; ++k) {
    const SubsetVertex source = subset_unrank(m, k);
    std::vector<int> moved;
    for (int point : source.members()) moved.push_back(tau(point));
    images[k] = subset_rank(SubsetVertex(m, std::move(moved)));
  }
  return VertexMap(std::move(images));
}

std::string to_string(Cell cell) {
  switch (cell) {
    case Cell::both: return "V_ij";
    case Cell::first_only: return "V_i~j";
    case Cell::second_only: return "V_~ij";
    case Cell::neither: return "V_~i~j";
  }
  return "?";
}

Cell classify_cell(const SubsetVertex& v, int i, int j) {
  if (i == j) throw std::invalid_argument("classify_cell needs distinct points");
  const bool has_i = v.contains(i);
  const bool has_j = v.contains(j);
  if (has_i && has_j) return Cell::both;
  if (has_i) return Cell::first_only;
  if (has_j) return Cell::second_only;
  return Cell::neither;
}

QuotientMatrix expected_quotient_matrix(int m) {
  QuotientMatrix q;
  q << 0, 0, 0, m + 1,
       0, 0, m, 1,
       0, m, 0, 1,
       m - 1, 1, 1, 0;
  return q;
}

QuotientMatrix check_equitable(const Graph& odd, int m, int i, int j) {
  require_points(m, i, j);
  const std::size_t n = odd_graph_order(m);
  if (odd.order() != n) throw std::invalid_argument("graph is not O_{m+1} for m = " + std::to_string(m));
  std::vector<Cell> cells(n);
  for (std::size_t k = 0; k < n; ++k) cells[k] = classify_cell(subset_unrank(m, k), i, j);

  QuotientMatrix quotient = QuotientMatrix::Constant(-1);
  for (Vertex u = 0; u < n; ++u) {
    std::array<std::int64_t, 4> counts{};
    for (Vertex v : odd.neighbors(u)) ++counts[static_cast<std::size_t>(cells[v])];
    const auto a = static_cast<Eigen::Index>(cells[u]);
    for (Eigen::Index b = 0; b < 4; ++b) {
      if (quotient(a, b) == -1) {
        quotient(a, b) = counts[static_cast<std::size_t>(b)];
      } else if (quotient(a, b) != counts[static_cast<std::size_t>(b)]) {
        throw std::logic_error("partition is not equitable: vertex " + odd.label(u) + " has " +
                               std::to_string(counts[static_cast<std::size_t>(b)]) + " neighbours in " +
                               to_string(static_cast<Cell>(b)) + ", expected " + std::to_string(quotient(a, b)));
      }
    }
  }
  // Every cell is non-empty for m >= 2; for m = 1 cell V_ij is empty.
  for (Eigen::Index a = 0; a < 4; ++a) {
    if (quotient(a, 0) == -1) quotient.row(a).setZero();
  }
  return quotient;
}

QuotientMatrix check_equitable(int m, int i, int j) { return check_equitable(build_odd(m), m, i, j); }

IntVector eigenfunction_f(int m, int i, int j) {
  require_points(m, i, j);
  const std::size_t n = odd_graph_order(m);
  IntVector f = IntVector::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const Cell cell = classify_cell(subset_unrank(m, k), i, j);
    if (cell == Cell::first_only) f(static_cast<Eigen::Index>(k)) = 1;
    if (cell == Cell::second_only) f(static_cast<Eigen::Index>(k)) = -1;
  }
  return f;
}

IntMatrix gram_check(int m) {
  if (m < 2) throw std::invalid_argument("gram_check needs m >= 2");
  const int size = 2 * m;
  IntMatrix basis(static_cast<Eigen::Index>(odd_graph_order(m)), size);
  for (int i = 1; i <= size; ++i) basis.col(i - 1) = eigenfunction_f(m, i, 2 * m + 1);
  const IntMatrix gram = basis.transpose() * basis;

  const std::int64_t c = binomial_i64(2 * m - 1, m - 1);
  const IntMatrix expected = c * (IntMatrix::Ones(size, size) + IntMatrix::Identity(size, size));
  if (gram != expected) throw std::logic_error("Gram matrix differs from C(2m-1, m-1)(J + I)");
  return gram;
}

std::int64_t count_fixed_subsets(int m, int t, int i) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (t < 0 || t > m) throw std::invalid_argument("t must satisfy 0 <= t <= m");
  const int universe = 2 * m + 1;
  if (i < 0 || i > universe) throw std::invalid_argument("subset size must lie in [0, 2m+1]");
  // A fixed subset is a union of j whole transpositions and i - 2j fixed points.
  mpz_class closed = 0;
  for (int j = 0; j <= t; ++j) closed += binomial(t, j) * binomial(universe - 2 * t, i - 2 * j);
  if (!closed.fits_slong_p()) throw std::overflow_error("fixed subset count exceeds 64 bits");
  const std::int64_t count = closed.get_si();

  if (m <= 4) {
    std::int64_t brute = 0;
    for (std::uint32_t mask = 0; mask < (1U << universe); ++mask) {
      if (std::popcount(mask) == i && apply_tau_mask(mask, t) == mask) ++brute;
    }
    if (brute != count) throw std::logic_error("fixed subset closed form disagrees with enumeration");
  }
  return count;
}

std::int64_t moved_half_difference(int m, int t, int i) {
  const auto moved = [&](int size) -> std::int64_t {
    if (size < 0) return 0;
    return binomial_i64(2 * m + 1, size) - count_fixed_subsets(m, t, size);
  };
  const std::int64_t difference = moved(i) - moved(i - 1);
  if (difference % 2 != 0) throw std::logic_error("moved subset difference is odd");
  return difference / 2;
}

Spectrum predicted_switch_spectrum(int m, int t) {
  require_m(m, kMaxPredictionM);
  if (t < 1 || t > m - 1) throw std::invalid_argument("t must satisfy 1 <= t <= m - 1");
  std::map<std::int64_t, std::int64_t> mult;
  for (int i = 0; i <= m; ++i) {
    const std::int64_t magnitude = m + 1 - i;
    const std::int64_t kept = (i % 2 == 0 ? 1 : -1) * magnitude;
    const std::int64_t base = binomial_i64(2 * m + 1, i) - binomial_i64(2 * m + 1, i - 1);
    const std::int64_t flipped = moved_half_difference(m, t, i);
    if (flipped < 0 || flipped > base) {
      throw std::logic_error("predicted multiplicity out of range at i = " + std::to_string(i));
    }
    mult[-kept] += flipped;
    mult[kept] += base - flipped;
  }
  Spectrum s = Spectrum::from_map(mult);
  if (s.total() != binomial_i64(2 * m + 1, m)) throw std::logic_error("predicted multiplicities do not sum to C(2m+1, m)");
  return s;
}

Spectrum odd_spectrum_formula(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  std::map<std::int64_t, std::int64_t> mult;
  for (int i = 0; i <= m; ++i) {
    mult[(i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(m + 1 - i)] +=
        binomial_i64(2 * m + 1, i) - binomial_i64(2 * m + 1, i - 1);
  }
  return Spectrum::from_map(mult);
}

}  // namespace dualswitch
