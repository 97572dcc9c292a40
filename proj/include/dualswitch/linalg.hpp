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

// Exact linear algebra over Z, Q and F_p for integer matrices.

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dualswitch {

using ModMatrix = Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

__extension__ using uint128 = unsigned __int128;

/// a * b mod p for p < 2^62.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % p);
}

/// Reduces a signed integer into [0, p).
inline std::uint64_t to_residue(std::int64_t value, std::uint64_t p) noexcept {
  const std::int64_t r = value % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

/// The first `count` primes of the fixed, seeded 62-bit schedule. Identical
/// across runs and platforms.
std::vector<std::uint64_t> prime_schedule(std::size_t count);

/// Rank over F_p of a residue matrix; the argument is consumed.
/// Throws std::invalid_argument if p is not prime or exceeds 2^62.
Eigen::Index rank_mod_p_inplace(ModMatrix& m, std::uint64_t p);

/// Rank over F_p of an integer matrix.
template <typename Derived>
Eigen::Index rank_mod_p(const Eigen::MatrixBase<Derived>& m, std::uint64_t p) {
  ModMatrix residues(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) residues(r, c) = to_residue(static_cast<std::int64_t>(m(r, c)), p);
  }
  return rank_mod_p_inplace(residues, p);
}

/// Rank over Q by fraction-free (Bareiss) elimination on a row-major
/// rows x cols table of big integers; the argument is consumed.
Eigen::Index fraction_free_rank(std::vector<mpz_class>& entries, Eigen::Index rows, Eigen::Index cols);

/// Rank over Q of an integer matrix.
template <typename Derived>
Eigen::Index rank_exact(const Eigen::MatrixBase<Derived>& m) {
  std::vector<mpz_class> entries;
  entries.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.emplace_back(static_cast<long>(m(r, c)));
  }
  return fraction_free_rank(entries, m.rows(), m.cols());
}

/// Exact determinant by Bareiss elimination.
template <typename Derived>
mpz_class determinant_exact(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> a;
  a.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) a.emplace_back(static_cast<long>(m(r, c)));
  }
  const auto at = [&](Eigen::Index r, Eigen::Index c) -> mpz_class& { return a[static_cast<std::size_t>(r * n + c)]; };
  mpz_class previous = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (Eigen::Index c = 0; c < n; ++c) std::swap(at(pivot, c), at(k, c));
      sign = -sign;
    }
    for (Eigen::Index r = k + 1; r < n; ++r) {
      for (Eigen::Index c = k + 1; c < n; ++c) {
        at(r, c) = (at(k, k) * at(r, c) - at(r, k) * at(k, c)) / previous;
      }
      at(r, k) = 0;
    }
    previous = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

/// Binomial coefficient C(n, k) as a big integer; zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// C(n, k) narrowed to 64 bits. Throws std::overflow_error if it does not fit.
std::int64_t binomial_i64(long n, long k);

}  // namespace dualswitch
