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

#include "dualswitch/linalg.hpp"

#include <random>
#include <string>

namespace dualswitch {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;
constexpr std::uint64_t kScheduleSeed = 0x6475616c73776974ULL;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set for n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  if (n % 2 == 0) ++n;
  while (!is_prime(n)) {
    if (n > UINT64_MAX - 2) throw std::overflow_error("no 64-bit prime above the start value");
    n += 2;
  }
  return n;
}

std::vector<std::uint64_t> prime_schedule(std::size_t count) {
  std::mt19937_64 engine(kScheduleSeed);
  std::vector<std::uint64_t> primes;
  while (primes.size() < count) {
    const std::uint64_t start = (engine() >> 3) | (std::uint64_t{1} << 61);
    const std::uint64_t p = next_prime(start);
    if (p < kMaxModulus) primes.push_back(p);
  }
  return primes;
}

Eigen::Index rank_mod_p_inplace(ModMatrix& m, std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^62");
  }
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const std::uint64_t inv = pow_mod(m(rank, c), p - 2, p);
    // Normalise the pivot row so each elimination step needs one product per entry.
    for (Eigen::Index j = c; j < cols; ++j) m(rank, j) = mul_mod(m(rank, j), inv, p);
    const std::uint64_t* pivot_row = &m(rank, 0);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const std::uint64_t factor = m(r, c);
      if (factor == 0) continue;
      std::uint64_t* row = &m(r, 0);
      for (Eigen::Index j = c; j < cols; ++j) {
        const std::uint64_t sub = mul_mod(factor, pivot_row[j], p);
        row[j] = row[j] >= sub ? row[j] - sub : row[j] + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

Eigen::Index fraction_free_rank(std::vector<mpz_class>& a, Eigen::Index rows, Eigen::Index cols) {
  if (static_cast<Eigen::Index>(a.size()) != rows * cols) throw std::invalid_argument("entry count mismatch");
  const auto at = [&](Eigen::Index r, Eigen::Index c) -> mpz_class& {
    return a[static_cast<std::size_t>(r * cols + c)];
  };
  mpz_class previous = 1;
  mpz_class t;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (Eigen::Index j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const mpz_class& p = at(rank, c);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const mpz_class factor = at(r, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        mpz_class& entry = at(r, j);
        entry *= p;
        t = factor * at(rank, j);
        entry -= t;
        // Every intermediate entry is a minor of the input, so this division is exact.
        mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(), previous.get_mpz_t());
      }
      at(r, c) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

std::int64_t binomial_i64(long n, long k) {
  const mpz_class value = binomial(n, k);
  if (!value.fits_slong_p()) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  return value.get_si();
}

}  // namespace dualswitch
