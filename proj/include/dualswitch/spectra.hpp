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

// Exact integer spectra of graphs.
//
// Every eigenvalue of a graph with maximum degree D lies in [-D, D], so a
// graph is integral exactly when the nullities of A - lambda I over the
// integer candidates lambda in [-D, D] add up to the vertex count.
// Nullities are computed modulo large primes and then certified: the
// product of (A - lambda I) over the candidates that received a positive
// multiplicity must vanish over Z, which forces every eigenvalue to be one
// of them. Exact rational ranks are used only when that certificate fails.

#include "dualswitch/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dualswitch {

struct Eigenpair {
  std::int64_t value = 0;
  std::int64_t multiplicity = 0;
  friend bool operator==(const Eigenpair&, const Eigenpair&) = default;
};

/// Multiset of integer eigenvalues, stored by distinct value in descending
/// order with positive multiplicities.
class Spectrum {
 public:
  Spectrum() = default;
  /// Accepts pairs in any order; merges repeated values and drops zero
  /// multiplicities. Throws std::invalid_argument on negative multiplicity.
  explicit Spectrum(std::vector<Eigenpair> entries);
  static Spectrum from_map(const std::map<std::int64_t, std::int64_t>& multiplicities);

  const std::vector<Eigenpair>& entries() const noexcept { return entries_; }
  std::int64_t multiplicity(std::int64_t value) const noexcept;

  /// Σ mult, Σ λ·mult and Σ λ²·mult.
  std::int64_t total() const noexcept;
  std::int64_t trace() const noexcept;
  std::int64_t second_moment() const noexcept;

  /// Multiset of |λ| (what A² determines).
  Spectrum absolute() const;
  /// λ -> -λ.
  Spectrum negated() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Eigenpair> entries_;
};

bool spectrum_equal(const Spectrum& a, const Spectrum& b);

/// Canonical "{4^1, 3^5, 0^15, -1^3}" form, descending.
std::string format_spectrum(const Spectrum& s);
/// Inverse of format_spectrum. Throws std::invalid_argument on bad input.
Spectrum parse_spectrum(std::string_view text);

/// Checks Σ mult = n, trace 0 and Σ λ² mult = 2|E|.
bool satisfies_moment_identities(const Spectrum& s, const Graph& g);

struct IntegralityVerdict {
  bool integral = false;
  std::optional<Spectrum> spectrum;        // present iff integral
  std::optional<std::int64_t> deficiency;  // non-integer eigenvalue count, iff not integral
  std::vector<std::uint64_t> primes;       // moduli consumed, in order
};

/// The matrix A(g) - lambda I.
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> shifted_adjacency(const Graph& g, std::int64_t lambda);

/// Rank of A - lambda I over F_p. Throws std::invalid_argument if p is not
/// prime or p <= 2 max(|lambda|, max degree).
Eigen::Index rank_mod_p(const Graph& g, std::int64_t lambda, std::uint64_t p);

/// Rank of A - lambda I over Q by fraction-free elimination.
Eigen::Index rank_exact(const Graph& g, std::int64_t lambda);

struct SpectrumOptions {
  /// Primes for the modular ranks and the annihilation certificate; when
  /// empty, prime_schedule() supplies them.
  std::vector<std::uint64_t> primes;
  /// Rank the candidates on worker threads (results are merged in candidate
  /// order, so output does not depend on scheduling).
  bool parallel = true;
};

IntegralityVerdict integer_spectrum(const Graph& g, const SpectrumOptions& options = {});

/// Approximate eigenvalues (descending) from the cyclic Jacobi solver.
/// Throws std::invalid_argument for more than 2000 vertices.
std::vector<double> float_spectrum_oracle(const Graph& g);

struct Cluster {
  double center = 0.0;
  std::int64_t count = 0;
};

/// Groups sorted values whose neighbours lie within `radius`.
std::vector<Cluster> cluster_values(const std::vector<double>& values, double radius);

/// True iff every cluster of `approx` sits within `radius` of an eigenvalue
/// of `exact` and carries exactly its multiplicity.
bool agrees_with_oracle(const Spectrum& exact, const std::vector<double>& approx, double radius);

}  // namespace dualswitch
