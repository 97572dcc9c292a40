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

#include "dualswitch/spectra.hpp"

#include "dualswitch/jacobi.hpp"
#include "dualswitch/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <future>
#include <thread>

namespace dualswitch {

Spectrum::Spectrum(std::vector<Eigenpair> entries) {
  std::map<std::int64_t, std::int64_t> merged;
  for (const Eigenpair& e : entries) {
    if (e.multiplicity < 0) throw std::invalid_argument("negative multiplicity for eigenvalue " + std::to_string(e.value));
    merged[e.value] += e.multiplicity;
  }
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (it->second > 0) entries_.push_back({it->first, it->second});
  }
}

Spectrum Spectrum::from_map(const std::map<std::int64_t, std::int64_t>& multiplicities) {
  std::vector<Eigenpair> entries;
  for (const auto& [value, mult] : multiplicities) entries.push_back({value, mult});
  return Spectrum(std::move(entries));
}

std::int64_t Spectrum::multiplicity(std::int64_t value) const noexcept {
  for (const Eigenpair& e : entries_) {
    if (e.value == value) return e.multiplicity;
  }
  return 0;
}

std::int64_t Spectrum::total() const noexcept {
  std::int64_t sum = 0;
  for (const Eigenpair& e : entries_) sum += e.multiplicity;
  return sum;
}

std::int64_t Spectrum::trace() const noexcept {
  std::int64_t sum = 0;
  for (const Eigenpair& e : entries_) sum += e.value * e.multiplicity;
  return sum;
}

std::int64_t Spectrum::second_moment() const noexcept {
  std::int64_t sum = 0;
  for (const Eigenpair& e : entries_) sum += e.value * e.value * e.multiplicity;
  return sum;
}

Spectrum Spectrum::absolute() const {
  std::vector<Eigenpair> out;
  for (const Eigenpair& e : entries_) out.push_back({e.value < 0 ? -e.value : e.value, e.multiplicity});
  return Spectrum(std::move(out));
}

Spectrum Spectrum::negated() const {
  std::vector<Eigenpair> out;
  for (const Eigenpair& e : entries_) out.push_back({-e.value, e.multiplicity});
  return Spectrum(std::move(out));
}

bool spectrum_equal(const Spectrum& a, const Spectrum& b) { return a == b; }

std::string format_spectrum(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.entries().size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(s.entries()[k].value) + "^" + std::to_string(s.entries()[k].multiplicity);
  }
  return out + "}";
}

Spectrum parse_spectrum(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) {
    throw std::invalid_argument("spectrum text: " + what + " at offset " + std::to_string(pos));
  };
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto integer = [&](bool allow_sign) {
    skip();
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
    const std::size_t start = pos;
    std::int64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (pos - start > 17) fail("integer too long");
      value = value * 10 + (text[pos++] - '0');
    }
    if (pos == start) fail("expected an integer");
    return negative ? -value : value;
  };
  skip();
  if (pos >= text.size() || text[pos] != '{') fail("expected '{'");
  ++pos;
  std::vector<Eigenpair> entries;
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      const std::int64_t value = integer(true);
      skip();
      if (pos >= text.size() || text[pos] != '^') fail("expected '^'");
      ++pos;
      const std::int64_t mult = integer(false);
      entries.push_back({value, mult});
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      fail("expected ',' or '}'");
    }
  }
  skip();
  if (pos != text.size()) fail("trailing characters");
  return Spectrum(std::move(entries));
}

bool satisfies_moment_identities(const Spectrum& s, const Graph& g) {
  return s.total() == static_cast<std::int64_t>(g.order()) && s.trace() == 0 &&
         s.second_moment() == 2 * static_cast<std::int64_t>(g.edge_count());
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> shifted_adjacency(const Graph& g, std::int64_t lambda) {
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> a = adjacency_matrix<std::int64_t>(g);
  a.diagonal().array() -= lambda;
  return a;
}

namespace {

std::int64_t max_degree(const Graph& g) { return static_cast<std::int64_t>(degree_profile(g).max_degree); }

void require_modulus(const Graph& g, std::int64_t lambda, std::uint64_t p) {
  const std::int64_t reach = std::max(lambda < 0 ? -lambda : lambda, max_degree(g));
  if (p <= static_cast<std::uint64_t>(2 * reach)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " must exceed 2 max(|lambda|, max degree) = " +
                                std::to_string(2 * reach));
  }
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

ModMatrix shifted_residues(const Graph& g, std::int64_t lambda, std::uint64_t p) {
  const auto n = static_cast<Eigen::Index>(g.order());
  ModMatrix m = ModMatrix::Zero(n, n);
  const std::uint64_t diagonal = to_residue(-lambda, p);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) m(u, static_cast<Eigen::Index>(v)) = 1;
    m(u, u) = diagonal;
  }
  return m;
}

// Whether prod over `roots` of (A - lambda I) vanishes modulo p.
bool annihilates_mod_p(const Graph& g, const std::vector<std::int64_t>& roots, std::uint64_t p) {
  const auto n = static_cast<Eigen::Index>(g.order());
  std::vector<std::vector<Vertex>> adjacency(g.order());
  for (Vertex u = 0; u < g.order(); ++u) adjacency[u] = g.neighbors(u);
  ModMatrix product = ModMatrix::Identity(n, n);
  ModMatrix next(n, n);
  for (std::int64_t lambda : roots) {
    const std::uint64_t shift = to_residue(-lambda, p);
    for (Eigen::Index u = 0; u < n; ++u) {
      for (Eigen::Index c = 0; c < n; ++c) {
        std::uint64_t sum = mul_mod(shift, product(u, c), p);
        for (Vertex v : adjacency[static_cast<std::size_t>(u)]) {
          sum += product(static_cast<Eigen::Index>(v), c);
          if (sum >= p) sum -= p;
        }
        next(u, c) = sum;
      }
    }
    product.swap(next);
  }
  return (product.array() == 0).all();
}

template <typename Fn>
std::vector<std::int64_t> map_candidates(std::int64_t degree, bool parallel, Fn&& rank_of) {
  std::vector<std::int64_t> ranks;
  if (parallel && std::thread::hardware_concurrency() > 1) {
    std::vector<std::future<std::int64_t>> jobs;
    for (std::int64_t lambda = -degree; lambda <= degree; ++lambda) {
      jobs.push_back(std::async(std::launch::async, [&rank_of, lambda] { return rank_of(lambda); }));
    }
    for (auto& job : jobs) ranks.push_back(job.get());
  } else {
    for (std::int64_t lambda = -degree; lambda <= degree; ++lambda) ranks.push_back(rank_of(lambda));
  }
  return ranks;
}

}  // namespace

Eigen::Index rank_mod_p(const Graph& g, std::int64_t lambda, std::uint64_t p) {
  require_modulus(g, lambda, p);
  ModMatrix m = shifted_residues(g, lambda, p);
  return rank_mod_p_inplace(m, p);
}

Eigen::Index rank_exact(const Graph& g, std::int64_t lambda) { return dualswitch::rank_exact(shifted_adjacency(g, lambda)); }

IntegralityVerdict integer_spectrum(const Graph& g, const SpectrumOptions& options) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (n == 0) throw std::invalid_argument("integer_spectrum needs a non-empty graph");
  const std::int64_t degree = max_degree(g);
  const std::vector<std::uint64_t> primes = options.primes.empty() ? prime_schedule(8) : options.primes;

  IntegralityVerdict verdict;
  const std::uint64_t p0 = primes.front();
  verdict.primes.push_back(p0);
  const auto modular_ranks =
      map_candidates(degree, options.parallel, [&](std::int64_t lambda) -> std::int64_t { return rank_mod_p(g, lambda, p0); });

  // Modular ranks never exceed rational ranks, so these are upper bounds on
  // the true multiplicities; candidates are distinct mod p0, so their sum is <= n.
  std::map<std::int64_t, std::int64_t> candidate;
  std::int64_t total = 0;
  for (std::int64_t lambda = -degree; lambda <= degree; ++lambda) {
    const std::int64_t mult = n - modular_ranks[static_cast<std::size_t>(lambda + degree)];
    candidate[lambda] = mult;
    total += mult;
  }

  if (total == n) {
    std::vector<std::int64_t> roots;
    mpz_class bound = 1;
    for (const auto& [lambda, mult] : candidate) {
      if (mult == 0) continue;
      roots.push_back(lambda);
      bound *= degree + (lambda < 0 ? -lambda : lambda);
    }
    // Entries of the product are bounded by the product of the factors'
    // row-sum norms; vanishing modulo primes whose product exceeds twice
    // that bound means it vanishes over Z.
    bool annihilated = true;
    mpz_class modulus = 1;
    std::size_t next = 0;
    while (annihilated && modulus <= 2 * bound) {
      if (next == primes.size()) throw std::invalid_argument("prime schedule too short for the certificate");
      const std::uint64_t p = primes[next++];
      if (next > 1) verdict.primes.push_back(p);
      require_modulus(g, degree, p);
      annihilated = annihilates_mod_p(g, roots, p);
      modulus *= mpz_class(std::to_string(p));
    }
    if (annihilated) {
      verdict.integral = true;
      verdict.spectrum = Spectrum::from_map(candidate);
      return verdict;
    }
  }

  // Exact path: a zero modular multiplicity is already exact.
  std::map<std::int64_t, std::int64_t> exact;
  std::int64_t exact_total = 0;
  for (const auto& [lambda, mult] : candidate) {
    if (mult == 0) continue;
    const std::int64_t m = n - static_cast<std::int64_t>(rank_exact(g, lambda));
    exact[lambda] = m;
    exact_total += m;
  }
  if (exact_total == n) {
    verdict.integral = true;
    verdict.spectrum = Spectrum::from_map(exact);
  } else {
    verdict.deficiency = n - exact_total;
  }
  return verdict;
}

std::vector<double> float_spectrum_oracle(const Graph& g) {
  if (g.order() > 2000) throw std::invalid_argument("float_spectrum_oracle supports at most 2000 vertices");
  const Eigen::VectorXd values = jacobi_eigenvalues(adjacency_matrix<double>(g));
  return {values.data(), values.data() + values.size()};
}

std::vector<Cluster> cluster_values(const std::vector<double>& values, double radius) {
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<Cluster> clusters;
  double sum = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k == 0 || sorted[k - 1] - sorted[k] > radius) {
      if (!clusters.empty()) clusters.back().center = sum / static_cast<double>(clusters.back().count);
      clusters.push_back({sorted[k], 0});
      sum = 0.0;
    }
    sum += sorted[k];
    ++clusters.back().count;
  }
  if (!clusters.empty()) clusters.back().center = sum / static_cast<double>(clusters.back().count);
  return clusters;
}

bool agrees_with_oracle(const Spectrum& exact, const std::vector<double>& approx, double radius) {
  const auto clusters = cluster_values(approx, radius);
  if (clusters.size() != exact.entries().size()) return false;
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const Eigenpair& e = exact.entries()[k];
    if (std::abs(clusters[k].center - static_cast<double>(e.value)) > radius) return false;
    if (clusters[k].count != e.multiplicity) return false;
  }
  return true;
}

}  // namespace dualswitch
