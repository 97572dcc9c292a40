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

// Permutations of {1, ..., n}.
//
// Points are 1-based at every public boundary (constructors, operator(),
// cycle notation) and 0-based in storage. Composition follows
//
//     compose(p, q)(x) == p(q(x)),
//
// i.e. the right operand acts first. The map x -> a * x * b used for
// Cayley-graph automorphisms is compose(compose(a, x), b).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dualswitch {

/// Thrown by parse_cycles for malformed or out-of-range input.
class CycleParseError : public std::invalid_argument {
 public:
  CycleParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Permutation {
 public:
  /// Builds a permutation from its 1-based image sequence; images[i] is the
  /// image of point i + 1. Throws std::invalid_argument unless bijective.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// The transposition (a b) of degree n.
  static Permutation transposition(int degree, int a, int b);
  /// Builds from a 0-based image table without copying through 1-based form.
  static Permutation from_zero_based(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of the 1-based point.
  int operator()(int point) const;

  /// 0-based image of the 0-based point. Unchecked.
  int image0(int index) const noexcept { return images_[static_cast<std::size_t>(index)]; }
  std::span<const int> zero_based() const noexcept { return images_; }

  /// The 1-based image sequence.
  std::vector<int> images() const;

  bool is_identity() const noexcept;
  /// Order in the group generated by this permutation (lcm of cycle lengths).
  std::int64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on image sequences.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct ZeroBased {};
  Permutation(ZeroBased, std::vector<int> images);

  std::vector<int> images_;
};

enum class Parity { even, odd };

/// Cycle lengths sorted non-increasing, fixed points included as parts of 1.
struct CycleType {
  std::vector<int> parts;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// x -> p(q(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation inverse(const Permutation& p);

/// s * p * s^-1.
Permutation conjugate(const Permutation& p, const Permutation& s);

Parity parity(const Permutation& p);
CycleType cycle_type(const Permutation& p);

/// Disjoint cycles of length >= 2 in canonical form: each rotated to start at
/// its smallest point, cycles ordered by smallest point.
std::vector<std::vector<int>> cycles(const Permutation& p);

/// Canonical cycle notation, e.g. "(1 2 3)(4 5)"; the identity is "()".
std::string format_cycles(const Permutation& p);

/// Parses cycle notation:
///   expression := "()" | cycle+
///   cycle      := "(" point (" " point)* ")"
/// with optional whitespace between cycles. Points must lie in [1, degree]
/// and be distinct across the whole expression.
Permutation parse_cycles(std::string_view text, int degree);

std::string to_string(Parity parity);
std::string to_string(const CycleType& type);

/// The symmetric group Sym_n, enumerated in lexicographic order of image
/// sequences. Ranks are Lehmer codes.
class SymmetricGroup {
 public:
  static constexpr int kMaxDegree = 9;

  /// Throws std::invalid_argument unless 1 <= degree <= kMaxDegree.
  explicit SymmetricGroup(int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }

  const Permutation& unrank(std::size_t rank) const;
  const Permutation& operator[](std::size_t rank) const { return elements_[rank]; }
  std::size_t rank(const Permutation& p) const;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

 private:
  int degree_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> factorials_;
};

/// All elements of order exactly 2 in Sym_n, lexicographic.
std::vector<Permutation> involutions(int degree);

}  // namespace dualswitch
