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

// Simple undirected graphs with dense bit-row adjacency.

#include <Eigen/Core>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

namespace dualswitch {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Square bit matrix stored as packed 64-bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept { bits_[r * words_per_row_ + c / 64] |= std::uint64_t{1} << (c % 64); }

  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<std::uint64_t> row(std::size_t r) noexcept { return {bits_.data() + r * words_per_row_, words_per_row_}; }

  std::size_t row_count(std::size_t r) const noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Immutable simple graph. Vertex labels are optional and distinct when present.
class Graph {
 public:
  Graph() = default;

  /// Takes ownership of an adjacency matrix. Throws std::invalid_argument
  /// unless it is symmetric with a zero diagonal and labels are distinct.
  explicit Graph(BitMatrix adjacency, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return adjacency_.test(u, v); }
  std::size_t degree(Vertex v) const noexcept { return adjacency_.row_count(v); }
  std::span<const std::uint64_t> row(Vertex v) const noexcept { return adjacency_.row(v); }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  const BitMatrix& adjacency() const noexcept { return adjacency_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// The stored label, or the decimal index when the graph is unlabeled.
  std::string label(Vertex v) const;

  /// Compares the adjacency only; labels are ignored.
  bool same_adjacency(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  BitMatrix adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph from an edge set. Duplicate edges are idempotent; loops and
/// out-of-range endpoints throw std::invalid_argument.
Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

/// A bijection on vertex indices {0, ..., n-1}.
class VertexMap {
 public:
  VertexMap() = default;
  /// Throws std::invalid_argument unless images is a bijection.
  explicit VertexMap(std::vector<Vertex> images);
  static VertexMap identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const noexcept { return images_[v]; }
  const std::vector<Vertex>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_involution() const noexcept;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<Vertex> images_;
};

/// x -> f(g(x)).
VertexMap compose(const VertexMap& f, const VertexMap& g);
VertexMap inverse(const VertexMap& f);

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool regular = true;
};

DegreeProfile degree_profile(const Graph& g);

struct Bipartition {
  std::vector<Vertex> part0;
  std::vector<Vertex> part1;
};

/// Two-colouring by breadth-first search; the smallest vertex of each
/// component goes to part0. Empty when the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

struct Component {
  std::vector<Vertex> vertices;  // ascending original indices
  Graph graph;                   // induced, labels carried over
};

/// Connected components in order of their smallest vertex.
std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced on the listed vertices, in the listed order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// True iff u ~ v <=> f(u) ~ f(v) for all pairs.
bool is_automorphism(const Graph& g, const VertexMap& f);

/// True iff f maps the edge set of g1 exactly onto the edge set of g2.
/// Throws std::invalid_argument on size mismatch.
bool check_iso_by_map(const Graph& g1, const Graph& g2, const VertexMap& f);

/// Dense adjacency matrix A(g) with the requested scalar type.
template <typename Scalar = int>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) a(u, static_cast<Eigen::Index>(v)) = Scalar(1);
  }
  return a;
}

/// A(g) * x without materialising A.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> apply_adjacency(const Graph& g,
                                                                          const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const auto n = static_cast<Eigen::Index>(g.order());
  if (x.rows() != n || x.cols() != 1) throw std::invalid_argument("vector length must equal the vertex count");
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n);
  for (Eigen::Index u = 0; u < n; ++u) {
    Scalar sum(0);
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) sum += x(static_cast<Eigen::Index>(v));
    y(u) = sum;
  }
  return y;
}

// graph6 interchange (https://users.cecs.anu.edu.au/~bdm/data/formats.txt).

std::string encode_graph6(const Graph& g);
/// Throws std::invalid_argument on malformed header, length or padding.
Graph decode_graph6(std::string_view text);

// Edge-list text: first line "n m", then m lines "u v" with 0-based indices.

void write_edge_list(std::ostream& out, const Graph& g);
/// Throws std::invalid_argument on malformed input.
Graph read_edge_list(std::istream& in);

}  // namespace dualswitch
