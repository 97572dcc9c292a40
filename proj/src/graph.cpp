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

#include "dualswitch/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace dualswitch {

Graph::Graph(BitMatrix adjacency, std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
  const std::size_t n = adjacency_.size();
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (adjacency_.test(u, u)) throw std::invalid_argument("adjacency has a loop at vertex " + std::to_string(u));
    for (Vertex v = u + 1; v < n; ++v) {
      if (adjacency_.test(u, v) != adjacency_.test(v, u)) {
        throw std::invalid_argument("adjacency is not symmetric at (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
      }
    }
    degree_sum += adjacency_.row_count(u);
  }
  edge_count_ = degree_sum / 2;
  if (!labels_.empty()) {
    if (labels_.size() != n) throw std::invalid_argument("label count must equal the vertex count");
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) throw std::invalid_argument("vertex labels must be distinct");
  }
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto words = adjacency_.row(v);
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  BitMatrix adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adjacency.set(u, v);
    adjacency.set(v, u);
  }
  return Graph(std::move(adjacency), std::move(labels));
}

VertexMap::VertexMap(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex image : images_) {
    if (image >= images_.size() || seen[image]) throw std::invalid_argument("vertex map is not a bijection");
    seen[image] = true;
  }
}

VertexMap VertexMap::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  return VertexMap(std::move(images));
}

bool VertexMap::is_identity() const noexcept {
  for (Vertex v = 0; v < images_.size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

bool VertexMap::is_involution() const noexcept {
  for (Vertex v = 0; v < images_.size(); ++v) {
    if (images_[images_[v]] != v) return false;
  }
  return true;
}

VertexMap compose(const VertexMap& f, const VertexMap& g) {
  if (f.size() != g.size()) throw std::invalid_argument("vertex map size mismatch");
  std::vector<Vertex> images(f.size());
  for (Vertex v = 0; v < f.size(); ++v) images[v] = f(g(v));
  return VertexMap(std::move(images));
}

VertexMap inverse(const VertexMap& f) {
  std::vector<Vertex> images(f.size());
  for (Vertex v = 0; v < f.size(); ++v) images[f(v)] = v;
  return VertexMap(std::move(images));
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile profile;
  if (g.order() == 0) return profile;
  profile.min_degree = profile.max_degree = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    profile.min_degree = std::min(profile.min_degree, g.degree(v));
    profile.max_degree = std::max(profile.max_degree, g.degree(v));
  }
  profile.regular = profile.min_degree == profile.max_degree;
  return profile;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? parts.part0 : parts.part1).push_back(v);
  return parts;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::size_t> local(g.order(), g.order());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k] >= g.order()) throw std::invalid_argument("vertex outside the graph");
    if (local[vertices[k]] != g.order()) throw std::invalid_argument("vertex listed twice");
    local[vertices[k]] = k;
  }
  BitMatrix adjacency(vertices.size());
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (Vertex v : g.neighbors(vertices[k])) {
      if (local[v] != g.order()) adjacency.set(k, local[v]);
    }
    if (g.has_labels()) labels.push_back(g.labels()[vertices[k]]);
  }
  return Graph(std::move(adjacency), std::move(labels));
}

std::vector<Component> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Component> out;
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members;
    seen[root] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    Graph induced = induced_subgraph(g, members);
    out.push_back(Component{std::move(members), std::move(induced)});
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.order();
}

bool check_iso_by_map(const Graph& g1, const Graph& g2, const VertexMap& f) {
  if (g1.order() != g2.order() || f.size() != g1.order()) {
    throw std::invalid_argument("graph and map sizes must agree");
  }
  if (g1.edge_count() != g2.edge_count()) return false;
  // f is a bijection and edge counts agree, so edges mapping into edges suffices.
  for (Vertex u = 0; u < g1.order(); ++u) {
    for (Vertex v : g1.neighbors(u)) {
      if (!g2.adjacent(f(u), f(v))) return false;
    }
  }
  return true;
}

bool is_automorphism(const Graph& g, const VertexMap& f) {
  if (f.size() != g.order()) return false;
  return check_iso_by_map(g, g, f);
}

namespace {

constexpr char kGraph6Offset = 63;

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + kGraph6Offset);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kGraph6Offset);
  } else if (n <= 68719476735ULL) {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kGraph6Offset);
  } else {
    throw std::invalid_argument("graph too large for graph6");
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  int bits = 0;
  int value = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(value + kGraph6Offset);
        bits = value = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>((value << (6 - bits)) + kGraph6Offset);
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside printable range 63..126");
  }
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  const auto read_digits = [&](int count) {
    if (text.size() < pos + static_cast<std::size_t>(count)) throw std::invalid_argument("graph6: truncated header");
    std::size_t value = 0;
    for (int k = 0; k < count; ++k) value = (value << 6) | static_cast<std::size_t>(text[pos++] - kGraph6Offset);
    return value;
  };
  if (text[0] != '~') {
    n = read_digits(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = read_digits(6);
    if (n <= 258047) throw std::invalid_argument("graph6: non-minimal 8-byte header");
  } else {
    pos = 1;
    n = read_digits(3);
    if (n <= 62) throw std::invalid_argument("graph6: non-minimal 4-byte header");
  }
  if (n > 1'000'000) throw std::invalid_argument("graph6: graph too large to decode");

  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw std::invalid_argument("graph6: expected " + std::to_string(byte_count) + " data bytes, found " +
                                std::to_string(text.size() - pos));
  }
  BitMatrix adjacency(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kGraph6Offset;
      if ((byte >> (5 - k % 6)) & 1) {
        adjacency.set(i, j);
        adjacency.set(j, i);
      }
    }
  }
  if (k % 6 != 0) {
    const int last = text.back() - kGraph6Offset;
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(std::move(adjacency));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header, expected \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v) || u < 0 || v < 0) {
      throw std::invalid_argument("edge list: bad edge line " + std::to_string(k + 1));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (in >> trailing) throw std::invalid_argument("edge list: trailing data after " + std::to_string(m) + " edges");
  return build_graph(static_cast<std::size_t>(n), edges);
}

}  // namespace dualswitch
