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

#include "dualswitch/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dualswitch {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("permutation degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
  }
}

bool is_bijection(const std::vector<int>& zero_based) {
  std::vector<bool> seen(zero_based.size(), false);
  for (int image : zero_based) {
    if (image < 0 || static_cast<std::size_t>(image) >= zero_based.size() ||
        seen[static_cast<std::size_t>(image)]) {
      return false;
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
  return true;
}

}  // namespace

CycleParseError::CycleParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  for (int& image : images_) --image;
  if (images_.empty() || !is_bijection(images_)) {
    throw std::invalid_argument("image sequence is not a permutation of {1..n}");
  }
}

Permutation::Permutation(ZeroBased, std::vector<int> images) : images_(std::move(images)) {}

Permutation Permutation::from_zero_based(std::vector<int> images) {
  if (images.empty() || !is_bijection(images)) {
    throw std::invalid_argument("image table is not a permutation of {0..n-1}");
  }
  return Permutation(ZeroBased{}, std::move(images));
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(ZeroBased{}, std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 1 || b < 1 || a > degree || b > degree || a == b) {
    throw std::invalid_argument("transposition points must be distinct and within [1, degree]");
  }
  Permutation t = identity(degree);
  std::swap(t.images_[static_cast<std::size_t>(a - 1)], t.images_[static_cast<std::size_t>(b - 1)]);
  return t;
}

int Permutation::operator()(int point) const {
  if (point < 1 || point > degree()) {
    throw std::out_of_range("point " + std::to_string(point) + " outside [1, " +
                            std::to_string(degree()) + "]");
  }
  return images_[static_cast<std::size_t>(point - 1)] + 1;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_);
  for (int& image : out) ++image;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::int64_t Permutation::order() const {
  std::int64_t result = 1;
  for (int part : cycle_type(*this).parts) result = std::lcm(result, static_cast<std::int64_t>(part));
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[static_cast<std::size_t>(x)] = p.image0(q.image0(x));
  return Permutation::from_zero_based(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) images[static_cast<std::size_t>(p.image0(x))] = x;
  return Permutation::from_zero_based(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& s) {
  require_same_degree(p, s);
  return compose(compose(s, p), inverse(s));
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> visited(static_cast<std::size_t>(p.degree()), false);
  // Scanning points in increasing order yields canonical rotation and ordering.
  for (int start = 0; start < p.degree(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !visited[static_cast<std::size_t>(x)]; x = p.image0(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x + 1);
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  CycleType type;
  std::vector<bool> visited(static_cast<std::size_t>(p.degree()), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    for (int x = start; !visited[static_cast<std::size_t>(x)]; x = p.image0(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      ++length;
    }
    type.parts.push_back(length);
  }
  std::sort(type.parts.begin(), type.parts.end(), std::greater<>());
  return type;
}

Parity parity(const Permutation& p) {
  // A k-cycle is a product of k - 1 transpositions.
  int transpositions = 0;
  for (int part : cycle_type(p).parts) transpositions += part - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::string format_cycles(const Permutation& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto at = [&](char c) { return pos < text.size() && text[pos] == c; };

  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  skip_space();
  if (text.substr(pos).starts_with("()")) {
    pos += 2;
    skip_space();
    if (pos != text.size()) throw CycleParseError("identity \"()\" must stand alone", pos);
    return Permutation::identity(degree);
  }
  if (pos == text.size()) throw CycleParseError("empty expression", pos);

  while (pos < text.size()) {
    if (!at('(')) throw CycleParseError("expected '('", pos);
    ++pos;
    std::vector<int> cycle;
    while (true) {
      const std::size_t start = pos;
      long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = std::min<long long>(value * 10 + (text[pos] - '0'), 1LL << 40);
        ++pos;
      }
      if (pos == start) throw CycleParseError("expected a point", pos);
      if (value < 1 || value > degree) {
        throw CycleParseError("point " + std::string(text.substr(start, pos - start)) +
                                  " out of range [1, " + std::to_string(degree) + "]",
                              start);
      }
      const int point = static_cast<int>(value);
      if (used[static_cast<std::size_t>(point - 1)]) {
        throw CycleParseError("point " + std::to_string(point) + " repeated", start);
      }
      used[static_cast<std::size_t>(point - 1)] = true;
      cycle.push_back(point - 1);
      if (at(')')) {
        ++pos;
        break;
      }
      if (!at(' ')) throw CycleParseError("expected ' ' or ')'", pos);
      ++pos;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation::from_zero_based(std::move(images));
}

std::string to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

std::string to_string(const CycleType& type) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < type.parts.size(); ++k) out << (k ? "," : "") << type.parts[k];
  out << ']';
  return out.str();
}

SymmetricGroup::SymmetricGroup(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("Sym_n enumeration supports 1 <= n <= " + std::to_string(kMaxDegree) +
                                ", got n = " + std::to_string(degree));
  }
  factorials_.assign(static_cast<std::size_t>(degree) + 1, 1);
  for (std::size_t k = 1; k < factorials_.size(); ++k) factorials_[k] = factorials_[k - 1] * k;
  elements_.reserve(factorials_.back());
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  do {
    elements_.push_back(Permutation::from_zero_based(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

const Permutation& SymmetricGroup::unrank(std::size_t rank) const {
  if (rank >= elements_.size()) {
    throw std::out_of_range("rank " + std::to_string(rank) + " outside Sym_" + std::to_string(degree_));
  }
  return elements_[rank];
}

std::size_t SymmetricGroup::rank(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("permutation degree mismatch");
  std::size_t rank = 0;
  for (int i = 0; i < degree_; ++i) {
    std::size_t smaller_later = 0;
    for (int j = i + 1; j < degree_; ++j) {
      if (p.image0(j) < p.image0(i)) ++smaller_later;
    }
    rank += smaller_later * factorials_[static_cast<std::size_t>(degree_ - 1 - i)];
  }
  return rank;
}

std::vector<Permutation> involutions(int degree) {
  std::vector<Permutation> out;
  for (const Permutation& p : SymmetricGroup(degree)) {
    if (p.order() == 2) out.push_back(p);
  }
  return out;
}

}  // namespace dualswitch
