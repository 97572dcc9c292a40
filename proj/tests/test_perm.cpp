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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace dualswitch;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

Permutation cyc(const char* text, int n) { return parse_cycles(text, n); }

}  // namespace

TEST_CASE("parse_cycles") {
  CHECK(cyc("()", 5) == Permutation::identity(5));

  const Permutation p = cyc("(2 3)(4 5)", 5);
  CHECK(p(1) == 1);
  CHECK(p(2) == 3);
  CHECK(p(3) == 2);
  CHECK(p(4) == 5);
  CHECK(p(5) == 4);

  CHECK(cyc("(1 2 3)", 3).images() == std::vector<int>{2, 3, 1});
  CHECK(cyc("  (1 2) (3 4)  ", 4) == cyc("(1 2)(3 4)", 4));
  CHECK(cyc("(3)", 4) == Permutation::identity(4));
  CHECK(cyc("(12 1)", 12)(12) == 1);
}

TEST_CASE("parse_cycles rejects malformed input") {
  CHECK_THROWS_AS(cyc("(1 2 7)", 5), CycleParseError);
  CHECK_THROWS_AS(cyc("(0 1)", 5), CycleParseError);
  CHECK_THROWS_AS(cyc("(1 2)(2 3)", 5), CycleParseError);
  CHECK_THROWS_AS(cyc("(1 1)", 5), CycleParseError);
  for (const char* bad : {"", "   ", "(1 2", "1 2", "(1  2)", "(1,2)", "()(1 2)", "(1 2)()", "( 1 2)", "(1 2 )", "(a)", "(-1)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(cyc(bad, 5), CycleParseError);
  }
  try {
    cyc("(1 2 7)", 5);
  } catch (const CycleParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("format_cycles is canonical") {
  CHECK(format_cycles(Permutation::identity(4)) == "()");
  CHECK(format_cycles(Permutation({3, 1, 2, 5, 4})) == "(1 3 2)(4 5)");
  CHECK(format_cycles(cyc("(5 4)(3 1 2)", 5)) == "(1 2 3)(4 5)");
}

TEST_CASE("parse_cycles inverts format_cycles on Sym_5") {
  for (const Permutation& p : SymmetricGroup(5)) CHECK(parse_cycles(format_cycles(p), 5) == p);
}

TEST_CASE("compose applies the right operand first") {
  const Permutation p = cyc("(1 2)", 3);
  const Permutation q = cyc("(2 3)", 3);
  const Permutation pq = compose(p, q);
  for (int x = 1; x <= 3; ++x) CHECK(pq(x) == p(q(x)));
  CHECK(pq == cyc("(1 2 3)", 3));
  CHECK(compose(p, p).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), std::invalid_argument);

  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    const Permutation r = random_permutation(6, rng);
    CHECK(compose(r, Permutation::identity(6)) == r);
    CHECK(compose(Permutation::identity(6), r) == r);
  }
}

TEST_CASE("compose is associative on Sym_3") {
  const SymmetricGroup g(3);
  for (const auto& a : g) {
    for (const auto& b : g) {
      for (const auto& c : g) CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(4)).is_identity());
  const Permutation c = cyc("(1 2 3)", 3);
  CHECK(inverse(c) == cyc("(1 3 2)", 3));
  for (int x = 1; x <= 3; ++x) CHECK(inverse(c)(c(x)) == x);
  for (const Permutation& p : involutions(5)) CHECK(inverse(p) == p);
  for (const Permutation& p : SymmetricGroup(4)) CHECK(compose(p, inverse(p)).is_identity());
}

TEST_CASE("conjugate") {
  CHECK(conjugate(cyc("(1 2)", 3), cyc("(2 3)", 3)) == cyc("(1 3)", 3));
  // s (1 i) s^-1 = (1 s(i)) when s fixes 1.
  const Permutation s = cyc("(2 4 3)", 5);
  for (int i = 2; i <= 5; ++i) CHECK(conjugate(Permutation::transposition(5, 1, i), s) == Permutation::transposition(5, 1, s(i)));

  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    const Permutation p = random_permutation(7, rng);
    CHECK(conjugate(p, Permutation::identity(7)) == p);
    CHECK(cycle_type(conjugate(p, random_permutation(7, rng))) == cycle_type(p));
  }
}

TEST_CASE("conjugation preserves cycle type on Sym_4") {
  const SymmetricGroup g(4);
  for (const auto& p : g) {
    for (const auto& s : g) CHECK(cycle_type(conjugate(p, s)) == cycle_type(p));
  }
}

TEST_CASE("parity") {
  CHECK(parity(cyc("(2 4)", 5)) == Parity::odd);
  CHECK(parity(cyc("(2 3)(4 5)", 5)) == Parity::even);
  CHECK(parity(cyc("(1 2 3)", 5)) == Parity::even);
  CHECK(parity(Permutation::identity(3)) == Parity::even);
}

TEST_CASE("parity is a homomorphism on Sym_4") {
  // Oracle: parity from the inversion count.
  const auto inversions = [](const Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.degree(); ++i) {
      for (int j = i + 1; j <= p.degree(); ++j) count += p(i) > p(j);
    }
    return count % 2 == 0 ? Parity::even : Parity::odd;
  };
  const SymmetricGroup g(4);
  for (const auto& p : g) {
    CHECK(parity(p) == inversions(p));
    for (const auto& q : g) {
      const bool odd = (parity(p) == Parity::odd) != (parity(q) == Parity::odd);
      CHECK(parity(compose(p, q)) == (odd ? Parity::odd : Parity::even));
    }
  }
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(cyc("(2 3)(4 5)(1 6)", 6)).parts == std::vector<int>{2, 2, 2});
  CHECK(cycle_type(compose(cyc("(2 3)(4 5)", 6), cyc("(1 2)", 6))).parts == std::vector<int>{3, 2, 1});
  CHECK(cycle_type(Permutation::identity(4)).parts == std::vector<int>{1, 1, 1, 1});
  CHECK(to_string(cycle_type(cyc("(1 2 3)", 5))) == "[3,1,1]");
  CHECK(cyc("(1 2 3)(4 5)", 5).order() == 6);
}

TEST_CASE("SymmetricGroup enumeration") {
  const SymmetricGroup s3(3);
  CHECK(s3.size() == 6);
  CHECK(s3.rank(Permutation::identity(3)) == 0);
  CHECK(s3[5].images() == std::vector<int>{3, 2, 1});
  CHECK(SymmetricGroup(5).size() == 120);

  const SymmetricGroup s4(4);
  for (std::size_t k = 0; k < s4.size(); ++k) {
    CHECK(s4.rank(s4.unrank(k)) == k);
    if (k > 0) CHECK(s4[k - 1] < s4[k]);
  }
  for (const Permutation& p : s4) CHECK(s4.unrank(s4.rank(p)) == p);

  CHECK_THROWS_AS(SymmetricGroup(0), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricGroup(10), std::invalid_argument);
  CHECK_THROWS_AS(s4.unrank(24), std::out_of_range);
  CHECK_THROWS_AS(s4.rank(Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("involutions") {
  // Telephone numbers 4, 10, 26 minus the identity.
  CHECK(involutions(3).size() == 3);
  CHECK(involutions(4).size() == 9);
  CHECK(involutions(5).size() == 25);
  const auto five = involutions(5);
  CHECK(std::is_sorted(five.begin(), five.end()));
  for (const auto& p : five) CHECK(p.order() == 2);
}

TEST_CASE("Permutation construction checks") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::transposition(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::identity(3)(4), std::out_of_range);
}
