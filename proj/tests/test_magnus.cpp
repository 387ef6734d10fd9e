// Copyright 2026 The linkhom Authors
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

#include <catch_amalgamated.hpp>

#include "linkhom/magnus.hpp"
#include "support.hpp"

using namespace linkhom;
using linkhom::testing::w;

namespace {
ReducedPolynomial poly(int rank, std::initializer_list<std::pair<std::vector<int>, long long>> terms) {
  ReducedPolynomial p(rank);
  for (const auto& [m, c] : terms) p.add(Monomial(m), c);
  return p;
}
}  // namespace

TEST_CASE("poly_multiply truncates repeated indices") {
  CHECK(poly_multiply(poly(2, {{{}, 1}, {{1}, 1}}), poly(2, {{{}, 1}, {{1}, -1}})) == ReducedPolynomial::one(2));
  CHECK(poly_multiply(poly(2, {{{}, 1}, {{1}, 1}}), poly(2, {{{}, 1}, {{2}, 1}})) ==
        poly(2, {{{}, 1}, {{1}, 1}, {{2}, 1}, {{1, 2}, 1}}));
  const auto sq = poly(4, {{{}, 1}, {{1, 2}, 1}});
  CHECK(poly_multiply(sq, sq) == poly(4, {{{}, 1}, {{1, 2}, 2}}));
  CHECK_THROWS_AS(poly_multiply(ReducedPolynomial::one(2), ReducedPolynomial::one(3)), InputError);
}

TEST_CASE("expand") {
  CHECK(expand(w("x1 x1^-1"), 2).is_one());
  CHECK(expand(w("x1 x2 x1^-1 x2^-1"), 2) == poly(2, {{{}, 1}, {{1, 2}, 1}, {{2, 1}, -1}}));
  const Word c3 = concat(concat(power(w("x1"), 3), w("x2")), concat(power(w("x1"), -3), w("x2^-1")));
  CHECK(expand(c3, 2) == poly(2, {{{}, 1}, {{1, 2}, 3}, {{2, 1}, -3}}));
  CHECK_THROWS_AS(expand(w("x3"), 2), InputError);
  CHECK_THROWS_AS(expand(w("x1"), 13), InputError);
  CHECK_NOTHROW(expand(w("x1"), 13, 13));
}

TEST_CASE("rf_equal") {
  const Word g = w("x2"), h = w("x3");
  const Word gx = concat(concat(g, w("x1")), invert(g));
  const Word hx = concat(concat(h, w("x1")), invert(h));
  CHECK(rf_equal(concat(gx, hx), concat(hx, gx), 3));
  CHECK_FALSE(rf_equal(w("x1 x2"), w("x2 x1"), 2));
  CHECK(rf_equal(w("x1 x2 x2^-1 x3"), w("x1 x3"), 3));
  // [x1, x1 x2 x1^-1] has a repeated index and vanishes in RF(2) but not in F(2).
  const Word rep = commutator(w("x1"), w("x2 x1 x2^-1"));
  CHECK_FALSE(is_freely_trivial(rep));
  CHECK(rf_trivial(rep, 2));
}

TEST_CASE("coefficient") {
  CHECK(coefficient(expand(w("x1 x2 x1^-1 x2^-1"), 2), Monomial({1, 2})) == 1);
  CHECK(coefficient(expand(w("x1 x1 x1"), 2), Monomial({1})) == 3);
  CHECK(coefficient(expand(w("e"), 2), Monomial()) == 1);
  CHECK(coefficient(expand(w("x1"), 2), Monomial({2, 1})) == 0);
  CHECK_THROWS_AS(Monomial({1, 1}), InputError);
}

TEST_CASE("json form is canonically ordered") {
  const auto j = to_json(expand(w("x2 x1 x2^-1 x1^-1"), 2));
  CHECK(j.dump() == R"([{"coef":1,"mono":[]},{"coef":-1,"mono":[1,2]},{"coef":1,"mono":[2,1]}])");
}

TEST_CASE("Magnus laws on random words") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> rank_dist(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rank_dist(rng);
    const Word u = testing::random_word(rng, n, 20), v = testing::random_word(rng, n, 20);
    const auto eu = expand(u, n);
    CHECK(expand(concat(u, v), n) == poly_multiply(eu, expand(v, n)));
    CHECK(rf_equal(u, free_reduce(u), n));
    CHECK(eu.coefficient(Monomial()) == 1);
    for (int i = 1; i <= n; ++i) CHECK(eu.coefficient(Monomial({i})) == exponent_sum(u, i));
    std::size_t bound = 0, falling = 1;
    for (int k = 0; k <= n; ++k) {
      bound += falling;
      falling *= static_cast<std::size_t>(n - k);
    }
    CHECK(eu.size() <= bound);
    const Word g = testing::random_word(rng, n, 8), h = testing::random_word(rng, n, 8);
    std::uniform_int_distribution<int> gen(1, n);
    const Word x = Word::generator(gen(rng));
    const Word gx = concat(concat(g, x), invert(g)), hx = concat(concat(h, x), invert(h));
    CHECK(rf_equal(concat(gx, hx), concat(hx, gx), n));
  }
}
