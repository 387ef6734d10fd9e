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

// Trivializing numbers of words.
//
// Z(w) is the least number of letters to delete from w (as written) so that
// what remains is trivial in the free group. A word is freely trivial iff its
// letters admit a non-crossing perfect matching of each letter with an
// inverse letter, so Z(w) = |w| - (largest such matchable subsequence), which
// an interval DP finds in O(|w|^3). The brute-force oracle below is kept as
// an independent check of that characterization.
//
// RZ(g) minimises Z over all words representing g in RF(n). There is no
// known algorithm for it; this module builds explicit representatives and
// reports their Z as upper bounds.

#pragma once

#include <algorithm>
#include <cstdint>
#include <bit>
#include <deque>
#include <optional>
#include <tuple>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "linkhom/errors.hpp"
#include "linkhom/free_words.hpp"
#include "linkhom/hall.hpp"
#include "linkhom/magnus.hpp"

namespace linkhom {

struct ZResult {
  std::size_t value = 0;
  std::vector<std::size_t> witness_deletions;  // 0-based positions, increasing
};

// Deletes the given positions.
inline Word delete_positions(const Word& w, const std::vector<std::size_t>& positions) {
  std::vector<bool> drop(w.size(), false);
  for (auto p : positions) {
    if (p >= w.size()) throw InputError("deletion position out of range");
    drop[p] = true;
  }
  std::vector<Letter> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!drop[i]) out.push_back(w[i]);
  }
  return Word(std::move(out));
}

inline ZResult z_number(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return {};
  // best[i][j]: largest matchable subsequence of w[i..j), stored as (n+1)^2.
  const std::size_t stride = n + 1;
  std::vector<std::uint32_t> best(stride * stride, 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return best[i * stride + j]; };
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len;
      std::uint32_t v = at(i + 1, j);
      for (std::size_t k = i + 1; k < j; ++k) {
        if (w[k].is_inverse_of(w[i])) v = std::max(v, 2 + at(i + 1, k) + at(k + 1, j));
      }
      at(i, j) = v;
    }
  }

  ZResult result;
  result.value = n - at(0, n);
  // Walk the table back to recover which letters stay matched.
  std::vector<bool> kept(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> todo{{0, n}};
  while (!todo.empty()) {
    auto [i, j] = todo.back();
    todo.pop_back();
    if (j <= i + 1) continue;
    if (at(i, j) == at(i + 1, j)) {
      todo.emplace_back(i + 1, j);
      continue;
    }
    bool found = false;
    for (std::size_t k = i + 1; k < j; ++k) {
      if (w[k].is_inverse_of(w[i]) && at(i, j) == 2 + at(i + 1, k) + at(k + 1, j)) {
        kept[i] = kept[k] = true;
        todo.emplace_back(i + 1, k);
        todo.emplace_back(k + 1, j);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("z_number traceback failed");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!kept[i]) result.witness_deletions.push_back(i);
  }
  return result;
}

inline constexpr std::size_t kZOracleMaxLength = 14;

// Tries every deletion set, smallest first.
inline std::size_t z_number_oracle(const Word& w) {
  const std::size_t n = w.size();
  if (n > kZOracleMaxLength) throw InputError("z_number_oracle is limited to 14 letters");
  std::size_t best = n;
  for (std::uint32_t keep = 0; keep < (1U << n); ++keep) {
    const auto deleted = n - static_cast<std::size_t>(std::popcount(keep));
    if (deleted >= best) continue;
    std::vector<Letter> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (keep & (1U << i)) rest.push_back(w[i]);
    }
    if (is_freely_trivial(Word(std::move(rest)))) best = deleted;
  }
  return best;
}

enum class RZMethod { lemma, two_generator, search, search_budget_exhausted };

inline std::string to_string(RZMethod m) {
  switch (m) {
    case RZMethod::lemma: return "lemma";
    case RZMethod::two_generator: return "two-generator";
    case RZMethod::search: return "search";
    case RZMethod::search_budget_exhausted: return "search-budget-exhausted";
  }
  return "?";
}

struct RZBound {
  std::size_t upper = 0;
  Word witness;
  RZMethod method = RZMethod::lemma;
};

// Representative of c^a with few deletions needed, following the inductive
// construction for basic commutators: for c = [l, r], every conjugate of the
// generator at the bottom of r's right spine commutes with every other, so
// c^a = l r^a l^-1 r^-a in RF, and deleting a trivializing set from each copy
// of l leaves r^a r^-a.
inline RZBound rz_witness(const BasicCommutator& c, long long a) {
  if (a == 0) return {0, Word{}, RZMethod::lemma};
  if (c.is_leaf()) {
    return {static_cast<std::size_t>(a < 0 ? -a : a), power(Word::generator(c.index()), a),
            RZMethod::lemma};
  }
  const RZBound left = rz_witness(c.left(), 1);
  const Word right = as_word(c.right());
  Word w = concat(concat(left.witness, power(right, a)), concat(invert(left.witness), power(right, -a)));
  return {std::min(2 * left.upper, static_cast<std::size_t>(c.weight())), std::move(w),
          RZMethod::lemma};
}

// Sum of rz_witness over the basic-commutator decomposition of gamma.
inline RZBound rz_upper(const Word& gamma, int n, int rank_cap = kDefaultRankCap) {
  RZBound out{0, Word{}, RZMethod::lemma};
  for (const auto& t : decompose(gamma, n, rank_cap)) {
    if (t.exponent == 0) continue;
    const RZBound b = rz_witness(t.commutator, t.exponent);
    out.upper += b.upper;
    out.witness = concat(out.witness, b.witness);
  }
  return out;
}

// For gamma = x_i^a x_j^b [x_i,x_j]^c (i < j), a representative trivialized
// by |a| + |b| deletions when (a, b) != (0, 0). Uses that x_j commutes with
// x_i x_j x_i^-1 and x_i with x_j x_i^-1 x_j^-1, so [x_i,x_j] is central in
// the subgroup they generate and [x_i,x_j]^c can be written around a single
// x_i or x_j letter.
inline std::optional<Word> two_generator_word(int i, int j, long long a, long long b, long long c) {
  auto xi = [&](long long e) { return power(Word::generator(i), e); };
  auto xj = [&](long long e) { return power(Word::generator(j), e); };
  if (b >= 1) return concat(concat(xi(a + c), xj(1)), concat(xi(-c), xj(b - 1)));
  if (b <= -1) return concat(concat(xi(a - c), xj(-1)), concat(xi(c), xj(b + 1)));
  if (a >= 1) return concat(concat(xj(-c), xi(1)), concat(xj(c), xi(a - 1)));
  if (a <= -1) return concat(concat(xj(c), xi(-1)), concat(xj(-c), xi(a + 1)));
  return std::nullopt;
}

// Applies two_generator_word when the decomposition of gamma involves at most
// two generators. The result is checked against gamma in RF(n).
inline std::optional<RZBound> rz_two_generator(const Word& gamma, int n,
                                               int rank_cap = kDefaultRankCap) {
  const auto terms = decompose(gamma, n, rank_cap);
  std::uint64_t support = 0;
  for (const auto& t : terms) {
    if (t.exponent != 0) support |= t.commutator.leaf_mask();
  }
  if (std::popcount(support) != 2) return std::nullopt;
  const int i = std::countr_zero(support) + 1;
  const int j = 64 - std::countl_zero(support);
  long long a = 0, b = 0, c = 0;
  for (const auto& t : terms) {
    if (t.exponent == 0) continue;
    if (t.commutator.is_leaf()) (t.commutator.index() == i ? a : b) = t.exponent;
    else c = t.exponent;
  }
  auto w = two_generator_word(i, j, a, b, c);
  if (!w) return std::nullopt;
  if (!rf_equal(*w, gamma, n, rank_cap)) throw InternalError("two-generator witness mismatch");
  const auto z = z_number(*w).value;
  return RZBound{z, std::move(*w), RZMethod::two_generator};
}

struct RZSearchOptions {
  std::size_t max_len = 16;
  std::size_t budget = 20000;  // states expanded
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kRZSearchMaxLength = 20;

namespace detail {

inline std::string word_key(const Word& w) {
  std::string k;
  k.reserve(w.size() * 2);
  for (const auto& l : w) {
    k.push_back(static_cast<char>(l.index));
    k.push_back(l.sign > 0 ? '+' : '-');
  }
  return k;
}

// Maximal blocks g x_i^e g^-1 centred at each position, as [begin, end).
inline std::vector<std::tuple<std::size_t, std::size_t, int>> conjugate_blocks(const Word& w) {
  std::vector<std::tuple<std::size_t, std::size_t, int>> out;
  for (std::size_t c = 0; c < w.size(); ++c) {
    for (std::size_t r = 0; r <= c && c + r < w.size(); ++r) {
      if (r > 0 && !w[c - r].is_inverse_of(w[c + r])) break;
      out.emplace_back(c - r, c + r + 1, w[c].index);
    }
  }
  return out;
}

}  // namespace detail

// Bounded exploration of RF-equal representatives of gamma. Moves: delete an
// adjacent inverse pair, insert one, or swap two adjacent blocks that are
// conjugates of the same generator (the defining relation of RF). The lemma
// witness seeds the search, so the result never exceeds rz_upper.
inline RZBound rz_search(const Word& gamma, int n, const RZSearchOptions& opt = {},
                         int rank_cap = kDefaultRankCap) {
  if (opt.max_len > kRZSearchMaxLength) throw InputError("rz_search max_len is limited to 20");
  detail::check_rank(n, rank_cap);
  if (gamma.max_index() > n) throw InputError("word index exceeds rank");

  RZBound best = rz_upper(gamma, n, rank_cap);
  best.upper = std::min(best.upper, z_number(best.witness).value);
  auto consider = [&](const Word& w) {
    const auto z = z_number(w).value;
    if (z < best.upper) best = {z, w, RZMethod::search};
  };

  std::mt19937_64 rng(opt.seed);
  std::deque<Word> frontier;
  std::unordered_set<std::string> seen;
  auto push = [&](Word w) {
    if (w.size() > opt.max_len) return;
    if (seen.insert(detail::word_key(w)).second) frontier.push_back(std::move(w));
  };
  push(gamma);
  push(free_reduce(gamma));
  push(free_reduce(best.witness));
  push(best.witness);

  std::size_t expanded = 0;
  bool exhausted = false;
  while (!frontier.empty()) {
    if (expanded >= opt.budget) {
      exhausted = true;
      break;
    }
    Word w = std::move(frontier.front());
    frontier.pop_front();
    ++expanded;
    consider(w);
    if (best.upper == 0) break;

    std::vector<Word> next;
    const auto& ls = w.letters();
    for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
      if (ls[p].is_inverse_of(ls[p + 1])) {
        std::vector<Letter> v(ls.begin(), ls.end());
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(p), v.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        next.emplace_back(std::move(v));
      }
    }
    const auto blocks = detail::conjugate_blocks(w);
    for (const auto& [b1, e1, g1] : blocks) {
      for (const auto& [b2, e2, g2] : blocks) {
        if (b2 != e1 || g1 != g2) continue;
        std::vector<Letter> v(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(b1));
        v.insert(v.end(), ls.begin() + static_cast<std::ptrdiff_t>(b2), ls.begin() + static_cast<std::ptrdiff_t>(e2));
        v.insert(v.end(), ls.begin() + static_cast<std::ptrdiff_t>(b1), ls.begin() + static_cast<std::ptrdiff_t>(e1));
        v.insert(v.end(), ls.begin() + static_cast<std::ptrdiff_t>(e2), ls.end());
        next.emplace_back(std::move(v));
      }
    }
    if (ls.size() + 2 <= opt.max_len) {
      for (std::size_t p = 0; p <= ls.size(); ++p) {
        for (int g = 1; g <= n; ++g) {
          for (int s : {1, -1}) {
            std::vector<Letter> v(ls.begin(), ls.end());
            v.insert(v.begin() + static_cast<std::ptrdiff_t>(p), {Letter(g, s), Letter(g, -s)});
            next.emplace_back(std::move(v));
          }
        }
      }
    }
    std::shuffle(next.begin(), next.end(), rng);
    for (auto& x : next) push(std::move(x));
  }
  best.method = exhausted ? RZMethod::search_budget_exhausted : RZMethod::search;
  if (!rf_equal(best.witness, gamma, n, rank_cap)) throw InternalError("rz_search witness mismatch");
  return best;
}

}  // namespace linkhom
