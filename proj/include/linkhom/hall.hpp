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

// Basic commutators in the sense of M. Hall, their weights, Witt's count,
// and decomposition of reduced-free-group elements into ordered products of
// basic-commutator powers.
//
// Ordering: by weight, then lexicographically on the token sequence of the
// bracket text, with tokens ',' < ']' < '[' < x1 < x2 < ... . For indices
// below 10 this is plain string order on "[[x1,x2],x3]"-style text.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linkhom/errors.hpp"
#include "linkhom/free_words.hpp"
#include "linkhom/magnus.hpp"

namespace linkhom {

class BasicCommutator {
 public:
  static BasicCommutator leaf(int index) {
    if (index < 1 || index > kHardRankLimit) throw InputError("generator index out of range");
    auto n = std::make_shared<Node>();
    n->index = index;
    n->weight = 1;
    n->mask = std::uint64_t{1} << (index - 1);
    n->tokens = {index};
    return BasicCommutator(std::move(n));
  }

  // [left, right]. No basic-ness check here; see is_basic_pair.
  static BasicCommutator bracket(const BasicCommutator& left, const BasicCommutator& right) {
    auto n = std::make_shared<Node>();
    n->left = left.node_;
    n->right = right.node_;
    n->weight = left.weight() + right.weight();
    n->repeats = left.has_repeated_indices() || right.has_repeated_indices() ||
                 (left.leaf_mask() & right.leaf_mask()) != 0;
    n->mask = left.leaf_mask() | right.leaf_mask();
    n->tokens.reserve(left.node_->tokens.size() + right.node_->tokens.size() + 3);
    n->tokens.push_back(kOpen);
    n->tokens.insert(n->tokens.end(), left.node_->tokens.begin(), left.node_->tokens.end());
    n->tokens.push_back(kComma);
    n->tokens.insert(n->tokens.end(), right.node_->tokens.begin(), right.node_->tokens.end());
    n->tokens.push_back(kClose);
    return BasicCommutator(std::move(n));
  }

  bool is_leaf() const noexcept { return node_->left == nullptr; }
  int index() const noexcept { return node_->index; }  // leaves only
  BasicCommutator left() const { return BasicCommutator(node_->left); }
  BasicCommutator right() const { return BasicCommutator(node_->right); }
  int weight() const noexcept { return node_->weight; }
  std::uint64_t leaf_mask() const noexcept { return node_->mask; }
  bool has_repeated_indices() const noexcept { return node_->repeats; }
  int max_index() const noexcept { return 64 - std::countl_zero(node_->mask); }
  const std::vector<int>& tokens() const noexcept { return node_->tokens; }

  friend bool operator==(const BasicCommutator& a, const BasicCommutator& b) {
    return a.node_ == b.node_ || a.node_->tokens == b.node_->tokens;
  }

  // Weight first, then token order.
  friend bool operator<(const BasicCommutator& a, const BasicCommutator& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.tokens() < b.tokens();
  }
  friend bool operator<=(const BasicCommutator& a, const BasicCommutator& b) {
    return !(b < a);
  }

 private:
  static constexpr int kComma = -3;
  static constexpr int kClose = -2;
  static constexpr int kOpen = -1;

  struct Node {
    int index = 0;
    int weight = 0;
    bool repeats = false;
    std::uint64_t mask = 0;
    std::shared_ptr<const Node> left, right;
    std::vector<int> tokens;
  };

  explicit BasicCommutator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

inline std::string to_string(const BasicCommutator& c) {
  if (c.is_leaf()) return "x" + std::to_string(c.index());
  return "[" + to_string(c.left()) + "," + to_string(c.right()) + "]";
}

// Inverse of to_string: "x3", "[x1,x2]", "[[x1,x2],x3]".
inline BasicCommutator parse_commutator(const std::string& text) {
  std::size_t pos = 0;
  auto parse = [&](auto&& self) -> BasicCommutator {
    detail::skip_space(text, pos);
    if (pos >= text.size()) detail::throw_parse_error("unexpected end of commutator", text, pos);
    if (text[pos] == 'x') {
      ++pos;
      const auto i = detail::read_positive_int(text, pos, "generator index");
      if (i > kHardRankLimit) detail::throw_parse_error("generator index too large", text, pos);
      return BasicCommutator::leaf(static_cast<int>(i));
    }
    if (text[pos] != '[') detail::throw_parse_error("expected 'x<i>' or '['", text, pos);
    ++pos;
    BasicCommutator l = self(self);
    detail::skip_space(text, pos);
    if (pos >= text.size() || text[pos] != ',') detail::throw_parse_error("expected ','", text, pos);
    ++pos;
    BasicCommutator r = self(self);
    detail::skip_space(text, pos);
    if (pos >= text.size() || text[pos] != ']') detail::throw_parse_error("expected ']'", text, pos);
    ++pos;
    return BasicCommutator::bracket(l, r);
  };
  BasicCommutator c = parse(parse);
  detail::skip_space(text, pos);
  if (pos != text.size()) detail::throw_parse_error("trailing characters", text, pos);
  return c;
}

// Leaf -> x_i; [a, b] -> commutator(as_word(a), as_word(b)).
inline Word as_word(const BasicCommutator& c) {
  if (c.is_leaf()) return Word::generator(c.index());
  return commutator(as_word(c.left()), as_word(c.right()));
}

// Whether [left, right] is a basic commutator, given that left and right are.
inline bool is_basic_pair(const BasicCommutator& left, const BasicCommutator& right) {
  if (!(left < right)) return false;
  if (!right.is_leaf() && !(right.left() <= left)) return false;
  return true;
}

struct HallBasis {
  int rank = 0;
  int max_weight = 0;
  bool nonrepeating = false;
  std::vector<BasicCommutator> elements;

  std::size_t count_of_weight(int w) const {
    return static_cast<std::size_t>(std::count_if(
        elements.begin(), elements.end(),
        [w](const BasicCommutator& c) { return c.weight() == w; }));
  }
};

// All basic commutators on x1..xn of weight <= wmax, in basis order. With
// nonrepeating set, commutators whose leaves repeat an index are left out;
// since the order is intrinsic to the trees, the filtered list is a
// subsequence of the unfiltered one.
inline HallBasis generate(int n, int wmax, bool nonrepeating) {
  if (n < 1) throw InputError("rank must be >= 1");
  if (wmax < 1) throw InputError("weight must be >= 1");
  if (n > kHardRankLimit) throw InputError("rank exceeds hard limit");
  HallBasis basis{n, wmax, nonrepeating, {}};
  auto& elems = basis.elements;
  std::vector<std::size_t> weight_start{0, 0};  // weight_start[w] = first index of weight w
  for (int i = 1; i <= n; ++i) elems.push_back(BasicCommutator::leaf(i));
  weight_start.push_back(elems.size());  // start of weight 2

  for (int w = 2; w <= wmax; ++w) {
    std::vector<BasicCommutator> fresh;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const int wj = elems[j].weight();
      const int wl = w - wj;
      if (wl < 1 || wl > wj) continue;
      const std::size_t lo = weight_start[static_cast<std::size_t>(wl)];
      const std::size_t hi = std::min(weight_start[static_cast<std::size_t>(wl) + 1], j);
      for (std::size_t l = lo; l < hi; ++l) {
        if (nonrepeating && (elems[l].leaf_mask() & elems[j].leaf_mask())) continue;
        if (!elems[j].is_leaf() && !(elems[j].left() <= elems[l])) continue;
        fresh.push_back(BasicCommutator::bracket(elems[l], elems[j]));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    elems.insert(elems.end(), fresh.begin(), fresh.end());
    weight_start.push_back(elems.size());
  }
  return basis;
}

namespace detail {
inline int moebius(int d) {
  int result = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      result = -result;
    }
  }
  if (d > 1) result = -result;
  return result;
}
}  // namespace detail

// Witt's formula: number of basic commutators of weight w on n generators.
inline std::uint64_t witt(int n, int w) {
  if (n < 1 || w < 1) throw InputError("witt needs n >= 1 and w >= 1");
  using big = boost::multiprecision::cpp_int;
  big total = 0;
  for (int d = 1; d <= w; ++d) {
    if (w % d) continue;
    const int mu = detail::moebius(d);
    if (mu == 0) continue;
    big term = boost::multiprecision::pow(big(n), static_cast<unsigned>(w / d));
    total += mu * term;
  }
  total /= w;
  if (total > std::numeric_limits<std::uint64_t>::max()) {
    throw InputError("witt count does not fit in 64 bits");
  }
  return total.convert_to<std::uint64_t>();
}

// Degree-weight(c) part of the reduced expansion of c: the Lie element
// obtained by replacing group commutators with ring commutators.
inline ReducedPolynomial lie_polynomial(const BasicCommutator& c, int rank) {
  ReducedPolynomial p(rank, kHardRankLimit);
  if (c.is_leaf()) {
    p.add(Monomial({c.index()}), 1);
    return p;
  }
  const ReducedPolynomial a = lie_polynomial(c.left(), rank);
  const ReducedPolynomial b = lie_polynomial(c.right(), rank);
  const ReducedPolynomial ab = poly_multiply(a, b);
  const ReducedPolynomial ba = poly_multiply(b, a);
  for (const auto& [m, coef] : ab.terms()) p.add(m, coef);
  for (const auto& [m, coef] : ba.terms()) p.add(m, -coef);
  return p;
}

struct DecompositionTerm {
  BasicCommutator commutator;
  long long exponent;
};

// Product of c^a over the terms, in the given order.
inline Word product_word(const std::vector<DecompositionTerm>& terms) {
  Word w;
  for (const auto& t : terms) {
    if (t.exponent != 0) w = concat(w, power(as_word(t.commutator), t.exponent));
  }
  return w;
}

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

// Solves sum_c a_c * lie(c) = target for one leaf set, where c ranges over
// the nonrepeating basic commutators with that leaf set. The Lie elements of
// these commutators form a basis of the multilinear Lie polynomials on the
// set, so a solution exists and is unique; integrality is checked.
class LeafSetSolver {
 public:
  LeafSetSolver(const std::vector<BasicCommutator>& columns, int rank) : columns_(columns) {
    std::map<Monomial, std::size_t, MonomialLess> row_of;
    std::vector<std::vector<std::pair<std::size_t, long long>>> col_entries(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const ReducedPolynomial lie = lie_polynomial(columns[j], rank);
      for (const auto& [m, c] : lie.terms()) {
        auto [it, inserted] = row_of.emplace(m, row_of.size());
        if (inserted) rows_.push_back(m);
        col_entries[j].emplace_back(it->second, c);
      }
    }
    const std::size_t nr = rows_.size(), nc = columns.size();
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc, 0));
    for (std::size_t j = 0; j < nc; ++j)
      for (auto [r, c] : col_entries[j]) a[r][j] = c;
    const auto original = a;

    // Pick nc independent rows by elimination.
    std::vector<bool> used(nr, false);
    for (std::size_t col = 0; col < nc; ++col) {
      std::size_t piv = nr;
      for (std::size_t r = 0; r < nr; ++r) {
        if (!used[r] && a[r][col] != 0) {
          piv = r;
          break;
        }
      }
      if (piv == nr) throw InternalError("basic commutator Lie elements are dependent");
      used[piv] = true;
      pivot_rows_.push_back(piv);
      for (std::size_t r = 0; r < nr; ++r) {
        if (r == piv || a[r][col] == 0) continue;
        const Rational f = a[r][col] / a[piv][col];
        for (std::size_t k = col; k < nc; ++k) a[r][k] -= f * a[piv][k];
      }
    }

    // Invert the square pivot submatrix (Gauss-Jordan).
    std::vector<std::vector<Rational>> m(nc, std::vector<Rational>(2 * nc, 0));
    for (std::size_t i = 0; i < nc; ++i) {
      for (std::size_t j = 0; j < nc; ++j) m[i][j] = original[pivot_rows_[i]][j];
      m[i][nc + i] = 1;
    }
    for (std::size_t col = 0; col < nc; ++col) {
      std::size_t piv = col;
      while (piv < nc && m[piv][col] == 0) ++piv;
      if (piv == nc) throw InternalError("singular pivot submatrix");
      std::swap(m[piv], m[col]);
      const Rational d = m[col][col];
      for (auto& x : m[col]) x /= d;
      for (std::size_t r = 0; r < nc; ++r) {
        if (r == col || m[r][col] == 0) continue;
        const Rational f = m[r][col];
        for (std::size_t k = 0; k < 2 * nc; ++k) m[r][k] -= f * m[col][k];
      }
    }
    inverse_.assign(nc, std::vector<Rational>(nc));
    for (std::size_t i = 0; i < nc; ++i)
      for (std::size_t j = 0; j < nc; ++j) inverse_[i][j] = m[i][nc + j];
  }

  const std::vector<BasicCommutator>& columns() const noexcept { return columns_; }

  std::vector<long long> solve(const ReducedPolynomial& residual) const {
    const std::size_t nc = columns_.size();
    std::vector<Rational> rhs(nc);
    for (std::size_t i = 0; i < nc; ++i) rhs[i] = residual.coefficient(rows_[pivot_rows_[i]]);
    std::vector<long long> out(nc);
    for (std::size_t i = 0; i < nc; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < nc; ++j) s += inverse_[i][j] * rhs[j];
      if (denominator(s) != 1) throw InternalError("non-integral basic commutator exponent");
      const auto num = numerator(s);
      if (num > std::numeric_limits<long long>::max() ||
          num < std::numeric_limits<long long>::min()) {
        throw InputError("basic commutator exponent overflow");
      }
      out[i] = num.convert_to<long long>();
    }
    return out;
  }

 private:
  std::vector<BasicCommutator> columns_;
  std::vector<Monomial> rows_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<std::vector<Rational>> inverse_;
};

struct DecompositionPlan {
  HallBasis basis;
  // Per weight >= 2: one solver per leaf set, keyed by mask.
  std::map<int, std::map<std::uint64_t, std::shared_ptr<const LeafSetSolver>>> solvers;
};

inline std::shared_ptr<const DecompositionPlan> decomposition_plan(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const DecompositionPlan>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto plan = std::make_shared<DecompositionPlan>();
  plan->basis = generate(n, n, true);
  std::map<int, std::map<std::uint64_t, std::vector<BasicCommutator>>> groups;
  for (const auto& c : plan->basis.elements) {
    if (c.weight() >= 2) groups[c.weight()][c.leaf_mask()].push_back(c);
  }
  for (const auto& [w, by_mask] : groups) {
    for (const auto& [mask, cols] : by_mask) {
      plan->solvers[w][mask] = std::make_shared<LeafSetSolver>(cols, n);
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(plan)).first->second;
}

}  // namespace detail

// Exponents (a_c) over generate(n, n, true) with gamma = prod c^{a_c} in RF(n),
// the product taken in basis order. Works weight by weight: the lowest
// nonvanishing degree of the running residual is a linear combination of the
// Lie elements of that weight's basic commutators; solve, divide off, repeat.
inline std::vector<DecompositionTerm> decompose(const Word& gamma, int n,
                                                int rank_cap = kDefaultRankCap) {
  detail::check_rank(n, rank_cap);
  if (gamma.max_index() > n) throw InputError("word index exceeds rank");
  const auto plan = detail::decomposition_plan(n);
  const auto& elems = plan->basis.elements;

  std::map<std::vector<int>, long long> exponent_of;  // by tokens
  ReducedPolynomial residual = expand(free_reduce(gamma), n, rank_cap);

  auto divide_off = [&](int weight) {
    Word chunk;
    for (const auto& c : elems) {
      if (c.weight() != weight) continue;
      const long long a = exponent_of[c.tokens()];
      if (a != 0) chunk = concat(chunk, power(as_word(c), a));
    }
    residual = poly_multiply(expand(invert(chunk), n, rank_cap), residual);
  };

  for (int i = 1; i <= n; ++i) {
    exponent_of[BasicCommutator::leaf(i).tokens()] = residual.coefficient(Monomial({i}));
  }
  divide_off(1);
  for (int w = 2; w <= n; ++w) {
    const auto& solvers = plan->solvers.at(w);
    for (const auto& [mask, solver] : solvers) {
      const auto a = solver->solve(residual);
      for (std::size_t i = 0; i < a.size(); ++i) {
        exponent_of[solver->columns()[i].tokens()] = a[i];
      }
    }
    divide_off(w);
    for (const auto& [m, c] : residual.terms()) {
      if (m.degree() >= 1 && static_cast<int>(m.degree()) <= w) {
        throw InternalError("decomposition residual has a term of degree <= " +
                            std::to_string(w));
      }
    }
  }
  if (!residual.is_one()) throw InternalError("decomposition did not terminate at 1");

  std::vector<DecompositionTerm> out;
  out.reserve(elems.size());
  for (const auto& c : elems) out.push_back({c, exponent_of[c.tokens()]});
  return out;
}

namespace detail {
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}
inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}
// Largest k for which c_constant still enumerates generate(k, k, .).
inline constexpr int kEnumerateLimit = 6;
}  // namespace detail

// Sum of w(c) over basic commutators of weight 2..k on k generators.
inline std::uint64_t commutator_weight_sum(int k, bool nonrepeating) {
  std::uint64_t s = 0;
  if (k <= detail::kEnumerateLimit) {
    for (const auto& c : generate(k, k, nonrepeating).elements) {
      if (c.weight() >= 2) s += static_cast<std::uint64_t>(c.weight());
    }
    return s;
  }
  // Past the enumeration limit, count instead: Witt's formula, or for the
  // nonrepeating case C(k, w) leaf sets times (w - 1)! multilinear elements.
  for (int w = 2; w <= k; ++w) {
    const std::uint64_t count = nonrepeating ? detail::binomial(k, w) * detail::factorial(w - 1)
                                             : witt(k, w);
    s += static_cast<std::uint64_t>(w) * count;
  }
  return s;
}

// C_2 = 0, C_{k+1} = C_k + commutator_weight_sum(k).
inline std::uint64_t c_constant(int n, bool nonrepeating) {
  if (n < 2) throw InputError("c_constant needs n >= 2");
  if (n > 16) throw InputError("c_constant is limited to n <= 16");
  std::uint64_t c = 0;
  for (int k = 2; k < n; ++k) c += commutator_weight_sum(k, nonrepeating);
  return c;
}

}  // namespace linkhom
