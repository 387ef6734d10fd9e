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

// Reduced Magnus expansion: x_i -> 1 + X_i, x_i^-1 -> 1 - X_i, into the ring
// of non-commutative integer polynomials in which every monomial containing a
// repeated index is zero.
//
// Two words are equal in the reduced free group RF(n) exactly when their
// reduced expansions agree. The embedding is Milnor's ("Link groups", Ann. of
// Math. 59, 1954). It is used here as the equality test for RF(n) and is not
// re-derived.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linkhom/errors.hpp"
#include "linkhom/free_words.hpp"

namespace linkhom {

inline constexpr int kDefaultRankCap = 12;
inline constexpr int kHardRankLimit = 64;

// X_{i1} ... X_{ik} with pairwise distinct indices; empty = constant term.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> indices) : indices_(std::move(indices)) {
    for (int i : indices_) {
      if (i < 1 || i > kHardRankLimit) throw InputError("monomial index out of range");
      const std::uint64_t bit = std::uint64_t{1} << (i - 1);
      if (mask_ & bit) throw InputError("monomial has a repeated index");
      mask_ |= bit;
    }
  }

  const std::vector<int>& indices() const noexcept { return indices_; }
  std::size_t degree() const noexcept { return indices_.size(); }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int i) const noexcept { return (mask_ >> (i - 1)) & 1U; }
  int max_index() const noexcept {
    int m = 0;
    for (int i : indices_) m = i > m ? i : m;
    return m;
  }

  // Appends X_i; caller guarantees i is not already present.
  Monomial times(int i) const {
    Monomial m = *this;
    m.indices_.push_back(i);
    m.mask_ |= std::uint64_t{1} << (i - 1);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.indices_ == b.indices_;
  }

 private:
  std::vector<int> indices_;
  std::uint64_t mask_ = 0;
};

// Canonical order: by degree, then lexicographically on the index sequence.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.indices() < b.indices();
  }
};

inline std::string to_string(const Monomial& m) {
  if (m.degree() == 0) return "1";
  std::string s;
  for (int i : m.indices()) s += "X" + std::to_string(i);
  return s;
}

namespace detail {
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw InputError("Magnus coefficient overflow");
  return r;
}
inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw InputError("Magnus coefficient overflow");
  return r;
}
inline void check_rank(int rank, int rank_cap) {
  if (rank < 1) throw InputError("rank must be >= 1");
  if (rank_cap > kHardRankLimit) throw InputError("rank cap exceeds hard limit 64");
  if (rank > rank_cap) {
    throw InputError("rank " + std::to_string(rank) + " exceeds the rank cap " +
                     std::to_string(rank_cap));
  }
}
}  // namespace detail

class ReducedPolynomial {
 public:
  using Terms = std::map<Monomial, long long, MonomialLess>;

  explicit ReducedPolynomial(int rank, int rank_cap = kDefaultRankCap) : rank_(rank) {
    detail::check_rank(rank, rank_cap);
  }

  static ReducedPolynomial one(int rank, int rank_cap = kDefaultRankCap) {
    ReducedPolynomial p(rank, rank_cap);
    p.terms_.emplace(Monomial(), 1);
    return p;
  }

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  long long coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  // Adds c * m, dropping the term if it cancels.
  void add(const Monomial& m, long long c) {
    if (c == 0) return;
    if (m.max_index() > rank_) throw InputError("monomial index exceeds polynomial rank");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  // this * (1 + sign * X_i), in place.
  void multiply_by_letter(const Letter& l) {
    if (l.index > rank_) throw InputError("letter index exceeds polynomial rank");
    std::vector<std::pair<Monomial, long long>> extra;
    extra.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      if (!m.contains(l.index)) extra.emplace_back(m.times(l.index), l.sign * c);
    }
    for (const auto& [m, c] : extra) add(m, c);
  }

  // Homogeneous part of the given degree.
  ReducedPolynomial degree_part(std::size_t degree) const {
    ReducedPolynomial p(rank_, kHardRankLimit);
    for (const auto& [m, c] : terms_) {
      if (m.degree() == degree) p.terms_.emplace(m, c);
    }
    return p;
  }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.degree() == 0 &&
           terms_.begin()->second == 1;
  }

  friend bool operator==(const ReducedPolynomial& a, const ReducedPolynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_;
  Terms terms_;
};

inline ReducedPolynomial poly_multiply(const ReducedPolynomial& p,
                                       const ReducedPolynomial& q) {
  if (p.rank() != q.rank()) throw InputError("rank mismatch in poly_multiply");
  ReducedPolynomial out(p.rank(), kHardRankLimit);
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      if (mp.mask() & mq.mask()) continue;
      std::vector<int> idx = mp.indices();
      idx.insert(idx.end(), mq.indices().begin(), mq.indices().end());
      out.add(Monomial(std::move(idx)), detail::checked_mul(cp, cq));
    }
  }
  return out;
}

inline ReducedPolynomial expand(const Word& w, int rank, int rank_cap = kDefaultRankCap) {
  detail::check_rank(rank, rank_cap);
  if (w.max_index() > rank) {
    throw InputError("word uses x" + std::to_string(w.max_index()) +
                     " but the rank is " + std::to_string(rank));
  }
  ReducedPolynomial p = ReducedPolynomial::one(rank, rank_cap);
  for (const auto& l : w) p.multiply_by_letter(l);
  return p;
}

inline bool rf_equal(const Word& u, const Word& v, int rank, int rank_cap = kDefaultRankCap) {
  // Comparing u v^-1 against 1 keeps the intermediate polynomials smaller
  // than expanding both sides when u and v are long and nearly equal.
  return expand(free_reduce(concat(u, invert(v))), rank, rank_cap).is_one();
}

inline bool rf_trivial(const Word& w, int rank, int rank_cap = kDefaultRankCap) {
  return expand(w, rank, rank_cap).is_one();
}

inline long long coefficient(const ReducedPolynomial& p, const Monomial& m) {
  return p.coefficient(m);
}

inline nlohmann::json to_json(const ReducedPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"mono", m.indices()}, {"coef", c}});
  }
  return out;
}

inline std::string to_string(const ReducedPolynomial& p) {
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const long long a = c < 0 ? -c : c;
    if (m.degree() == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += to_string(m);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace linkhom
