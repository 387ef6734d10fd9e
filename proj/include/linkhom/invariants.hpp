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

// Link-homotopy invariants and the homotopy trivializing number n_h.
//
// Exact values: 1 component -> 0; 2 components -> Lambda; 3 components ->
// Lambda if Lambda != 0, 2 if Lambda = 0 and mu123 != 0, else 0.
//
// For four or more components n_h is bracketed:
//   upper: n_h(T^) <= n_h(T) <= sum_k n_h(phi(gamma_k)) <= sum_k RZ(gamma_k),
//          with RZ bounded by explicit witness words (see trivializing.hpp);
//   lower: Lambda, raised by 2 when some sublink with vanishing pairwise
//          linking has a nonzero Milnor invariant of minimal length. This
//          uses sublink monotonicity (a trivializing sequence of crossing
//          changes restricts to one for any sublink), and that the lowest
//          nonvanishing Milnor invariants of a link are well-defined
//          integers. Both bounds are then moved to the parity of Lambda.
//
// n_d (the minimal intersection count of immersed disks bounded by the link
// in B^4) equals n_h, so it is reported as such. Links in homology spheres
// reduce to links in S^3 with the same linking numbers and mu123, so only S^3
// representatives are modelled.

#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "linkhom/braids.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/hall.hpp"
#include "linkhom/magnus.hpp"
#include "linkhom/trivializing.hpp"

namespace linkhom {

class LinkInput {
 public:
  LinkInput(PureBraidWord b) : rep_(std::move(b)) {}  // NOLINT(google-explicit-constructor)
  LinkInput(HLNormalForm hl) : rep_(std::move(hl)) {  // NOLINT(google-explicit-constructor)
    std::get<HLNormalForm>(rep_).validate();
  }

  int components() const {
    return std::visit(
        [](const auto& r) {
          if constexpr (std::is_same_v<std::decay_t<decltype(r)>, PureBraidWord>) {
            return r.strands();
          } else {
            return r.components;
          }
        },
        rep_);
  }

  bool is_braid() const noexcept { return std::holds_alternative<PureBraidWord>(rep_); }

  // Braid input as given; HL input realized as a braid.
  PureBraidWord braid() const {
    if (is_braid()) return std::get<PureBraidWord>(rep_);
    return realize(std::get<HLNormalForm>(rep_));
  }

  // HL input as given; braid input combed.
  HLNormalForm hl() const {
    if (!is_braid()) return std::get<HLNormalForm>(rep_);
    return comb(std::get<PureBraidWord>(rep_));
  }

  std::vector<std::vector<long long>> linking_matrix() const {
    if (is_braid()) return linkhom::linking_matrix(std::get<PureBraidWord>(rep_));
    const auto& hl = std::get<HLNormalForm>(rep_);
    const auto n = static_cast<std::size_t>(hl.components);
    std::vector<std::vector<long long>> lk(n, std::vector<long long>(n, 0));
    for (int k = 2; k <= hl.components; ++k) {
      for (int i = 1; i < k; ++i) {
        const long long e = exponent_sum(hl.gamma(k), i);
        lk[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] = e;
        lk[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] = e;
      }
    }
    return lk;
  }

 private:
  std::variant<PureBraidWord, HLNormalForm> rep_;
};

struct Certificate {
  std::string kind;
  std::string detail;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct NhResult {
  int components = 0;
  long long lambda = 0;
  int parity = 0;
  long long lower = 0;
  long long upper = 0;
  std::optional<long long> exact;
  bool nd_equals_nh = true;
  std::vector<Certificate> certificates;
  friend bool operator==(const NhResult&, const NhResult&) = default;
};

struct NhOptions {
  int rank_cap = kDefaultRankCap;
  // Sublink lower-bound certificates enumerate all sublinks; skipped above this.
  int max_sublink_components = 10;
  // Braid inputs only: also bound n_h by splitting the braid word into
  // stacked segments and summing their bounds (n_h is subadditive under
  // stacking). The result then depends on the braid word, not only on its
  // link-homotopy class, so this is off by default.
  bool split_braid = false;
  std::size_t max_split_length = 64;
};

namespace detail {
inline long long lambda_of_matrix(const std::vector<std::vector<long long>>& lk) {
  long long s = 0;
  for (std::size_t i = 0; i < lk.size(); ++i)
    for (std::size_t j = i + 1; j < lk.size(); ++j) s += lk[i][j] < 0 ? -lk[i][j] : lk[i][j];
  return s;
}
}  // namespace detail

// Lambda = sum over i < j of |lk(L_i, L_j)|.
inline long long lambda_of(const LinkInput& link) {
  return detail::lambda_of_matrix(link.linking_matrix());
}

struct Mu123 {
  long long value = 0;
  // mu123 is a closure invariant only when all pairwise linking vanishes.
  bool linking_vanishes = true;
};

// Coefficient of X1X2 in the expansion of gamma_3.
inline Mu123 mu123(const LinkInput& link, int rank_cap = kDefaultRankCap) {
  if (link.components() != 3) throw InputError("mu123 needs a 3-component link");
  const HLNormalForm hl = link.hl();
  const long long c = expand(hl.gamma(3), 2, rank_cap).coefficient(Monomial({1, 2}));
  return {c, lambda_of(link) == 0};
}

inline std::uint64_t nh_constant(int n) { return c_constant(n, false); }

namespace detail {

struct FirstNonvanishing {
  int weight = 0;  // number of X's in the monomial
  int gamma = 0;
  Monomial monomial;
  long long coefficient = 0;
};

// Smallest-degree nonzero non-constant Magnus coefficient across gamma_2..n.
inline std::optional<FirstNonvanishing> first_nonvanishing(const HLNormalForm& hl, int rank_cap) {
  std::optional<FirstNonvanishing> best;
  for (int k = 2; k <= hl.components; ++k) {
    const ReducedPolynomial p = expand(hl.gamma(k), k - 1, rank_cap);
    for (const auto& [m, c] : p.terms()) {
      if (m.degree() == 0) continue;
      if (!best || static_cast<int>(m.degree()) < best->weight) {
        best = FirstNonvanishing{static_cast<int>(m.degree()), k, m, c};
      }
      break;  // terms are ordered by degree
    }
  }
  return best;
}

inline std::string describe(const FirstNonvanishing& f) {
  return "coefficient of " + to_string(f.monomial) + " in gamma" + std::to_string(f.gamma) +
         " is " + std::to_string(f.coefficient) + " (Milnor invariant of length " +
         std::to_string(f.weight + 1) + ")";
}

inline std::string strand_list(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// Upper bound on n_h(phi(gamma)) via the cheapest witness available.
inline std::pair<std::size_t, std::string> rz_bound(const Word& gamma, int rank, int rank_cap) {
  if (rank < 1 || free_reduce(gamma).empty()) return {0, "trivial"};
  const RZBound lemma = rz_upper(gamma, rank, rank_cap);
  std::size_t best = lemma.upper;
  std::string how = "lemma";
  const std::size_t z = z_number(lemma.witness).value;
  if (z < best) {
    best = z;
    how = "lemma-witness-z";
  }
  if (auto two = rz_two_generator(gamma, rank, rank_cap); two && two->upper < best) {
    best = two->upper;
    how = "two-generator";
  }
  return {best, how};
}

// Upper bound for n >= 4 from the combed coordinates, moved to the parity of
// Lambda.
inline std::pair<long long, std::string> pipeline_upper(const HLNormalForm& hl, long long lambda,
                                                        int rank_cap) {
  long long upper = 0;
  std::string text;
  for (int k = 2; k <= hl.components; ++k) {
    const auto [bound, how] = rz_bound(hl.gamma(k), k - 1, rank_cap);
    upper += static_cast<long long>(bound);
    if (bound) {
      text += (text.empty() ? "" : "; ") + std::string("gamma") + std::to_string(k) + ": " +
              std::to_string(bound) + " (" + how + ")";
    }
  }
  if ((upper - lambda) % 2 != 0) --upper;
  return {upper, text.empty() ? "all gamma trivial" : text};
}

// min over partitions of b into consecutive segments of the summed segment
// bounds.
inline long long split_upper(const PureBraidWord& b, int rank_cap) {
  const PureBraidWord w = free_reduce(b);
  const std::size_t len = w.size();
  std::vector<long long> best(len + 1, 0);
  for (std::size_t j = 1; j <= len; ++j) {
    best[j] = std::numeric_limits<long long>::max();
    for (std::size_t i = 0; i < j; ++i) {
      PureBraidWord seg(w.strands(), std::vector<BraidLetter>(w.letters().begin() + static_cast<std::ptrdiff_t>(i),
                                                             w.letters().begin() + static_cast<std::ptrdiff_t>(j)));
      const long long lam = lambda_of_matrix(linking_matrix(seg));
      const long long u = pipeline_upper(comb(seg), lam, rank_cap).first;
      best[j] = std::min(best[j], best[i] + u);
    }
  }
  return best[len];
}

inline void match_parity(NhResult& r) {
  if ((r.upper - r.lambda) % 2 != 0) --r.upper;
  if ((r.lower - r.lambda) % 2 != 0) ++r.lower;
}

}  // namespace detail

inline NhResult nh(const LinkInput& link, const NhOptions& opt = {}) {
  NhResult r;
  r.components = link.components();
  const auto lk = link.linking_matrix();
  r.lambda = detail::lambda_of_matrix(lk);
  r.parity = static_cast<int>(r.lambda % 2);
  const int n = r.components;
  auto set_exact = [&](long long v) {
    r.lower = r.upper = v;
    r.exact = v;
  };
  r.certificates.push_back({"lambda", "sum of |lk| over pairs = " + std::to_string(r.lambda)});

  if (n == 1) {
    set_exact(0);
    r.certificates.push_back({"one-component", "every knot is link-homotopically trivial"});
    return r;
  }
  if (n == 2) {
    set_exact(r.lambda);
    r.certificates.push_back({"two-component", "linking number is a complete homotopy invariant"});
    return r;
  }
  const HLNormalForm hl = link.hl();
  if (n == 3) {
    if (r.lambda != 0) {
      set_exact(r.lambda);
      r.certificates.push_back({"three-component", "Lambda != 0 so n_h = Lambda"});
      return r;
    }
    const long long mu = expand(hl.gamma(3), 2, opt.rank_cap).coefficient(Monomial({1, 2}));
    if (mu != 0) {
      set_exact(2);
      r.certificates.push_back(
          {"three-component", "Lambda = 0 and mu123 = " + std::to_string(mu) + " so n_h = 2"});
      return r;
    }
    if (!rf_trivial(hl.gamma(2), 1, opt.rank_cap) || !rf_trivial(hl.gamma(3), 2, opt.rank_cap)) {
      throw InternalError("Lambda = mu123 = 0 but the combed form is nontrivial");
    }
    set_exact(0);
    r.certificates.push_back(
        {"three-component", "Lambda = 0 and mu123 = 0: link-homotopically trivial"});
    return r;
  }

  const auto [upper, upper_detail] = detail::pipeline_upper(hl, r.lambda, opt.rank_cap);
  r.upper = upper;
  r.certificates.push_back({"upper-rz", upper_detail});
  if (opt.split_braid && link.is_braid()) {
    const PureBraidWord b = link.braid();
    if (b.size() <= opt.max_split_length) {
      const long long split = detail::split_upper(b, opt.rank_cap);
      if (split < r.upper) {
        r.upper = split;
        r.certificates.push_back({"upper-split", "sum over stacked braid segments = " +
                                                     std::to_string(split)});
      }
    } else {
      r.certificates.push_back({"upper-split-skipped", "braid longer than the split limit"});
    }
  }

  r.lower = r.lambda;
  if (r.lambda == 0) {
    if (auto f = detail::first_nonvanishing(hl, opt.rank_cap)) {
      r.lower = 1;
      r.certificates.push_back({"milnor-nonvanishing", detail::describe(*f)});
    }
  }
  if (r.lower == r.lambda && n <= opt.max_sublink_components) {
    const PureBraidWord b = link.braid();
    for (std::uint32_t mask = 1; mask < (1U << n) - 1 && r.lower == r.lambda; ++mask) {
      if (std::popcount(mask) < 3) continue;
      std::vector<int> strands;
      for (int s = 0; s < n; ++s) {
        if (mask & (1U << s)) strands.push_back(s + 1);
      }
      bool unlinked = true;
      for (int a : strands)
        for (int c : strands)
          if (a < c && lk[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(c - 1)] != 0) unlinked = false;
      if (!unlinked) continue;
      const HLNormalForm sub = comb(restrict_to(b, strands));
      if (auto f = detail::first_nonvanishing(sub, opt.rank_cap)) {
        r.lower = r.lambda + 1;
        r.certificates.push_back({"sublink-milnor-nonvanishing",
                                  "sublink " + detail::strand_list(strands) +
                                      " has vanishing linking and " + detail::describe(*f) +
                                      "; n_h of a sublink bounds n_h of the link"});
      }
    }
  } else if (n > opt.max_sublink_components) {
    r.certificates.push_back({"sublinks-skipped", "too many components to enumerate sublinks"});
  }

  const long long raw_upper = r.upper, raw_lower = r.lower;
  detail::match_parity(r);
  if (r.upper != raw_upper || r.lower != raw_lower) {
    r.certificates.push_back({"parity", "n_h = Lambda (mod 2)"});
  }
  if (r.lower > r.upper) throw InternalError("lower bound exceeds upper bound");
  if (r.lower == r.upper) r.exact = r.lower;
  return r;
}

inline nlohmann::json to_json(const NhResult& r) {
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : r.certificates) certs.push_back({{"kind", c.kind}, {"detail", c.detail}});
  return {{"components", r.components},
          {"lambda", r.lambda},
          {"parity", r.parity},
          {"nh",
           {{"exact", r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr)},
            {"lower", r.lower},
            {"upper", r.upper}}},
          {"nd_equals_nh", r.nd_equals_nh},
          {"certificates", certs}};
}

}  // namespace linkhom
