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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or runs over its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "linkhom/braids.hpp"
#include "linkhom/hall.hpp"
#include "linkhom/invariants.hpp"
#include "linkhom/magnus.hpp"
#include "linkhom/seifert.hpp"
#include "linkhom/trivializing.hpp"
#include "support.hpp"

using namespace linkhom;

namespace {

struct Check {
  bool ok = true;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.note = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.ok && s > limit_s) {
    c.ok = false;
    c.note = "over time limit";
  }
  if (!c.ok) ++failures;
  std::printf("criterion %2d: %s  %s (%.3f s, limit %.0f s)%s%s\n", id, c.ok ? "PASS" : "FAIL", name, s,
              limit_s, c.note.empty() ? "" : ": ", c.note.c_str());
  std::fflush(stdout);
}

PureBraidWord braid(int n, std::vector<BraidLetter> letters) { return PureBraidWord(n, std::move(letters)); }

Word all_words_nth(std::size_t code, std::size_t len, int rank) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) {
    const auto d = static_cast<int>(code % static_cast<std::size_t>(2 * rank));
    code /= static_cast<std::size_t>(2 * rank);
    out.emplace_back(d / 2 + 1, d % 2 ? -1 : 1);
  }
  return Word(std::move(out));
}

}  // namespace

int main() {
  criterion(1, "2-component exactness", 1, [](Check& c) {
    for (int k = -5; k <= 5; ++k) {
      PureBraidWord b(2);
      for (int t = 0; t < std::abs(k); ++t) b.append({1, 2, k < 0 ? -1 : 1});
      c.expect(nh(b).exact == std::abs(k), "k = " + std::to_string(k));
    }
  });

  criterion(2, "3-component, nonzero linking", 5, [](Check& c) {
    std::mt19937_64 rng(2);
    int done = 0;
    while (done < 20) {
      const auto b = testing::random_braid(rng, 3, 10);
      const auto r = nh(b);
      if (r.lambda == 0) continue;
      ++done;
      c.expect(r.exact == r.lambda, format_braid(b));
    }
  });

  criterion(3, "Borromean case", 1, [](Check& c) {
    const auto a = braid(3, {{1, 3, 1}}), b = braid(3, {{2, 3, 1}});
    const auto t = stack(stack(a, b), stack(inverse(a), inverse(b)));
    const LinkInput link(comb(t));
    c.expect(lambda_of(link) == 0, "lambda");
    c.expect(std::abs(mu123(link).value) == 1, "mu123");
    c.expect(nh(link).exact == 2, "n_h");
    c.expect(nh(t).exact == 2, "n_h from the braid");
  });

  criterion(4, "trivial case", 1, [](Check& c) {
    c.expect(nh(PureBraidWord(3)).exact == 0, "trivial 3-braid");
  });

  criterion(5, "general sandwich and parity", 60, [](Check& c) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
      const int n = 4 + t % 2;
      const auto b = testing::random_braid(rng, n, 12);
      const auto r = nh(b);
      const auto cn = static_cast<long long>(c_constant(n, false));
      const bool ok = r.lambda <= r.lower && r.lower <= r.upper && r.upper <= r.lambda + cn &&
                      (r.lower - r.lambda) % 2 == 0 && (r.upper - r.lambda) % 2 == 0;
      c.expect(ok, format_braid(b));
    }
  });

  criterion(6, "C_n recurrence", 1, [](Check& c) {
    c.expect(c_constant(2, false) == 0, "C2");
    c.expect(c_constant(3, false) == 2, "C3");
    c.expect(c_constant(4, false) == 32, "C4");
    // C3 = 2 is the gap between Lambda and n_h for 3 components with Lambda = 0.
    const auto b = stack(stack(braid(3, {{1, 3, 1}}), braid(3, {{2, 3, 1}})),
                         braid(3, {{1, 3, -1}, {2, 3, -1}}));
    const auto r = nh(b);
    c.expect(r.exact == r.lambda + static_cast<long long>(c_constant(3, false)), "C3 vs Borromean");
    std::uint64_t acc = 0;
    for (int k = 2; k <= 6; ++k) {
      c.expect(c_constant(k, false) == acc, "recurrence at " + std::to_string(k));
      for (const auto& x : generate(k, k, false).elements) {
        if (x.weight() >= 2) acc += static_cast<std::uint64_t>(x.weight());
      }
    }
  });

  criterion(7, "Witt counts and repeated-index commutators", 10, [](Check& c) {
    for (int n = 1; n <= 4; ++n) {
      const auto basis = generate(n, 4, false);
      for (int w = 1; w <= 4; ++w) {
        c.expect(basis.count_of_weight(w) == witt(n, w), "n=" + std::to_string(n) + " w=" + std::to_string(w));
      }
      for (const auto& x : basis.elements) {
        if (x.has_repeated_indices()) c.expect(rf_trivial(as_word(x), n), to_string(x));
      }
    }
  });

  criterion(8, "Z dynamic program vs brute force", 60, [](Check& c) {
    for (std::size_t len = 0; len <= 6; ++len) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < len; ++i) count *= 4;
      for (std::size_t code = 0; code < count; ++code) {
        const Word w = all_words_nth(code, len, 2);
        c.expect(z_number(w).value == z_number_oracle(w), to_string(w));
      }
    }
    std::mt19937_64 rng(8);
    for (int t = 0; t < 500; ++t) {
      const Word w = testing::random_word(rng, 3, 10);
      c.expect(z_number(w).value == z_number_oracle(w), to_string(w));
    }
  });

  criterion(9, "lemma witnesses", 30, [](Check& c) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& x : generate(n, 4, false).elements) {
        for (long long a = -3; a <= 3; ++a) {
          const auto r = rz_witness(x, a);
          c.expect(rf_equal(r.witness, power(as_word(x), a), n), to_string(x));
          const auto z = z_number(r.witness).value;
          if (x.weight() == 1) c.expect(z == static_cast<std::size_t>(std::abs(a)), to_string(x));
          else c.expect(z <= static_cast<std::size_t>(x.weight()), to_string(x));
        }
      }
    }
  });

  criterion(10, "combing oracles", 30, [](Check& c) {
    for (int n = 2; n <= 5; ++n) {
      for (int i = 1; i < n; ++i) {
        const auto hl = comb(braid(n, {{i, n, 1}}));
        c.expect(hl.gamma(n) == Word::generator(i), "A(" + std::to_string(i) + "," + std::to_string(n) + ")");
        for (int k = 2; k < n; ++k) c.expect(hl.gamma(k).empty(), "lower coordinates");
      }
    }
    std::mt19937_64 rng(10);
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + t % 4;
      const auto b = testing::random_braid(rng, n, 10);
      const auto hl = comb(b);
      const auto lk = linking_matrix(b);
      for (int k = 2; k <= n; ++k) {
        for (int i = 1; i < k; ++i) {
          c.expect(exponent_sum(hl.gamma(k), i) ==
                       lk[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)],
                   format_braid(b));
        }
      }
    }
  });

  criterion(11, "Magnus laws", 10, [](Check& c) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
      const int n = 1 + t % 5;
      const Word u = testing::random_word(rng, n, 20), v = testing::random_word(rng, n, 20);
      c.expect(expand(concat(u, v), n) == poly_multiply(expand(u, n), expand(v, n)), "homomorphism");
      c.expect(rf_equal(u, free_reduce(u), n), "free reduction");
      const Word g = testing::random_word(rng, n, 8), h = testing::random_word(rng, n, 8);
      const Word x = Word::generator(1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
      const Word gx = concat(concat(g, x), invert(g)), hx = concat(concat(h, x), invert(h));
      c.expect(rf_equal(concat(gx, hx), concat(hx, gx), n), "conjugates commute");
    }
  });

  criterion(12, "Seifert null-form pattern", 5, [](Check& c) {
    for (int g = 1; g <= 8; ++g) c.expect(is_null_form(zero_null_form(g)).ok, "zero_null_form");
    for (int g = 1; g <= 3; ++g) {
      const auto base = zero_null_form(g);
      for (std::size_t r = 0; r < base.size(); ++r) {
        for (std::size_t col = 0; col < base.size(); ++col) {
          const std::size_t bi = r / 2, bj = col / 2, i = r % 2, j = col % 2;
          const bool constrained_zero = bi == bj ? i == j : (bi < bj ? j == 0 : i == 0);
          if (!constrained_zero) continue;
          auto v = base;
          v.at(r, col) = 1;
          c.expect(!is_null_form(v).ok, "entry (" + std::to_string(r + 1) + "," + std::to_string(col + 1) + ")");
        }
      }
    }
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
