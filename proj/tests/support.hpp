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

// Random inputs shared by the test binaries. Fixed seeds keep runs repeatable.

#pragma once

#include <random>

#include "linkhom/braids.hpp"
#include "linkhom/free_words.hpp"

namespace linkhom::testing {

inline Word random_word(std::mt19937_64& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, rank);
  std::bernoulli_distribution pos(0.5);
  Word w;
  const std::size_t n = len(rng);
  std::vector<Letter> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(idx(rng), pos(rng) ? 1 : -1);
  return Word(std::move(out));
}

inline PureBraidWord random_braid(std::mt19937_64& rng, int strands, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> s(1, strands);
  std::bernoulli_distribution pos(0.5);
  PureBraidWord b(strands);
  const std::size_t n = len(rng);
  for (std::size_t t = 0; t < n; ++t) {
    int i = s(rng), j = s(rng);
    while (i == j) j = s(rng);
    if (i > j) std::swap(i, j);
    b.append({i, j, pos(rng) ? 1 : -1});
  }
  return b;
}

inline Word w(const char* text) { return parse_word(text); }

}  // namespace linkhom::testing
