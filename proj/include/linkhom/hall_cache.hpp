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

// On-disk cache of Hall bases for small parameters (n <= 6, w <= 6).
//
// One file per parameter set, named by a content hash of the parameters.
// Files are written to a temporary name and renamed into place, so readers
// never see partial files; two concurrent writers both compute and the last
// rename wins. A file that fails validation is ignored and rewritten.

#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "linkhom/hall.hpp"

namespace linkhom {

inline constexpr int kCacheMaxRank = 6;
inline constexpr int kCacheMaxWeight = 6;
inline constexpr const char* kCacheDirEnv = "LINKHOM_CACHE_DIR";

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string cache_key(int n, int wmax, bool nonrepeating) {
  return "hall-basis/v1;rank=" + std::to_string(n) + ";wmax=" + std::to_string(wmax) +
         ";nonrepeating=" + (nonrepeating ? "1" : "0");
}

inline nlohmann::json basis_to_json(const HallBasis& b) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : b.elements) list.push_back({{"commutator", to_string(c)}, {"weight", c.weight()}});
  return list;
}

// Expected number of elements of weight w.
inline std::uint64_t expected_count(int n, int w, bool nonrepeating) {
  if (!nonrepeating) return witt(n, w);
  if (w > n) return 0;
  return w == 1 ? static_cast<std::uint64_t>(n) : binomial(n, w) * factorial(w - 1);
}

inline std::optional<HallBasis> basis_from_json(const nlohmann::json& list, int n, int wmax,
                                                bool nonrepeating) {
  if (!list.is_array()) return std::nullopt;
  HallBasis b{n, wmax, nonrepeating, {}};
  try {
    for (const auto& item : list) {
      auto c = parse_commutator(item.at("commutator").get<std::string>());
      if (c.weight() != item.at("weight").get<int>() || c.weight() > wmax || c.max_index() > n) {
        return std::nullopt;
      }
      if (nonrepeating && c.has_repeated_indices()) return std::nullopt;
      if (!b.elements.empty() && !(b.elements.back() < c)) return std::nullopt;
      if (!c.is_leaf() && !is_basic_pair(c.left(), c.right())) return std::nullopt;
      b.elements.push_back(std::move(c));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  for (int w = 1; w <= wmax; ++w) {
    if (b.count_of_weight(w) != expected_count(n, w, nonrepeating)) return std::nullopt;
  }
  return b;
}

}  // namespace detail

class HallCache {
 public:
  // Empty dir: no disk cache.
  explicit HallCache(std::filesystem::path dir = {}) : dir_(std::move(dir)) {}

  // The directory named by LINKHOM_CACHE_DIR, if set.
  static HallCache from_environment() {
    const char* env = std::getenv(kCacheDirEnv);
    return HallCache(env ? std::filesystem::path(env) : std::filesystem::path{});
  }

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  static bool cacheable(int n, int wmax) {
    return n >= 1 && n <= kCacheMaxRank && wmax >= 1 && wmax <= kCacheMaxWeight;
  }

  std::filesystem::path path_for(int n, int wmax, bool nonrepeating) const {
    char name[32];
    std::snprintf(name, sizeof name, "hall-%016llx.json",
                  static_cast<unsigned long long>(detail::fnv1a(detail::cache_key(n, wmax, nonrepeating))));
    return dir_ / name;
  }

  // Cached basis if present and valid, else generated (and stored when
  // cacheable). Disk errors fall back to recomputation.
  HallBasis get(int n, int wmax, bool nonrepeating) const {
    if (!enabled() || !cacheable(n, wmax)) return generate(n, wmax, nonrepeating);
    const auto path = path_for(n, wmax, nonrepeating);
    if (auto b = load(path, n, wmax, nonrepeating)) return *b;
    HallBasis b = generate(n, wmax, nonrepeating);
    store(path, b);
    return b;
  }

 private:
  static std::optional<HallBasis> load(const std::filesystem::path& path, int n, int wmax,
                                       bool nonrepeating) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    const auto j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return std::nullopt;
    return detail::basis_from_json(j, n, wmax, nonrepeating);
  }

  static void store(const std::filesystem::path& path, const HallBasis& b) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) return;
    std::random_device rd;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) return;
      out << detail::basis_to_json(b).dump() << '\n';
      if (!out) {
        out.close();
        std::filesystem::remove(tmp, ec);
        return;
      }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  std::filesystem::path dir_;
};

}  // namespace linkhom
