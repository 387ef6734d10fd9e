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

// Seifert matrices and the null-form block pattern.
//
// In 2x2 blocks, a null-form matrix looks like
//
//   diagonal      [[0, e], [1-e, 0]]   e in {0, 1}
//   above         [[0, *], [0, *]]
//   below         [[0, 0], [*, *]]
//
// Only the pattern is checked; whether a given Seifert matrix reduces to it
// is not decided here.

#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "linkhom/errors.hpp"

namespace linkhom {

class SeifertMatrix {
 public:
  explicit SeifertMatrix(std::vector<std::vector<long long>> entries) : entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    if (n < 2 || n % 2 != 0) {
      throw InputError("Seifert matrix size must be even and at least 2, got " + std::to_string(n));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (entries_[r].size() != n) {
        throw InputError("Seifert matrix row " + std::to_string(r + 1) + " has " +
                         std::to_string(entries_[r].size()) + " entries, expected " +
                         std::to_string(n));
      }
    }
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t genus() const { return entries_.size() / 2; }
  long long at(std::size_t r, std::size_t c) const { return entries_.at(r).at(c); }
  long long& at(std::size_t r, std::size_t c) { return entries_.at(r).at(c); }
  const std::vector<std::vector<long long>>& rows() const { return entries_; }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  std::vector<std::vector<long long>> entries_;
};

struct NullFormCheck {
  bool ok = true;
  std::string diagnostic;  // empty when ok
  explicit operator bool() const { return ok; }
};

namespace detail {
inline std::string block_name(const char* kind, std::size_t bi, std::size_t bj) {
  return std::string(kind) + " block (" + std::to_string(bi + 1) + "," + std::to_string(bj + 1) + ")";
}
}  // namespace detail

// Blocks are scanned row-major; the first violation is reported.
inline NullFormCheck is_null_form(const SeifertMatrix& v) {
  const std::size_t g = v.genus();
  for (std::size_t bi = 0; bi < g; ++bi) {
    for (std::size_t bj = 0; bj < g; ++bj) {
      const long long a = v.at(2 * bi, 2 * bj), b = v.at(2 * bi, 2 * bj + 1);
      const long long c = v.at(2 * bi + 1, 2 * bj), d = v.at(2 * bi + 1, 2 * bj + 1);
      if (bi == bj) {
        if (a != 0 || d != 0) return {false, detail::block_name("diagonal", bi, bj) + " entry nonzero"};
        if (!((b == 0 && c == 1) || (b == 1 && c == 0))) {
          return {false, detail::block_name("diagonal", bi, bj) +
                             " off-diagonal entries are not (e, 1-e) with e in {0,1}"};
        }
      } else if (bi < bj) {
        if (a != 0 || c != 0) return {false, detail::block_name("above-diagonal", bi, bj) + " first column nonzero"};
      } else {
        if (a != 0 || b != 0) return {false, detail::block_name("below-diagonal", bi, bj) + " first row nonzero"};
      }
    }
  }
  return {};
}

inline SeifertMatrix zero_null_form(int g) {
  if (g < 1) throw InputError("genus must be at least 1");
  const auto n = static_cast<std::size_t>(2 * g);
  std::vector<std::vector<long long>> e(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; i += 2) e[i + 1][i] = 1;
  return SeifertMatrix(std::move(e));
}

// Exact determinant by fraction-free elimination.
inline boost::multiprecision::cpp_int determinant(const std::vector<std::vector<long long>>& m) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct IntersectionReport {
  boost::multiprecision::cpp_int det;
  bool unimodular = false;  // det(V - V^T) = +-1
  std::string message;
};

// Informational only: arbitrary null-form matrices need not pass.
inline IntersectionReport validate_intersection(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<long long>> s(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = v.at(i, j) - v.at(j, i);
  IntersectionReport r;
  r.det = determinant(s);
  r.unimodular = r.det == 1 || r.det == -1;
  r.message = r.unimodular ? "det(V - V^T) = " + r.det.str()
                           : "warning: det(V - V^T) = " + r.det.str() + ", expected +-1";
  return r;
}

// Rows of whitespace-separated integers, or a JSON array of arrays.
inline SeifertMatrix parse_seifert(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("matrix JSON: ") + e.what());
    }
    if (!j.is_array()) throw InputError("matrix JSON must be an array of arrays");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j) {
      if (!row.is_array()) throw InputError("matrix JSON must be an array of arrays");
      auto& out = rows.emplace_back();
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw InputError("matrix JSON entries must be integers");
        out.push_back(x.get<long long>());
      }
    }
    return SeifertMatrix(std::move(rows));
  }
  std::vector<std::vector<long long>> rows;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    std::vector<long long> row;
    std::size_t pos = line_start;
    while (pos < line_end) {
      while (pos < line_end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= line_end) break;
      std::size_t end = pos;
      if (text[end] == '-' || text[end] == '+') ++end;
      const std::size_t digits = end;
      while (end < line_end && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == digits || (end < line_end && !std::isspace(static_cast<unsigned char>(text[end])))) {
        detail::throw_parse_error("expected an integer", text, pos);
      }
      try {
        row.push_back(std::stoll(text.substr(pos, end - pos)));
      } catch (const std::out_of_range&) {
        detail::throw_parse_error("integer out of range", text, pos);
      }
      pos = end;
    }
    if (!row.empty()) rows.push_back(std::move(row));
    line_start = line_end + 1;
  }
  return SeifertMatrix(std::move(rows));
}

inline std::string to_string(const SeifertMatrix& v) {
  std::ostringstream out;
  for (const auto& row : v.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace linkhom
