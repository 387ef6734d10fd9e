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

// Words in a free group F(n) on generators x1, x2, ...
//
// Words are stored exactly as given; nothing here reduces implicitly. The
// rank n is not part of a Word: the same word is read in F(k) for whatever
// k the caller has in mind.

#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "linkhom/errors.hpp"

namespace linkhom {

// x_index^sign, index >= 1, sign in {+1, -1}.
struct Letter {
  int index = 1;
  int sign = 1;

  constexpr Letter() = default;
  constexpr Letter(int index_, int sign_) : index(index_), sign(sign_) {
    if (index_ < 1) throw InputError("generator index must be >= 1");
    if (sign_ != 1 && sign_ != -1) throw InputError("letter sign must be +1 or -1");
  }

  constexpr Letter inverse() const { return Letter(index, -sign); }
  constexpr bool is_inverse_of(const Letter& other) const {
    return index == other.index && sign == -other.sign;
  }
  friend constexpr bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  // Convenience: x_i^{+1}.
  static Word generator(int index, int sign = 1) { return Word{Letter(index, sign)}; }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Largest generator index used, 0 for the empty word.
  int max_index() const noexcept {
    int m = 0;
    for (const auto& l : letters_) m = l.index > m ? l.index : m;
    return m;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

inline Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

inline Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

inline bool is_freely_trivial(const Word& w) { return free_reduce(w).empty(); }

// u v u^-1 v^-1, unreduced.
inline Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

inline Word power(const Word& w, long long exponent) {
  const Word base = exponent < 0 ? invert(w) : w;
  const auto times = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent);
  std::vector<Letter> out;
  out.reserve(base.size() * times);
  for (std::size_t t = 0; t < times; ++t) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return Word(std::move(out));
}

inline long long exponent_sum(const Word& w, int index) {
  long long s = 0;
  for (const auto& l : w) {
    if (l.index == index) s += l.sign;
  }
  return s;
}

// Substitute a word for each generator. images[i - 1] replaces x_i; indices
// beyond images.size() are kept as they are.
inline Word substitute(const Word& w, const std::vector<Word>& images) {
  std::vector<Letter> out;
  for (const auto& l : w) {
    if (static_cast<std::size_t>(l.index) > images.size()) {
      out.push_back(l);
      continue;
    }
    const Word& img = images[static_cast<std::size_t>(l.index) - 1];
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      const Word inv = invert(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return Word(std::move(out));
}

// Text form: "e" or whitespace-separated tokens x<i> / x<i>^-1.
inline std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += 'x';
    out += std::to_string(w[i].index);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

namespace detail {

// Reads one positive decimal integer at text[pos]; advances pos.
inline long long read_positive_int(const std::string& text, std::size_t& pos,
                                   const char* what) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw_parse_error(std::string("expected ") + what, text, start);
  if (pos - start > 9) throw_parse_error(std::string(what) + " too large", text, start);
  const long long v = std::stoll(text.substr(start, pos - start));
  if (v < 1) throw_parse_error(std::string(what) + " must be >= 1", text, start);
  return v;
}

inline void skip_space(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace detail

inline Word parse_word(const std::string& text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  bool saw_identity = false;
  detail::skip_space(text, pos);
  while (pos < text.size()) {
    const std::size_t token_start = pos;
    if ((saw_identity || !letters.empty()) && text[pos] == 'e') {
      detail::throw_parse_error("'e' must stand alone as the empty word", text, pos);
    }
    if (text[pos] == 'e') {
      ++pos;
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        detail::throw_parse_error("unexpected character after 'e'", text, pos);
      }
      saw_identity = true;
    } else if (text[pos] == 'x') {
      ++pos;
      const long long index = detail::read_positive_int(text, pos, "generator index");
      int sign = 1;
      if (pos < text.size() && text[pos] == '^') {
        if (text.compare(pos, 3, "^-1") != 0) {
          detail::throw_parse_error("only the exponent ^-1 is allowed", text, pos);
        }
        pos += 3;
        sign = -1;
      }
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        detail::throw_parse_error("expected whitespace between letters", text, pos);
      }
      if (saw_identity) detail::throw_parse_error("'e' must stand alone as the empty word", text, token_start);
      letters.emplace_back(static_cast<int>(index), sign);
    } else {
      detail::throw_parse_error("expected 'x<i>', 'x<i>^-1' or 'e'", text, token_start);
    }
    detail::skip_space(text, pos);
  }
  if (!saw_identity && letters.empty()) {
    detail::throw_parse_error("empty word must be written as 'e'", text, pos);
  }
  return Word(std::move(letters));
}

}  // namespace linkhom
