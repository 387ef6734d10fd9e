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

// Pure braids, their Artin action on the free group, and combing into
// Habegger-Lin coordinates (gamma_2, ..., gamma_n).
//
// A(i,j), i < j, is the positive full twist of strands i and j,
//   A(i,j) = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1,
// with the elementary Artin automorphisms
//   s_k:    y_k -> y_k y_{k+1} y_k^-1,   y_{k+1} -> y_k,
//   s_k^-1: y_k -> y_{k+1},              y_{k+1} -> y_{k+1}^-1 y_k y_{k+1}.
// Braid words act on the right: the action of b c is (action of c) o (action
// of b). With these conventions A(i,k) combs to gamma_k = x_i and linking
// numbers come out positive for positive twists.
//
// Every string link is link-homotopic to a pure braid (Habegger-Lin), so pure
// braids are taken as the input representation of string links.

#pragma once

#include <cctype>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "linkhom/errors.hpp"
#include "linkhom/free_words.hpp"
#include "linkhom/magnus.hpp"

namespace linkhom {

// A(i,j)^sign.
struct BraidLetter {
  int i = 1;
  int j = 2;
  int sign = 1;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class PureBraidWord {
 public:
  explicit PureBraidWord(int strands, std::vector<BraidLetter> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw InputError("a braid needs at least one strand");
    for (const auto& l : letters_) check(l);
  }

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  PureBraidWord& append(const BraidLetter& l) {
    check(l);
    letters_.push_back(l);
    return *this;
  }

  friend bool operator==(const PureBraidWord&, const PureBraidWord&) = default;

 private:
  void check(const BraidLetter& l) const {
    if (l.i < 1 || l.j <= l.i || l.j > strands_) {
      throw InputError("A(" + std::to_string(l.i) + "," + std::to_string(l.j) +
                       ") needs 1 <= i < j <= " + std::to_string(strands_));
    }
    if (l.sign != 1 && l.sign != -1) throw InputError("braid letter sign must be +1 or -1");
  }

  int strands_;
  std::vector<BraidLetter> letters_;
};

// gammas[k - 2] holds gamma_k, a word over x_1..x_{k-1} read in RF(k-1).
struct HLNormalForm {
  int components = 1;
  std::vector<Word> gammas;

  explicit HLNormalForm(int n = 1) : components(n), gammas(n > 1 ? n - 1 : 0) {
    if (n < 1) throw InputError("a link needs at least one component");
  }

  const Word& gamma(int k) const { return gammas.at(static_cast<std::size_t>(k - 2)); }
  Word& gamma(int k) { return gammas.at(static_cast<std::size_t>(k - 2)); }

  void validate() const {
    if (gammas.size() != static_cast<std::size_t>(components > 1 ? components - 1 : 0)) {
      throw InputError("HL form has the wrong number of coordinates");
    }
    for (int k = 2; k <= components; ++k) {
      if (gamma(k).max_index() >= k) {
        throw InputError("gamma" + std::to_string(k) + " may only use x1..x" +
                         std::to_string(k - 1));
      }
    }
  }

  friend bool operator==(const HLNormalForm&, const HLNormalForm&) = default;
};

// Images of y_1..y_n under a braid automorphism, as words in y's (printed
// with the letter x).
struct ArtinAction {
  int strands = 0;
  std::vector<Word> images;
  friend bool operator==(const ArtinAction&, const ArtinAction&) = default;
};

// ---- text forms ---------------------------------------------------------

inline std::string to_string(const PureBraidWord& b) {
  std::string s = "strands:" + std::to_string(b.strands());
  for (const auto& l : b.letters()) {
    s += " A(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

inline std::string format_braid(const PureBraidWord& b) { return to_string(b); }

// strands:<n> followed by A(<i>,<j>) or A(<i>,<j>)^-1 tokens.
inline PureBraidWord parse_braid(const std::string& text) {
  std::size_t pos = 0;
  detail::skip_space(text, pos);
  if (text.compare(pos, 8, "strands:") != 0) {
    detail::throw_parse_error("braid must start with 'strands:<n>'", text, pos);
  }
  pos += 8;
  const auto n = detail::read_positive_int(text, pos, "strand count");
  if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
    detail::throw_parse_error("expected whitespace after strand count", text, pos);
  }
  PureBraidWord b(static_cast<int>(n));
  detail::skip_space(text, pos);
  while (pos < text.size()) {
    const std::size_t start = pos;
    if (text.compare(pos, 2, "A(") != 0) detail::throw_parse_error("expected 'A(i,j)'", text, pos);
    pos += 2;
    const auto i = detail::read_positive_int(text, pos, "strand index");
    if (pos >= text.size() || text[pos] != ',') detail::throw_parse_error("expected ','", text, pos);
    ++pos;
    const auto j = detail::read_positive_int(text, pos, "strand index");
    if (pos >= text.size() || text[pos] != ')') detail::throw_parse_error("expected ')'", text, pos);
    ++pos;
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
    if (i >= j) detail::throw_parse_error("A(i,j) requires i < j", text, start);
    if (j > n) detail::throw_parse_error("strand index exceeds strand count", text, start);
    b.append({static_cast<int>(i), static_cast<int>(j), sign});
    detail::skip_space(text, pos);
  }
  return b;
}

inline std::string to_string(const HLNormalForm& hl) {
  std::string s = "components:" + std::to_string(hl.components) + "\n";
  for (int k = 2; k <= hl.components; ++k) {
    s += "gamma" + std::to_string(k) + " = " + to_string(hl.gamma(k)) + "\n";
  }
  return s;
}

// components:<n> on the first line, then "gamma<k> = <word>" lines. Missing
// coordinates are trivial. Lines starting with '#' are comments.
inline HLNormalForm parse_hl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<HLNormalForm> hl;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    detail::skip_space(line, pos);
    if (pos == line.size() || line[pos] == '#') continue;
    auto fail = [&](const std::string& what, std::size_t col) {
      throw ParseError(what, line_no, col + 1);
    };
    if (!hl) {
      if (line.compare(pos, 11, "components:") != 0) fail("expected 'components:<n>'", pos);
      pos += 11;
      std::size_t npos = pos;
      long long n = 0;
      try {
        n = detail::read_positive_int(line, npos, "component count");
      } catch (const ParseError& e) {
        fail("expected a positive component count", pos);
      }
      detail::skip_space(line, npos);
      if (npos != line.size()) fail("trailing characters after component count", npos);
      hl.emplace(static_cast<int>(n));
      seen.assign(static_cast<std::size_t>(n) + 1, false);
      continue;
    }
    if (line.compare(pos, 5, "gamma") != 0) fail("expected 'gamma<k> = <word>'", pos);
    pos += 5;
    std::size_t kpos = pos;
    long long k = 0;
    try {
      k = detail::read_positive_int(line, kpos, "coordinate index");
    } catch (const ParseError&) {
      fail("expected coordinate index after 'gamma'", pos);
    }
    if (k < 2 || k > hl->components) fail("coordinate index out of range 2..n", pos);
    if (seen[static_cast<std::size_t>(k)]) fail("duplicate coordinate", pos);
    seen[static_cast<std::size_t>(k)] = true;
    detail::skip_space(line, kpos);
    if (kpos >= line.size() || line[kpos] != '=') fail("expected '='", kpos);
    ++kpos;
    Word w;
    try {
      w = parse_word(line.substr(kpos));
    } catch (const ParseError& e) {
      throw ParseError("bad word: " + std::string(e.what()), line_no, kpos + e.column());
    } catch (const InputError& e) {
      throw ParseError(e.what(), line_no, kpos + 1);
    }
    if (w.max_index() >= k) fail("gamma" + std::to_string(k) + " may only use x1..x" +
                                 std::to_string(k - 1), kpos);
    hl->gamma(static_cast<int>(k)) = std::move(w);
  }
  if (!hl) throw ParseError("missing 'components:<n>' line", line_no + 1, 1);
  return *hl;
}

// ---- group operations ---------------------------------------------------

inline PureBraidWord stack(const PureBraidWord& b1, const PureBraidWord& b2) {
  if (b1.strands() != b2.strands()) throw InputError("stacking braids with different strand counts");
  std::vector<BraidLetter> letters = b1.letters();
  letters.insert(letters.end(), b2.letters().begin(), b2.letters().end());
  return PureBraidWord(b1.strands(), std::move(letters));
}

inline PureBraidWord inverse(const PureBraidWord& b) {
  std::vector<BraidLetter> letters;
  letters.reserve(b.size());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    letters.push_back({it->i, it->j, -it->sign});
  }
  return PureBraidWord(b.strands(), std::move(letters));
}

// Cancels adjacent A(i,j) A(i,j)^-1 pairs.
inline PureBraidWord free_reduce(const PureBraidWord& b) {
  std::vector<BraidLetter> stack;
  for (const auto& l : b.letters()) {
    if (!stack.empty() && stack.back().i == l.i && stack.back().j == l.j &&
        stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return PureBraidWord(b.strands(), std::move(stack));
}

// Removes strand k: drops letters touching it and renumbers the strands above.
inline PureBraidWord delete_strand(const PureBraidWord& b, int k) {
  if (k < 1 || k > b.strands()) throw InputError("strand index out of range");
  if (b.strands() == 1) throw InputError("cannot delete the only strand");
  std::vector<BraidLetter> letters;
  for (const auto& l : b.letters()) {
    if (l.i == k || l.j == k) continue;
    letters.push_back({l.i > k ? l.i - 1 : l.i, l.j > k ? l.j - 1 : l.j, l.sign});
  }
  return PureBraidWord(b.strands() - 1, std::move(letters));
}

// Sub-braid on the given strands (1-based, increasing), renumbered 1..m.
inline PureBraidWord restrict_to(const PureBraidWord& b, const std::vector<int>& keep) {
  std::vector<int> new_index(static_cast<std::size_t>(b.strands()) + 1, 0);
  int m = 0;
  int prev = 0;
  for (int s : keep) {
    if (s <= prev || s > b.strands()) throw InputError("strand selection must be increasing and in range");
    prev = s;
    new_index[static_cast<std::size_t>(s)] = ++m;
  }
  std::vector<BraidLetter> letters;
  for (const auto& l : b.letters()) {
    const int ni = new_index[static_cast<std::size_t>(l.i)];
    const int nj = new_index[static_cast<std::size_t>(l.j)];
    if (ni == 0 || nj == 0) continue;
    letters.push_back({ni, nj, l.sign});
  }
  return PureBraidWord(m, std::move(letters));
}

inline std::vector<std::vector<long long>> linking_matrix(const PureBraidWord& b) {
  const auto n = static_cast<std::size_t>(b.strands());
  std::vector<std::vector<long long>> lk(n, std::vector<long long>(n, 0));
  for (const auto& l : b.letters()) {
    lk[static_cast<std::size_t>(l.i - 1)][static_cast<std::size_t>(l.j - 1)] += l.sign;
    lk[static_cast<std::size_t>(l.j - 1)][static_cast<std::size_t>(l.i - 1)] += l.sign;
  }
  return lk;
}

// ---- Artin action -------------------------------------------------------

namespace detail {

inline std::vector<Word> identity_images(int n) {
  std::vector<Word> images;
  for (int k = 1; k <= n; ++k) images.push_back(Word::generator(k));
  return images;
}

// Elementary automorphism s_k^sign as images of y_1..y_n.
inline std::vector<Word> elementary_images(int n, int k, int sign) {
  std::vector<Word> img = identity_images(n);
  const auto a = static_cast<std::size_t>(k - 1), b = static_cast<std::size_t>(k);
  const Word yk = Word::generator(k), yk1 = Word::generator(k + 1);
  if (sign > 0) {
    img[a] = Word{Letter(k, 1), Letter(k + 1, 1), Letter(k, -1)};
    img[b] = yk;
  } else {
    img[a] = yk1;
    img[b] = Word{Letter(k + 1, -1), Letter(k, 1), Letter(k + 1, 1)};
  }
  return img;
}

// Right action: after applying `step`, image(y) = step(previous image(y)).
inline void apply_step(std::vector<Word>& images, const std::vector<Word>& step) {
  for (auto& w : images) w = free_reduce(substitute(w, step));
}

// Images of A(i,j)^sign on n strands, derived from the elementary moves.
inline const std::vector<Word>& twist_images(int n, int i, int j, int sign) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::vector<Word>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, i, j, sign);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // A(i,j) as a sequence of (k, sign) elementary letters.
  std::vector<std::pair<int, int>> seq;
  for (int k = j - 1; k > i; --k) seq.emplace_back(k, 1);
  seq.emplace_back(i, 1);
  seq.emplace_back(i, 1);
  for (int k = i + 1; k < j; ++k) seq.emplace_back(k, -1);
  if (sign < 0) {
    std::reverse(seq.begin(), seq.end());
    for (auto& s : seq) s.second = -s.second;
  }
  std::vector<Word> images = identity_images(n);
  for (auto [k, s] : seq) apply_step(images, elementary_images(n, k, s));
  return cache.emplace(key, std::move(images)).first->second;
}

}  // namespace detail

inline ArtinAction artin_action(const PureBraidWord& b) {
  ArtinAction act{b.strands(), detail::identity_images(b.strands())};
  for (const auto& l : b.letters()) {
    detail::apply_step(act.images, detail::twist_images(b.strands(), l.i, l.j, l.sign));
  }
  return act;
}

// first then second, matching stack(first_braid, second_braid).
inline ArtinAction compose(const ArtinAction& first, const ArtinAction& second) {
  if (first.strands != second.strands) throw InputError("composing actions of different size");
  ArtinAction out = first;
  detail::apply_step(out.images, second.images);
  return out;
}

// Given a freely reduced conjugate v y_k v^-1 of y_k, returns v.
inline Word conjugator_of(const Word& image, int k) {
  const Word r = free_reduce(image);
  if (r.size() % 2 == 0) throw InternalError("image is not a conjugate of y" + std::to_string(k));
  const std::size_t half = r.size() / 2;
  if (!(r[half] == Letter(k, 1))) {
    throw InternalError("image is not a conjugate of y" + std::to_string(k));
  }
  for (std::size_t t = 0; t < half; ++t) {
    if (!r[t].is_inverse_of(r[r.size() - 1 - t])) {
      throw InternalError("image is not a conjugate of y" + std::to_string(k));
    }
  }
  return Word(std::vector<Letter>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(half)));
}

// gamma_k from the image of y_k: the conjugator with y_k erased.
inline Word gamma_from_image(const Word& image, int k) {
  const Word v = conjugator_of(image, k);
  std::vector<Letter> out;
  for (const auto& l : v) {
    if (l.index > k) throw InternalError("sub-braid image mentions a deleted strand");
    if (l.index != k) out.push_back(l);
  }
  return free_reduce(Word(std::move(out)));
}

inline HLNormalForm comb(const PureBraidWord& b) {
  HLNormalForm hl(b.strands());
  PureBraidWord sub = b;
  for (int k = b.strands(); k >= 2; --k) {
    const ArtinAction act = artin_action(sub);
    hl.gamma(k) = gamma_from_image(act.images[static_cast<std::size_t>(k - 1)], k);
    sub = delete_strand(sub, k);
  }
  return hl;
}

// A pure braid whose combing gives hl back (up to RF equality): the product
// over k of gamma_k with x_i replaced by A(i,k).
inline PureBraidWord realize(const HLNormalForm& hl) {
  hl.validate();
  PureBraidWord b(hl.components);
  for (int k = 2; k <= hl.components; ++k) {
    for (const auto& l : hl.gamma(k)) b.append({l.index, k, l.sign});
  }
  return b;
}

}  // namespace linkhom
