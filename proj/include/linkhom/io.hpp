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

// Link files. Three formats, told apart by their first significant token:
//
//   strands:<n> A(i,j) A(i,j)^-1 ...          braid text
//   components:<n> / gamma<k> = <word> ...    HL text
//   { ... }                                   JSON, either
//       {"strands": n, "letters": [[i, j, sign], ...]}   or
//       {"components": n, "gamma2": "<word>", ...}
//
// Lines whose first non-blank character is '#' are comments in the text
// formats.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "linkhom/braids.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/invariants.hpp"

namespace linkhom {

namespace detail {

// Comment lines blanked out in place, so positions stay meaningful.
inline std::string blank_comments(std::string text) {
  bool at_line_start = true;
  bool in_comment = false;
  for (char& ch : text) {
    if (ch == '\n') {
      at_line_start = true;
      in_comment = false;
      continue;
    }
    if (in_comment) {
      ch = ' ';
    } else if (at_line_start && ch == '#') {
      in_comment = true;
      ch = ' ';
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      at_line_start = false;
    }
  }
  return text;
}

inline int json_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1000000000LL || v > 1000000000LL) throw InputError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace detail

inline LinkInput link_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("link JSON must be an object");
  if (j.contains("strands")) {
    const int n = detail::json_int(j.at("strands"), "strands");
    if (n < 1) throw InputError("strands must be positive");
    PureBraidWord b(n);
    if (j.contains("letters")) {
      const auto& ls = j.at("letters");
      if (!ls.is_array()) throw InputError("letters must be an array");
      for (const auto& l : ls) {
        if (!l.is_array() || l.size() != 3) throw InputError("each letter must be [i, j, sign]");
        b.append({detail::json_int(l[0], "letter index"), detail::json_int(l[1], "letter index"),
                  detail::json_int(l[2], "letter sign")});
      }
    }
    return b;
  }
  if (j.contains("components")) {
    const int n = detail::json_int(j.at("components"), "components");
    if (n < 1) throw InputError("components must be positive");
    HLNormalForm hl(n);
    for (const auto& [key, value] : j.items()) {
      if (key == "components") continue;
      if (key.rfind("gamma", 0) != 0) throw InputError("unexpected key '" + key + "'");
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key.substr(5), &used);
        if (used != key.size() - 5) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InputError("bad coordinate key '" + key + "'");
      }
      if (k < 2 || k > n) throw InputError("coordinate '" + key + "' out of range 2..n");
      if (!value.is_string()) throw InputError("coordinate '" + key + "' must be a word string");
      hl.gamma(k) = parse_word(value.get<std::string>());
    }
    return LinkInput(std::move(hl));
  }
  throw InputError("link JSON needs a 'strands' or 'components' key");
}

inline nlohmann::json to_json(const PureBraidWord& b) {
  nlohmann::json letters = nlohmann::json::array();
  for (const auto& l : b.letters()) letters.push_back({l.i, l.j, l.sign});
  return {{"strands", b.strands()}, {"letters", letters}};
}

inline nlohmann::json to_json(const HLNormalForm& hl) {
  nlohmann::json j = {{"components", hl.components}};
  for (int k = 2; k <= hl.components; ++k) j["gamma" + std::to_string(k)] = to_string(hl.gamma(k));
  return j;
}

inline LinkInput parse_link(const std::string& raw) {
  const std::string text = detail::blank_comments(raw);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty link input", 1, 1);
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("link JSON: ") + e.what());
    }
    return link_from_json(j);
  }
  if (text.compare(first, 8, "strands:") == 0) return parse_braid(text);
  if (text.compare(first, 11, "components:") == 0) return parse_hl(raw);
  detail::throw_parse_error("expected 'strands:<n>', 'components:<n>' or a JSON object", text, first);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline LinkInput load_link(const std::string& path) { return parse_link(read_file(path)); }

}  // namespace linkhom
