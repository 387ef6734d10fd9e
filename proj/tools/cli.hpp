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

// Command-line front end for linkhom. run() is the whole program; main() in
// linkhom.cpp only forwards to it, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 input error, 2 internal error.

#pragma once

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "linkhom/errors.hpp"
#include "linkhom/free_words.hpp"
#include "linkhom/hall.hpp"
#include "linkhom/hall_cache.hpp"
#include "linkhom/invariants.hpp"
#include "linkhom/io.hpp"
#include "linkhom/seifert.hpp"
#include "linkhom/trivializing.hpp"

namespace linkhom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;

struct Config {
  int rank_cap = kDefaultRankCap;
  bool allow_large_rank = false;
  std::size_t search_budget = RZSearchOptions{}.budget;
  std::size_t max_len = RZSearchOptions{}.max_len;
  std::string cache_dir;
  bool json = false;
  std::uint64_t seed = 0;
  bool split = false;
  unsigned threads = 0;

  void check() const {
    if (rank_cap < 1) throw InputError("--rank-cap must be positive");
    if (rank_cap > kDefaultRankCap && !allow_large_rank) {
      throw InputError("--rank-cap above " + std::to_string(kDefaultRankCap) +
                       " needs --allow-large-rank");
    }
    if (rank_cap > kHardRankLimit) {
      throw InputError("--rank-cap may not exceed " + std::to_string(kHardRankLimit));
    }
  }

  NhOptions nh_options() const {
    NhOptions o;
    o.rank_cap = rank_cap;
    o.split_braid = split;
    return o;
  }

  HallCache cache() const {
    return cache_dir.empty() ? HallCache::from_environment() : HallCache(cache_dir);
  }
};

namespace detail {

inline std::string describe(const NhResult& r) {
  std::ostringstream out;
  out << "components: " << r.components << '\n' << "lambda: " << r.lambda << '\n';
  if (r.exact) {
    out << "n_h: " << *r.exact << " (exact)\n";
  } else {
    out << "n_h: between " << r.lower << " and " << r.upper << '\n';
  }
  out << "n_d: equal to n_h\n";
  for (const auto& c : r.certificates) out << "  " << c.kind << ": " << c.detail << '\n';
  return out.str();
}

inline nlohmann::json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

inline nlohmann::json bound_json(const RZBound& b) {
  return {{"upper", b.upper}, {"witness", to_string(b.witness)}, {"method", to_string(b.method)}};
}

// One batch line: a link file path, or an inline braid or JSON record.
inline nlohmann::json batch_line(const std::string& line, const std::filesystem::path& base,
                                 const Config& cfg) {
  LinkInput link = [&] {
    const auto first = line.find_first_not_of(" \t");
    if (line[first] == '{' || line.compare(first, 8, "strands:") == 0) return parse_link(line);
    std::filesystem::path p(line.substr(first, line.find_last_not_of(" \t\r") - first + 1));
    if (p.is_relative()) p = base / p;
    return load_link(p.string());
  }();
  return to_json(nh(link, cfg.nh_options()));
}

}  // namespace detail

// Batch evaluation: one JSON record per non-blank, non-comment line, in input
// order. Lines are evaluated concurrently; errors stay on their line.
inline void run_batch(const std::string& path, const Config& cfg, std::ostream& out) {
  const std::string text = read_file(path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.emplace_back(no, line);
    }
  }
  std::vector<nlohmann::json> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      nlohmann::json rec = {{"line", lines[i].first}, {"input", lines[i].second}};
      try {
        rec["result"] = detail::batch_line(lines[i].second, base, cfg);
        rec["ok"] = true;
      } catch (const InputError& e) {
        rec["ok"] = false;
        rec["error"] = detail::error_json("input", e.what());
      } catch (const std::exception& e) {
        rec["ok"] = false;
        rec["error"] = detail::error_json("internal", e.what());
      }
      results[i] = std::move(rec);
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(lines.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : results) out << r.dump() << '\n';
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Link-homotopy invariants and the homotopy trivializing number"};
  app.name("linkhom");
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--rank-cap", cfg.rank_cap, "largest free-group rank to expand")->capture_default_str();
  app.add_flag("--allow-large-rank", cfg.allow_large_rank, "permit --rank-cap above the default");
  app.add_option("--cache-dir", cfg.cache_dir, "Hall basis cache directory (else $LINKHOM_CACHE_DIR)");
  app.add_option("--seed", cfg.seed, "seed for rz-upper --search")->capture_default_str();
  app.add_option("--budget", cfg.search_budget, "state budget for rz-upper --search")->capture_default_str();
  app.add_option("--max-len", cfg.max_len, "word length limit for rz-upper --search")->capture_default_str();
  app.add_flag("--split", cfg.split, "nh/batch: also bound braids by splitting the braid word");
  app.add_option("--threads", cfg.threads, "batch worker threads (0: all cores)");

  std::string file, word;
  int rank = 0, weight = 0, k = 0;
  bool nonrepeating = false, search = false;

  auto* nh_cmd = app.add_subcommand("nh", "bounds on n_h (and n_d) of a link");
  nh_cmd->add_option("link-file", file)->required();
  auto* lambda_cmd = app.add_subcommand("lambda", "sum of absolute pairwise linking numbers");
  lambda_cmd->add_option("link-file", file)->required();
  auto* mu_cmd = app.add_subcommand("mu123", "triple linking number of a 3-component link");
  mu_cmd->add_option("link-file", file)->required();
  auto* comb_cmd = app.add_subcommand("comb", "HL coordinates of a pure braid");
  comb_cmd->add_option("braid-file", file)->required();
  auto* hall_cmd = app.add_subcommand("hall", "basic commutators");
  hall_cmd->add_option("--rank", rank)->required();
  hall_cmd->add_option("--weight", weight)->required();
  hall_cmd->add_flag("--nonrepeating", nonrepeating);
  auto* witt_cmd = app.add_subcommand("witt", "number of basic commutators of a given weight");
  witt_cmd->add_option("--rank", rank)->required();
  witt_cmd->add_option("--weight", weight)->required();
  auto* z_cmd = app.add_subcommand("znumber", "trivializing number Z of a word");
  z_cmd->add_option("word", word)->required();
  auto* rz_cmd = app.add_subcommand("rz-upper", "upper bound on RZ of a word in RF(n)");
  rz_cmd->add_option("word", word)->required();
  rz_cmd->add_option("--rank", rank)->required();
  rz_cmd->add_flag("--search", search, "refine by bounded rewriting");
  auto* c_cmd = app.add_subcommand("c-constant", "the constant C_n");
  c_cmd->add_option("--n", k)->required();
  c_cmd->add_flag("--nonrepeating", nonrepeating);
  auto* seifert_cmd = app.add_subcommand("seifert-check", "null-form pattern check");
  seifert_cmd->add_option("matrix-file", file)->required();
  auto* batch_cmd = app.add_subcommand("batch", "nh for each line of a file, as JSON lines");
  batch_cmd->add_option("file", file)->required();

  std::vector<const char*> argv{"linkhom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    cfg.check();
    const bool js = cfg.json;
    if (nh_cmd->parsed()) {
      const auto r = nh(load_link(file), cfg.nh_options());
      out << (js ? to_json(r).dump() + "\n" : detail::describe(r));
    } else if (lambda_cmd->parsed()) {
      const auto link = load_link(file);
      const long long lam = lambda_of(link);
      if (js) {
        out << nlohmann::json{{"lambda", lam}, {"linking_matrix", link.linking_matrix()}}.dump() << '\n';
      } else {
        out << lam << '\n';
      }
    } else if (mu_cmd->parsed()) {
      const auto m = mu123(load_link(file), cfg.rank_cap);
      if (js) {
        out << nlohmann::json{{"mu123", m.value}, {"linking_vanishes", m.linking_vanishes}}.dump() << '\n';
      } else {
        out << m.value << (m.linking_vanishes ? "" : " (pairwise linking nonzero)") << '\n';
      }
    } else if (comb_cmd->parsed()) {
      const auto link = load_link(file);
      if (!link.is_braid()) throw InputError("comb expects a braid file");
      const auto hl = link.hl();
      out << (js ? to_json(hl).dump() + "\n" : to_string(hl));
    } else if (hall_cmd->parsed()) {
      const auto basis = cfg.cache().get(rank, weight, nonrepeating);
      if (js) {
        out << linkhom::detail::basis_to_json(basis).dump() << '\n';
      } else {
        for (const auto& c : basis.elements) out << to_string(c) << '\n';
      }
    } else if (witt_cmd->parsed()) {
      if (rank < 1 || weight < 1) throw InputError("rank and weight must be positive");
      const auto w = witt(rank, weight);
      out << (js ? nlohmann::json{{"witt", w}}.dump() : std::to_string(w)) << '\n';
    } else if (z_cmd->parsed()) {
      const auto z = z_number(parse_word(word));
      if (js) {
        std::vector<std::size_t> pos;
        for (auto p : z.witness_deletions) pos.push_back(p + 1);
        out << nlohmann::json{{"value", z.value}, {"witness", pos}}.dump() << '\n';
      } else {
        out << z.value << '\n';
      }
    } else if (rz_cmd->parsed()) {
      const Word g = parse_word(word);
      RZBound b;
      if (search) {
        RZSearchOptions o;
        o.max_len = cfg.max_len;
        o.budget = cfg.search_budget;
        o.seed = cfg.seed;
        b = rz_search(g, rank, o, cfg.rank_cap);
      } else {
        b = rz_upper(g, rank, cfg.rank_cap);
      }
      if (js) {
        out << detail::bound_json(b).dump() << '\n';
      } else {
        out << b.upper << " (" << to_string(b.method) << "; witness " << to_string(b.witness) << ")\n";
      }
    } else if (c_cmd->parsed()) {
      const auto c = c_constant(k, nonrepeating);
      if (js) {
        out << nlohmann::json{{"n", k}, {"nonrepeating", nonrepeating}, {"c", c}}.dump() << '\n';
      } else {
        out << c << '\n';
      }
    } else if (seifert_cmd->parsed()) {
      const auto v = parse_seifert(read_file(file));
      const auto check = is_null_form(v);
      const auto inter = validate_intersection(v);
      if (js) {
        nlohmann::json det = inter.det.str();
        if (boost::multiprecision::abs(inter.det) < (boost::multiprecision::cpp_int(1) << 62)) {
          det = inter.det.convert_to<long long>();
        }
        out << nlohmann::json{{"null_form", check.ok},
                              {"diagnostic", check.ok ? nlohmann::json(nullptr) : nlohmann::json(check.diagnostic)},
                              {"intersection", {{"det", det}, {"unimodular", inter.unimodular}}}}
                   .dump()
            << '\n';
      } else {
        out << "null form: " << (check.ok ? "yes" : "no (" + check.diagnostic + ")") << '\n'
            << inter.message << '\n';
      }
    } else if (batch_cmd->parsed()) {
      run_batch(file, cfg, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace linkhom::cli
