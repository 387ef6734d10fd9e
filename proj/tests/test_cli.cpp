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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "cli.hpp"

using namespace linkhom;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(LINKHOM_SAMPLES_DIR) + "/" + name; }

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "linkhom-test-cli";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& content) {
  const auto p = scratch() / name;
  std::ofstream(p) << content;
  return p.string();
}
}  // namespace

TEST_CASE("nh on the Borromean rings") {
  const auto r = run({"nh", sample("borromean.braid"), "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("lambda") == 0);
  CHECK(j.at("nh").at("exact") == 2);
  const auto text = run({"nh", sample("borromean.braid")});
  CHECK(text.code == 0);
  CHECK(text.out.find("n_h: 2 (exact)") != std::string::npos);
}

TEST_CASE("small subcommands") {
  CHECK(run({"witt", "--rank", "3", "--weight", "3"}).out == "8\n");
  CHECK(run({"znumber", "x1 x2 x1^-1 x2^-1"}).out == "2\n");
  CHECK(nlohmann::json::parse(run({"--json", "znumber", "x1 x2 x1^-1 x2^-1"}).out).at("value") == 2);
  CHECK(run({"c-constant", "--n", "4"}).out == "32\n");
  CHECK(run({"c-constant", "--n", "4", "--nonrepeating"}).out == "14\n");
  CHECK(run({"lambda", sample("three_linked.json")}).out == "3\n");
  CHECK(run({"mu123", sample("borromean.braid")}).out == "1\n");
  const auto rz = nlohmann::json::parse(run({"rz-upper", "x1 x2 x1^-1 x2^-1", "--rank", "2", "--json"}).out);
  CHECK(rz.at("upper") == 2);
  CHECK(rz.at("method") == "lemma");
  const auto hall = nlohmann::json::parse(run({"hall", "--rank", "2", "--weight", "3", "--json"}).out);
  CHECK(hall.size() == 5);
  CHECK(run({"hall", "--rank", "3", "--weight", "2", "--nonrepeating"}).out ==
        "x1\nx2\nx3\n[x1,x2]\n[x1,x3]\n[x2,x3]\n");
}

TEST_CASE("rz-upper search is reproducible") {
  const std::vector<std::string> args{"rz-upper", "x1 x2 x1 x2^-1 x1^-1 x1^-1", "--rank", "2", "--search",
                                      "--seed", "5", "--budget", "500", "--json"};
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("comb round trip") {
  const auto hl_text = run({"comb", sample("borromean.braid")});
  REQUIRE(hl_text.code == 0);
  const auto hl_file = write("borromean.hl", hl_text.out);
  CHECK(run({"nh", hl_file, "--json"}).out == run({"nh", sample("borromean.braid"), "--json"}).out);
  const auto four = write("four.braid", "strands:4 A(1,4) A(2,3) A(3,4)^-1 A(1,2) A(2,4)");
  const auto four_hl = write("four.hl", run({"comb", four}).out);
  CHECK(run({"nh", four_hl, "--json"}).out == run({"nh", four, "--json"}).out);
  const auto js = write("four.json", run({"comb", four, "--json"}).out);
  CHECK(run({"nh", js, "--json"}).out == run({"nh", four, "--json"}).out);
  CHECK(run({"comb", four_hl}).code == 1);
}

TEST_CASE("seifert-check") {
  const auto r = run({"seifert-check", sample("null_form.mat"), "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("null_form") == true);
  CHECK(j.at("intersection").at("det") == 1);
  const auto bad = write("bad.mat", "[[1,0],[0,0]]");
  const auto b = nlohmann::json::parse(run({"seifert-check", bad, "--json"}).out);
  CHECK(b.at("null_form") == false);
  CHECK(b.at("diagnostic") == "diagonal block (1,1) entry nonzero");
  CHECK(run({"seifert-check", write("odd.mat", "0 1 0\n0 0 0\n0 0 0\n")}).code == 1);
}

TEST_CASE("exit codes and errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"nh", (scratch() / "missing.braid").string()}).code == 1);
  const auto bad = run({"nh", write("bad.braid", "strands:3\nA(1,2) A(3,1)")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"znumber", "x1 y2"}).code == 1);
  CHECK(run({"witt", "--rank", "0", "--weight", "2"}).code == 1);
  CHECK(run({"nh", sample("hopf.braid"), "--rank-cap", "20"}).code == 1);
  CHECK(run({"nh", sample("hopf.braid"), "--rank-cap", "20", "--allow-large-rank"}).code == 0);
  CHECK(run({"mu123", sample("hopf.braid")}).code == 1);
}

TEST_CASE("batch") {
  const auto dir = scratch();
  std::filesystem::copy_file(sample("borromean.braid"), dir / "borromean.braid",
                             std::filesystem::copy_options::overwrite_existing);
  const auto list = write("batch.txt",
                          "borromean.braid\nstrands:2 A(1,2) A(1,2)\nstrands:2 A(2,1)\n"
                          "# comment\n\nborromean.braid\n" +
                              std::string(R"({"components":3,"gamma3":"x1 x2 x1^-1 x2^-1"})") + "\n");
  const auto r = run({"batch", list});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::vector<nlohmann::json> recs;
  for (std::string line; std::getline(in, line);) recs.push_back(nlohmann::json::parse(line));
  REQUIRE(recs.size() == 5);
  CHECK(recs[0].at("ok") == true);
  CHECK(recs[0].at("line") == 1);
  CHECK(recs[1].at("result").at("nh").at("exact") == 2);
  CHECK(recs[2].at("ok") == false);
  CHECK(recs[2].at("error").at("kind") == "input");
  CHECK(recs[3].at("line") == 6);
  CHECK(recs[3].at("result") == recs[0].at("result"));
  CHECK(recs[4].at("result") == recs[0].at("result"));
  CHECK(run({"batch", list, "--threads", "1"}).out == r.out);

  const auto empty = run({"batch", write("empty.txt", "")});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
}

TEST_CASE("cache directory option") {
  const auto dir = scratch() / "cache";
  std::filesystem::remove_all(dir);
  const auto a = run({"hall", "--rank", "3", "--weight", "3", "--cache-dir", dir.string()});
  REQUIRE(a.code == 0);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 1);
  CHECK(run({"hall", "--rank", "3", "--weight", "3", "--cache-dir", dir.string()}).out == a.out);
}
