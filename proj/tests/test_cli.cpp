// Copyright 2026 The partfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "partfact/cli.hpp"
#include "partfact/errors.hpp"

using nlohmann::json;

namespace {

const std::string kData = PARTFACT_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "partfact");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = partfact::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

json report(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  auto r = invoke(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("canonical partition of the running example") {
  auto r = report({"canonical", data("example1.json")});
  CHECK(r["command"] == "canonical");
  CHECK(r["classes"]["X0"] == json({"010", "011"}));
  CHECK(r["classes"]["X1"] == json({"00", "0010", "1000"}));
  CHECK(r["classes"]["X2"] == json({"11", "1111"}));
  CHECK(r["elapsed_ms"].is_number_integer());
}

TEST_CASE("ud verdicts and witnesses") {
  CHECK(report({"ud", data("sp_ud.json")})["verdict"] == true);
  auto r = report({"ud", data("ambiguous.json")});
  CHECK(r["verdict"] == false);
  CHECK(r["relation"]["left"] == json({"a", "ba"}));
  CHECK(r["relation"]["right"] == json({"ab", "a"}));
  auto rx = report({"ud", data("example3.json")});
  CHECK(rx["verdict"] == false);
  CHECK(rx.contains("message"));
}

TEST_CASE("partition checks") {
  CHECK(report({"check-partition", data("example3.json")})["verdict"] == true);
  auto r = report({"check-partition", data("ambiguous.json")});
  CHECK(r["verdict"] == false);
  CHECK(r["message"] == "aba");
  CHECK(r["violations"] == json::array({json::array({"a", "ab"}), json::array({"a", "ba"})}));
}

TEST_CASE("gen-ud") {
  auto r = report({"gen-ud", data("example1.json"), "--seq", "1,2"});
  CHECK(r["ud"] == true);
  CHECK(r["language"]["finite"] == false);
  CHECK(report({"gen-ud", data("example1.json"), "--seq", "X1,X2"})["language"] == r["language"]);
  CHECK(invoke({"gen-ud", data("sp_ud.json"), "--seq", "1,2"}).code == 2);
  CHECK(invoke({"gen-ud", data("example1.json"), "--seq", "1,1"}).code == 2);
  CHECK(invoke({"gen-ud", data("example1.json")}).code == 2);
}

TEST_CASE("witness pipeline") {
  auto r = report({"witness", data("aa_ba.json")});
  CHECK(r["witness"]["v"] == "bb");
  CHECK(r["witness"]["w"] == "bba");
  CHECK(r["obligations"]["unbordered"] == true);
  CHECK(r["obligations"]["non_factor"] == true);
  CHECK(r["obligations"]["coding"] == true);
  CHECK_FALSE(report({"witness", data("uniform2.json")}).contains("witness"));
}

TEST_CASE("lattice operations") {
  auto join = report({"lattice", data("example1.json"), "--op", "join", "--left", "A", "--right", "B"});
  CHECK(join["classes"].size() == 3);
  auto meet = report({"lattice", data("example1.json"), "--op", "meet", "--left", "A", "--right", "B"});
  CHECK(meet["classes"].size() == 1);
  auto leq = report(
      {"lattice", data("example1.json"), "--op", "leq", "--left", "canonical", "--right", "characteristic"});
  CHECK(leq["verdict"] == true);
  CHECK(invoke({"lattice", data("example1.json"), "--op", "join", "--left", "A", "--right", "Z"}).code == 2);
}

TEST_CASE("exit statuses") {
  CHECK(invoke({"maximal", data("dense.json")}).code == 4);
  CHECK(invoke({"canonical", data("example3.json")}).code == 2);
  CHECK(invoke({"nonsense", data("example1.json")}).code == 2);
  CHECK(invoke({"ud", data("missing.json")}).code == 2);
  CHECK(invoke({"ud", temp_file("partfact_bad.json", "{not json")}).code == 2);
  CHECK(invoke({"ud", temp_file("partfact_kind.json", R"({"alphabet":["a"],"kind":"x"})")}).code == 2);
  CHECK(invoke({"ud", temp_file("partfact_sym.json", R"({"alphabet":["a"],"kind":"finite","code":["ab"]})")})
            .code == 2);
  CHECK(invoke({"ud", temp_file("partfact_rx.json", R"({"alphabet":["a"],"kind":"regex","regex":"(a"})")})
            .code == 2);
  CHECK(invoke({"factorize", data("example1.json"), "--word", "111"}).code == 2);

  setenv("PARTFACT_STATE_CAP", "3", 1);
  CHECK(invoke({"complete", data("example3.json")}).code == 3);
  setenv("PARTFACT_STATE_CAP", "zero", 1);
  CHECK(invoke({"complete", data("example3.json")}).code == 2);
  unsetenv("PARTFACT_STATE_CAP");
}

TEST_CASE("quiet mode turns verdicts into exit statuses") {
  auto yes = invoke({"ud", data("sp_ud.json"), "--quiet"});
  CHECK(yes.code == 0);
  CHECK(yes.out.empty());
  CHECK(invoke({"ud", data("ambiguous.json"), "--quiet"}).code == 1);
  CHECK(invoke({"canonical", data("example1.json"), "--quiet"}).code == 0);
}

TEST_CASE("table output") {
  auto r = invoke({"canonical", data("example1.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("X0: 010 011") != std::string::npos);
  CHECK(r.out.find("X2: 11 1111") != std::string::npos);
}

TEST_CASE("reports are deterministic without timing") {
  auto a = invoke({"prime-relations", data("example1.json"), "--format", "json", "--no-timing"});
  auto b = invoke({"prime-relations", data("example1.json"), "--format", "json", "--no-timing"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto r = json::parse(a.out);
  CHECK(r["bound"] == 12);
  CHECK(r["elapsed_ms"] == 0);
}

TEST_CASE("batch mode keeps input order") {
  auto r = invoke({"ud", data("sp_ud.json"), data("ambiguous.json"), data("sp_ud.json"), "--jobs", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<bool> verdicts;
  for (std::string line; std::getline(lines, line);) verdicts.push_back(json::parse(line)["verdict"]);
  CHECK(verdicts == std::vector<bool>{true, false, true});
  auto mixed = invoke({"maximal", data("uniform2.json"), data("dense.json"), "--jobs", "2"});
  CHECK(mixed.code == 4);
}

TEST_CASE("run() rejects unknown commands directly") {
  partfact::cli::AnalysisRequest rq;
  rq.command = "frobnicate";
  CHECK_THROWS_AS(partfact::cli::run(rq), partfact::InvalidInput);
}
