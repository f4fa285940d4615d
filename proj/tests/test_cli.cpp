// Copyright 2026 The Authors.
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "covrough/cli.hpp"

namespace {

const std::string kData = COVROUGH_TEST_DATA_DIR;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args,
                  const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = covrough::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Value of "key: ..." in line-oriented output, or "" when absent.
std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    const std::string prefix = key + ": ";
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return "";
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream file(path);
  file << content;
  return path.string();
}

}  // namespace

TEST_CASE("graph connected verdicts and exit codes") {
  auto connected = run_cli({"graph", "connected", kData + "/diamond.graph"});
  CHECK(connected.code == 0);
  CHECK(connected.out == "connected: true (outer definable sets: ∅, V)\n");

  auto split = run_cli({"graph", "connected", kData + "/two-edges.graph"});
  CHECK(split.code == 1);
  CHECK(split.out == "connected: false (outer definable set: {a, b})\n");

  auto isolated =
      run_cli({"graph", "connected", kData + "/diamond-isolated.graph"});
  CHECK(isolated.code == 1);
  CHECK(isolated.out ==
        "connected: false (covering method inapplicable: isolated vertices "
        "{e}; oracle used)\n");

  auto single = run_cli({"graph", "connected", kData + "/single.graph"});
  CHECK(single.code == 0);

  auto oracle =
      run_cli({"graph", "connected", kData + "/diamond.graph", "--oracle"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out ==
        "connected: true (outer definable sets: ∅, V) [oracle]\n");
}

TEST_CASE("matroid verdict subcommands") {
  const std::string matroid = kData + "/mixed.matroid";

  auto validate = run_cli({"matroid", "validate", matroid});
  CHECK(validate.code == 0);
  CHECK(validate.out == "circuit axioms: C1 ok, C2 ok, C3 ok\n");

  auto connected = run_cli({"matroid", "connected", matroid});
  CHECK(connected.code == 1);
  CHECK(connected.out == "connected: false (step 1: loop {6})\n");

  auto gamma =
      run_cli({"matroid", "connected", matroid, "--method", "gamma"});
  CHECK(gamma.code == 1);
  CHECK(gamma.out == "connected: false (gamma classes: 3)\n");

  auto induced =
      run_cli({"matroid", "connected", matroid, "--method", "induced-graph"});
  CHECK(induced.code == 1);

  auto loops = run_cli({"matroid", "loops", matroid});
  CHECK(loops.code == 0);
  CHECK(loops.out == "loops: {6}\n");

  auto covers = run_cli({"matroid", "covers", matroid});
  CHECK(covers.code == 1);
  CHECK(covers.out == "covers: false (uncovered {7})\n");

  auto components = run_cli({"matroid", "components", matroid});
  CHECK(components.code == 0);
  CHECK(components.out ==
        "gamma classes: 3\nblock: 1 2 3 4 5\nblock: 6\nblock: 7\n");
}

TEST_CASE("matroid validation failures report axiom violations") {
  const std::string path = write_temp(
      "covrough-bad.matroid", "ground: 1 2\ncircuit: 1\ncircuit: 1 2\n");
  auto result = run_cli({"matroid", "validate", path});
  CHECK(result.code == 1);
  CHECK(result.out == "C2 violated: {1} ⊂ {1, 2}\n");
  // Other matroid subcommands refuse the same file the same way.
  auto loops = run_cli({"matroid", "loops", path});
  CHECK(loops.code == 1);
  CHECK(loops.out == result.out);
  std::remove(path.c_str());
}

TEST_CASE("graph witness subcommand") {
  auto found =
      run_cli({"graph", "witness", kData + "/diamond.graph", "b", "d"});
  CHECK(found.code == 0);
  CHECK(found.out == "connected pair: true\nchain: {b, c} -> {c, d}\n");

  auto none =
      run_cli({"graph", "witness", kData + "/two-edges.graph", "a", "c"});
  CHECK(none.code == 1);

  auto oracle = run_cli(
      {"graph", "witness", kData + "/two-edges.graph", "a", "c", "--oracle"});
  CHECK(oracle.code == 1);
  CHECK(oracle.out == "connected pair: false [oracle]\n");

  auto same =
      run_cli({"graph", "witness", kData + "/diamond.graph", "b", "b"});
  CHECK(same.code == 2);

  auto unknown =
      run_cli({"graph", "witness", kData + "/diamond.graph", "b", "zz"});
  CHECK(unknown.code == 2);
}

TEST_CASE("approx subcommands on a covering file") {
  const std::string cov = kData + "/diamond.cov";
  auto up = run_cli({"approx", "upper", cov, "--set", "b"});
  CHECK(up.code == 0);
  CHECK(up.out == "upper: {a, b, c}\nouter definable: false\n");

  auto low = run_cli({"approx", "lower", cov, "--set", "a,b,c"});
  CHECK(low.code == 0);
  CHECK(low.out == "lower: {b}\n");

  auto closure = run_cli({"approx", "closure", cov, "--set", "b"});
  CHECK(closure.code == 0);
  CHECK(closure.out == "closure: {a, b, c, d}\n");

  auto empty = run_cli({"approx", "upper", cov, "--set", ""});
  CHECK(empty.code == 0);
  CHECK(empty.out == "upper: ∅\nouter definable: true\n");

  const std::string bad = write_temp("covrough-bad.cov",
                                     "universe: a b c\nblock: a b\n");
  auto not_covering = run_cli({"approx", "upper", bad, "--set", "a"});
  CHECK(not_covering.code == 1);
  CHECK(not_covering.out == "covering: false\nuncovered element: c\n");
  std::remove(bad.c_str());
}

TEST_CASE("graph data subcommands emit parseable formats") {
  auto covering =
      run_cli({"graph", "induce-covering", kData + "/diamond.graph"});
  CHECK(covering.code == 0);
  CHECK(covering.out ==
        "universe: a b c d\nblock: b c\nblock: c d\nblock: a d\n"
        "block: a b\nblock: a c\n");

  auto not_covering =
      run_cli({"graph", "induce-covering", kData + "/diamond-isolated.graph"});
  CHECK(not_covering.code == 1);
  CHECK(not_covering.out == "covering: false\nuncovered element: e\n");

  auto components =
      run_cli({"graph", "components", kData + "/diamond-isolated.graph"});
  CHECK(components.code == 0);
  CHECK(components.out == "components: 2\nblock: a b c d\nblock: e\n");

  auto subgraph = run_cli({"graph", "subgraph", kData + "/diamond.graph",
                           "--set", "b,c,d"});
  CHECK(subgraph.code == 0);
  CHECK(subgraph.out == "vertices: b c d\nedge b c\nedge c d\n");
}

TEST_CASE("incidence export and import round-trip through stdin") {
  auto incidence = run_cli({"graph", "incidence", kData + "/diamond.graph"});
  CHECK(incidence.code == 0);

  auto back = run_cli({"graph", "from-incidence", "-"}, incidence.out);
  CHECK(back.code == 0);
  std::ifstream file(kData + "/diamond.graph");
  std::stringstream original;
  original << file.rdbuf();
  CHECK(back.out == original.str());
}

TEST_CASE("gen subcommands") {
  auto uniform = run_cli({"gen", "uniform", "--k", "2", "--n", "4"});
  CHECK(uniform.code == 0);
  CHECK(uniform.out ==
        "ground: 1 2 3 4\ncircuit: 1 2 3\ncircuit: 1 2 4\n"
        "circuit: 1 3 4\ncircuit: 2 3 4\n");

  auto cycle = run_cli({"gen", "cycle-matroid", kData + "/k4.graph"});
  CHECK(cycle.code == 0);
  // 7 circuit lines after the ground line.
  CHECK(std::count(cycle.out.begin(), cycle.out.end(), '\n') == 8);

  auto bad = run_cli({"gen", "uniform", "--k", "9", "--n", "4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("bad parameters") != std::string::npos);
}

TEST_CASE("structured output agrees with text verdicts") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"graph", "connected", kData + "/diamond.graph"}, "connected"},
      {{"graph", "connected", kData + "/two-edges.graph"}, "connected"},
      {{"graph", "connected", kData + "/diamond-isolated.graph"}, "connected"},
      {{"matroid", "connected", kData + "/mixed.matroid"}, "connected"},
      {{"matroid", "covers", kData + "/mixed.matroid"}, "covers"},
      {{"graph", "witness", kData + "/diamond.graph", "b", "d"},
       "connected pair"},
  };
  for (const auto& [args, key] : cases) {
    CAPTURE(args.front());
    auto text = run_cli(args);
    auto with_flag = args;
    with_flag.push_back("--format");
    with_flag.push_back("structured");
    auto structured = run_cli(with_flag);
    CHECK(text.code == structured.code);

    const std::string text_value = value_of(text.out, key);
    const std::string structured_key =
        key == "connected pair" ? "connected_pair" : key;
    const std::string structured_value =
        value_of(structured.out, structured_key);
    const bool text_verdict = text_value.rfind("true", 0) == 0;
    CHECK(structured_value == (text_verdict ? "true" : "false"));
  }
}

TEST_CASE("structured mode emits json values") {
  auto result = run_cli({"graph", "witness", kData + "/diamond.graph", "b",
                         "d", "--format", "structured"});
  CHECK(result.code == 0);
  CHECK(result.out ==
        "connected_pair: true\nchain: [[\"b\",\"c\"],[\"c\",\"d\"]]\n");

  auto components = run_cli({"matroid", "components", kData + "/mixed.matroid",
                             "--format", "structured"});
  CHECK(components.code == 0);
  CHECK(value_of(components.out, "count") == "3");
  CHECK(value_of(components.out, "blocks") ==
        "[[\"1\",\"2\",\"3\",\"4\",\"5\"],[\"6\"],[\"7\"]]");
}

TEST_CASE("usage and parse errors exit with 2") {
  auto no_sub = run_cli({});
  CHECK(no_sub.code == 2);

  auto unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 2);

  auto missing_file = run_cli({"graph", "connected", "/no/such/file.graph"});
  CHECK(missing_file.code == 2);
  CHECK(missing_file.err.find("cannot open") != std::string::npos);

  auto bad_format = run_cli(
      {"graph", "connected", kData + "/diamond.graph", "--format", "yaml"});
  CHECK(bad_format.code == 2);

  const std::string bad = write_temp("covrough-bad.graph",
                                     "vertices: a b\nedge a a\n");
  auto loop_edge = run_cli({"graph", "connected", bad});
  CHECK(loop_edge.code == 2);
  CHECK(loop_edge.err.find("line 2") != std::string::npos);
  std::remove(bad.c_str());

  auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("graph") != std::string::npos);
}
