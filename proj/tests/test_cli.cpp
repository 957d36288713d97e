// Copyright 2026 The mld Authors
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

// End-to-end checks of the installed command-line binary, driven as a
// subprocess. MLD_CLI_PATH is injected by the build.

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MLD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) {
    r.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path("cli_test_tmp") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directory(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("generate then compute with label-aware rendering") {
  TempDir tmp;
  const auto gen = run_cli("generate path 6 -o " + tmp.file("p6.el"));
  CHECK(gen.exit_code == 0);
  CHECK(std::filesystem::exists(tmp.file("p6.el")));
  CHECK(std::filesystem::exists(tmp.file("p6.el.labels.json")));

  const auto human = run_cli("compute " + tmp.file("p6.el"));
  CHECK(human.exit_code == 0);
  CHECK(human.output.find("gammaM = 2") != std::string::npos);
  CHECK(human.output.find("end_0") != std::string::npos);  // sidecar applied

  const auto machine = run_cli("compute " + tmp.file("p6.el") + " --json");
  CHECK(machine.exit_code == 0);
  const json report = json::parse(machine.output);
  CHECK(report["invariants"]["gammaL"]["value"] == 3);
  CHECK(report["fatal_violation"] == false);
}

TEST_CASE("input errors exit with code 1") {
  TempDir tmp;
  std::ofstream(tmp.file("bad.el")) << "4 2\n0 1\n2 3\n";
  const auto disconnected = run_cli("compute " + tmp.file("bad.el"));
  CHECK(disconnected.exit_code == 1);
  CHECK(disconnected.output.find("disconnected") != std::string::npos);

  std::ofstream(tmp.file("c5.el")) << "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
  const auto not_tree = run_cli("tree " + tmp.file("c5.el"));
  CHECK(not_tree.exit_code == 1);
  CHECK(not_tree.output.find("not_a_tree") != std::string::npos);

  CHECK(run_cli("compute " + tmp.file("missing.el")).exit_code == 1);
  CHECK(run_cli("verify --file " + tmp.file("missing.json")).exit_code == 1);
  CHECK(run_cli("bogus-subcommand").exit_code == 1);
  CHECK(run_cli("generate prufer -n 8").exit_code == 1);  // seed required
  CHECK(run_cli("search --goal psi-eq-2gm --nmax 4").exit_code == 1);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("compute --help").exit_code == 0);
}

TEST_CASE("transform subcommand certifies and prints sets") {
  TempDir tmp;
  std::ofstream(tmp.file("p4.el")) << "4 3\n0 1\n1 2\n2 3\n";
  const auto pi = run_cli("transform " + tmp.file("p4.el") + " pi --set 0,3");
  CHECK(pi.exit_code == 0);
  CHECK(pi.output.find("certified: yes") != std::string::npos);
  CHECK(pi.output.find("{0,1,2,3}") != std::string::npos);

  const auto bad_set =
      run_cli("transform " + tmp.file("p4.el") + " pi --set 0,x");
  CHECK(bad_set.exit_code == 1);

  const auto bad_which =
      run_cli("transform " + tmp.file("p4.el") + " frobnicate");
  CHECK(bad_which.exit_code == 1);
}

TEST_CASE("verify over a built-in corpus summarizes cleanly") {
  TempDir tmp;
  const auto r = run_cli("verify --paths 7 --stars 4 --out " +
                         tmp.file("reports.jsonl"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0 fatal violations") != std::string::npos);
  CHECK(std::filesystem::exists(tmp.file("reports.jsonl")));

  // Without --file and without any corpus flags there is nothing to verify.
  CHECK(run_cli("verify").exit_code == 1);
}

TEST_CASE("search reports its verdict as JSON on request") {
  const auto r =
      run_cli("search --goal psi-eq-2gm --nmax 4 --seed 1 --json");
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["goal"] == "psi-eq-2gm");
  CHECK(out["graphs_examined"].get<long>() >= 1);
}

TEST_CASE("solver timeouts surface as exit code 3") {
  TempDir tmp;
  const auto gen =
      run_cli("generate gnp -n 30 --p 0.2 --seed 9 -o " + tmp.file("big.el"));
  REQUIRE(gen.exit_code == 0);
  const auto r =
      run_cli("compute " + tmp.file("big.el") + " --budget 0.000001");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("timeout") != std::string::npos);
}
