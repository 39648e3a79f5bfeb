// Copyright 2026 The mec Authors
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

// End-to-end tests of the mec command-line tool. The binary path arrives as
// the first program argument (see tests/CMakeLists.txt).

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using json = nlohmann::json;

namespace {

std::string g_cli;
std::string g_tmpdir;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  file << content;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string out_path = g_tmpdir + "/stdout.txt";
  const std::string err_path = g_tmpdir + "/stderr.txt";
  const std::string cmd =
      env_prefix + g_cli + " " + args + " >" + out_path + " 2>" + err_path;
  int rc = std::system(cmd.c_str());
  RunResult result;
  result.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

const char kHeavyLightPath[] = "5 4\n0 1 100\n1 2 1\n2 3 1\n3 4 100\n";
const char kTriangle[] = "3 3\n0 1 1\n1 2 1\n0 2 1\n";

}  // namespace

TEST_CASE("solve --alg best reports the kk solution on the heavy-light path") {
  const std::string inst = g_tmpdir + "/path.mec";
  spit(inst, kHeavyLightPath);
  RunResult r =
      run_cli("solve --input " + inst + " --alg best --format json");
  REQUIRE(r.code == 0);
  json report = json::parse(r.out);
  CHECK(report["total_weight"] == 102);
  CHECK(report["chosen"] == "kk");
  CHECK(report["lower_bound"] == 101);
  CHECK(report["rank_profile"] == json::array({100, 1}));
  CHECK(report["instance"]["delta"] == 2);
  CHECK(report["classes"].size() == 3);
}

TEST_CASE("solve text output covers the same fields") {
  const std::string inst = g_tmpdir + "/path.mec";
  spit(inst, kHeavyLightPath);
  RunResult r = run_cli("solve --input " + inst + " --alg alg1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("total weight: 200") != std::string::npos);
  CHECK(r.out.find("lower bound: 101") != std::string::npos);
}

TEST_CASE("solve honors the root override and reads stdin") {
  const std::string inst = g_tmpdir + "/path.mec";
  spit(inst, kHeavyLightPath);
  RunResult rooted = run_cli("solve --input " + inst +
                             " --alg alg1 --root 2 --format json");
  REQUIRE(rooted.code == 0);
  CHECK(json::parse(rooted.out)["root"] == 2);
  CHECK(run_cli("solve --input " + inst + " --alg alg1 --root 9").code == 2);

  RunResult piped =
      run_cli("solve --input - --alg kk --format json < " + inst);
  REQUIRE(piped.code == 0);
  CHECK(json::parse(piped.out)["total_weight"] == 102);
}

TEST_CASE("solve --alg alg1 on a non-tree exits 2") {
  const std::string inst = g_tmpdir + "/triangle.mec";
  spit(inst, kTriangle);
  RunResult r = run_cli("solve --input " + inst + " --alg alg1");
  CHECK(r.code == 2);
  CHECK(r.err.find("error") != std::string::npos);
  // kk still works on the same input
  CHECK(run_cli("solve --input " + inst + " --alg kk").code == 0);
}

TEST_CASE("solve on a malformed instance exits 1 with a line number") {
  const std::string inst = g_tmpdir + "/bad.mec";
  spit(inst, "3 2\n0 1 4\n0 1 7\n");
  RunResult r = run_cli("solve --input " + inst);
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("solve --alg exact reports the optimum") {
  const std::string inst = g_tmpdir + "/single.mec";
  spit(inst, "2 1\n0 1 9\n");
  RunResult r =
      run_cli("solve --input " + inst + " --alg exact --format json");
  REQUIRE(r.code == 0);
  json report = json::parse(r.out);
  CHECK(report["exact"]["opt"] == 9);
  CHECK(report["exact"]["optimal"] == true);
  CHECK(report["total_weight"] == 9);
}

TEST_CASE("solve --alg exact with a tiny budget exits 3") {
  const std::string inst = g_tmpdir + "/path.mec";
  spit(inst, kHeavyLightPath);
  RunResult r = run_cli("solve --input " + inst +
                        " --alg exact --budget 2 --format json");
  CHECK(r.code == 3);
  json report = json::parse(r.out);
  CHECK(report["exact"]["optimal"] == false);
}

TEST_CASE("gen random is deterministic and parseable") {
  const std::string a = g_tmpdir + "/gen_a.mec";
  const std::string b = g_tmpdir + "/gen_b.mec";
  REQUIRE(run_cli("gen --family random --n 9 --wmin 1 --wmax 50 --seed 11 "
                  "--output " + a).code == 0);
  REQUIRE(run_cli("gen --family random --n 9 --wmin 1 --wmax 50 --seed 11 "
                  "--output " + b).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run_cli("solve --input " + a + " --alg best").code == 0);
}

TEST_CASE("gen alg1-worst emits the pinned instance") {
  RunResult r = run_cli("gen --family alg1-worst --C 100 --eps 1");
  REQUIRE(r.code == 0);
  CHECK(r.out == "5 4\n0 1 100\n1 2 1\n2 3 1\n3 4 100\n");
  CHECK(run_cli("gen --family alg1-worst --C 1 --eps 1").code == 64);
}

TEST_CASE("experiment produces byte-identical CSV for the same seed") {
  const std::string csv_a = g_tmpdir + "/exp_a.csv";
  const std::string csv_b = g_tmpdir + "/exp_b.csv";
  const std::string args =
      "experiment --trials 6 --nmax 6 --wmin 1 --wmax 5 --seed 9 "
      "--with-oracle --output ";
  RunResult a = run_cli(args + csv_a);
  REQUIRE(a.code == 0);
  RunResult b = run_cli(args + csv_b);
  REQUIRE(b.code == 0);
  CHECK(slurp(csv_a) == slurp(csv_b));
  CHECK(a.out == b.out);

  json summary = json::parse(a.out);
  CHECK(summary["violations"] == 0);
  CHECK(summary["trials"] == 6);

  const std::string csv = slurp(csv_a);
  CHECK(csv.rfind("trial,seed,n,m,delta,y_profile,lower_bound,", 0) == 0);
  // header + one line per trial
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("experiment trial can be pinned to a known instance by its seed") {
  // Seed 5 with nmax=4, weights in [2,7] makes trial 0 the star with leaf
  // weights 7, 5, 2: every solver and both bounds agree at 14.
  const std::string csv_path = g_tmpdir + "/star.csv";
  RunResult r = run_cli(
      "experiment --trials 1 --nmax 4 --wmin 2 --wmax 7 --seed 5 "
      "--with-oracle --output " + csv_path);
  REQUIRE(r.code == 0);
  const std::string csv = slurp(csv_path);
  CHECK(csv.find("0,5,4,3,3,7;5;2,14,14,14,14,alg1,14,ok") !=
        std::string::npos);
}

TEST_CASE("MEC_ORACLE_BUDGET environment variable caps the oracle") {
  const std::string inst = g_tmpdir + "/path.mec";
  spit(inst, kHeavyLightPath);
  RunResult r = run_cli("solve --input " + inst + " --alg exact",
                        "MEC_ORACLE_BUDGET=2 ");
  CHECK(r.code == 3);
  // An explicit flag takes precedence over the environment.
  RunResult ok = run_cli("solve --input " + inst +
                             " --alg exact --budget 100000",
                         "MEC_ORACLE_BUDGET=2 ");
  CHECK(ok.code == 0);
}

TEST_CASE("experiment summary ratios match recomputation from the rows") {
  const std::string csv_path = g_tmpdir + "/recompute.csv";
  RunResult r = run_cli(
      "experiment --trials 40 --nmax 9 --wmin 1 --wmax 5 --seed 31 "
      "--with-oracle --output " + csv_path);
  REQUIRE(r.code == 0);
  json summary = json::parse(r.out);
  CHECK(summary["violations"] == 0);

  std::istringstream csv(slurp(csv_path));
  std::string line;
  std::getline(csv, line);  // header
  double max_opt = 0, sum_opt = 0, max_lb = 0, sum_lb = 0;
  int rows = 0, oracle_rows = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');)
      cells.push_back(cell);
    REQUIRE(cells.size() >= 16);
    const double lb = std::stod(cells[6]);
    const double w_best = std::stod(cells[9]);
    max_lb = std::max(max_lb, w_best / lb);
    sum_lb += w_best / lb;
    ++rows;
    if (cells[12] == "ok") {
      const double opt = std::stod(cells[11]);
      max_opt = std::max(max_opt, w_best / opt);
      sum_opt += w_best / opt;
      ++oracle_rows;
    }
  }
  REQUIRE(rows == 40);
  REQUIRE(oracle_rows == 40);
  CHECK(summary["max_ratio_vs_opt"].get<double>() ==
        doctest::Approx(max_opt).epsilon(1e-9));
  CHECK(summary["mean_ratio_vs_opt"].get<double>() ==
        doctest::Approx(sum_opt / oracle_rows).epsilon(1e-9));
  CHECK(summary["max_ratio_vs_lb"].get<double>() ==
        doctest::Approx(max_lb).epsilon(1e-9));
  CHECK(summary["mean_ratio_vs_lb"].get<double>() ==
        doctest::Approx(sum_lb / rows).epsilon(1e-9));
}

TEST_CASE("experiment rejects oracle runs beyond the size cap") {
  RunResult r = run_cli(
      "experiment --trials 1 --nmax 20 --with-oracle --output " + g_tmpdir +
      "/never.csv");
  CHECK(r.code == 64);
}

TEST_CASE("search with a single level reports ratio 1 and is reproducible") {
  const std::string out_a = g_tmpdir + "/search_a.json";
  const std::string out_b = g_tmpdir + "/search_b.json";
  const std::string args =
      "search --max-edges 3 --levels 1 --budget 500 --seed 5 --output ";
  REQUIRE(run_cli(args + out_a).code == 0);
  REQUIRE(run_cli(args + out_b).code == 0);
  CHECK(slurp(out_a) == slurp(out_b));

  json report = json::parse(slurp(out_a));
  REQUIRE(!report["witness"].is_null());
  CHECK(report["witness"]["ratio"]["num"] == report["witness"]["ratio"]["den"]);
  CHECK(report["space_exhausted"] == true);
}

TEST_CASE("search with budget zero warns and exits 0") {
  RunResult r = run_cli("search --max-edges 4 --levels 1,2 --budget 0");
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  json report = json::parse(r.out);
  CHECK(report["witness"].is_null());
  CHECK(report["evaluated"] == 0);
}

TEST_CASE("verify accepts a valid solution and rejects a tampered one") {
  const std::string inst = g_tmpdir + "/path.mec";
  const std::string good = g_tmpdir + "/good.sol";
  const std::string bad = g_tmpdir + "/bad.sol";
  const std::string unparseable = g_tmpdir + "/unparseable.sol";
  spit(inst, kHeavyLightPath);
  spit(good, "0 3\n1\n2\n");
  spit(bad, "0 1\n2\n3\n");
  spit(unparseable, "0 99\n");

  RunResult ok = run_cli("verify --input " + inst + " --solution " + good +
                         " --with-oracle --format json");
  REQUIRE(ok.code == 0);
  json report = json::parse(ok.out);
  CHECK(report["valid"] == true);
  CHECK(report["ok"] == true);
  CHECK(report["opt"] == 102);
  CHECK(report["checks"]["weight_ge_opt"] == true);

  RunResult tampered =
      run_cli("verify --input " + inst + " --solution " + bad);
  CHECK(tampered.code == 5);

  RunResult parse_fail =
      run_cli("verify --input " + inst + " --solution " + unparseable);
  CHECK(parse_fail.code == 1);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run_cli("solve").code == 64);
  CHECK(run_cli("frobnicate").code == 64);
  CHECK(run_cli("experiment --trials 0 --output x.csv").code == 64);
}

int run_all(int argc, char** argv) {
  doctest::Context context(argc, argv);
  return context.run();
}

int main(int argc, char** argv) {
  std::vector<char*> doctest_args{argv[0]};
  int first = 1;
  if (argc > 1 && argv[1][0] != '-') {
    g_cli = argv[1];
    first = 2;
  }
  for (int i = first; i < argc; ++i) doctest_args.push_back(argv[i]);
  if (g_cli.empty()) {
    std::fprintf(stderr,
                 "usage: mec_cli_tests <path-to-mec-cli> [doctest args]\n");
    return 1;
  }
  char tmpl[] = "/tmp/mec_cli_test_XXXXXX";
  const char* dir = mkdtemp(tmpl);
  if (!dir) {
    std::perror("mkdtemp");
    return 1;
  }
  g_tmpdir = dir;
  return run_all(static_cast<int>(doctest_args.size()), doctest_args.data());
}
