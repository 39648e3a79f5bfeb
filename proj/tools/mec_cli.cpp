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

// Command-line front end for libmec: solve single instances, generate
// instances, run batch ratio experiments, search for hard instances, and
// verify instance/solution pairs. Uses only the public C API.

#include <algorithm>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mec.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNotATree = 2;
constexpr int kExitBudget = 3;
constexpr int kExitFalsified = 4;
constexpr int kExitVerifyFailed = 5;
constexpr int kExitUsage = 64;

struct GraphDeleter {
  void operator()(mec_graph* g) const { mec_graph_free(g); }
};
struct SolutionDeleter {
  void operator()(mec_solution* s) const { mec_solution_free(s); }
};
struct ProfileDeleter {
  void operator()(mec_profile* p) const { mec_profile_free(p); }
};
struct CertificateDeleter {
  void operator()(mec_certificate* c) const { mec_certificate_free(c); }
};
struct SearchDeleter {
  void operator()(mec_search_result* r) const { mec_search_result_free(r); }
};
using GraphPtr = std::unique_ptr<mec_graph, GraphDeleter>;
using SolutionPtr = std::unique_ptr<mec_solution, SolutionDeleter>;
using ProfilePtr = std::unique_ptr<mec_profile, ProfileDeleter>;
using CertificatePtr = std::unique_ptr<mec_certificate, CertificateDeleter>;
using SearchPtr = std::unique_ptr<mec_search_result, SearchDeleter>;

std::string api_string(char* s) {
  std::string out = s ? s : "";
  mec_string_free(s);
  return out;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return false;
  std::ostringstream buf;
  buf << file.rdbuf();
  out = buf.str();
  return true;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) return false;
  file << content;
  return file.good();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t oracle_budget_or_default(std::uint64_t flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("MEC_ORACLE_BUDGET")) {
    char* end = nullptr;
    std::uint64_t parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
    std::cerr << "warning: ignoring unparseable MEC_ORACLE_BUDGET\n";
  }
  return MEC_DEFAULT_ORACLE_BUDGET;
}

std::string format_ratio(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

json classes_to_json(const mec_solution* sol) {
  json classes = json::array();
  for (std::uint32_t c = 0; c < mec_solution_class_count(sol); ++c) {
    json edges = json::array();
    for (std::uint32_t i = 0; i < mec_solution_class_size(sol, c); ++i)
      edges.push_back(mec_solution_class_edge(sol, c, i));
    classes.push_back(
        {{"weight", mec_solution_class_weight(sol, c)}, {"edges", edges}});
  }
  return classes;
}

json profile_to_json(const mec_profile* profile) {
  json y = json::array();
  for (std::uint32_t i = 1; i <= mec_profile_delta(profile); ++i)
    y.push_back(mec_profile_rank_weight(profile, i));
  return y;
}

void print_classes_text(std::ostream& out, const mec_solution* sol) {
  for (std::uint32_t c = 0; c < mec_solution_class_count(sol); ++c) {
    out << "class " << (c + 1) << " (weight "
        << mec_solution_class_weight(sol, c) << "): edges";
    for (std::uint32_t i = 0; i < mec_solution_class_size(sol, c); ++i)
      out << ' ' << mec_solution_class_edge(sol, c, i);
    out << '\n';
  }
}

int load_instance(const std::string& path, GraphPtr& out) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitParse;
  }
  mec_graph* raw = nullptr;
  if (mec_graph_parse(text.c_str(), &raw) != MEC_OK) {
    std::cerr << "error: " << path << ": " << mec_last_error() << "\n";
    return kExitParse;
  }
  out.reset(raw);
  return kExitOk;
}

// ---- solve ----------------------------------------------------------------

struct SolveOptions {
  std::string input;
  std::string algorithm = "best";
  std::uint32_t root = 0;
  std::string format = "text";
  std::string output;
  std::uint64_t budget = 0;
};

int run_solve(const SolveOptions& opt) {
  GraphPtr graph;
  if (int rc = load_instance(opt.input, graph)) return rc;

  const std::uint32_t n = mec_graph_vertex_count(graph.get());
  const std::uint32_t m = mec_graph_edge_count(graph.get());

  mec_profile* profile_raw = nullptr;
  mec_rank_profile(graph.get(), &profile_raw);
  ProfilePtr profile(profile_raw);

  json report;
  report["instance"] = {{"n", n},
                        {"m", m},
                        {"delta", mec_graph_max_degree(graph.get())}};
  report["algorithm"] = opt.algorithm;

  SolutionPtr solution;
  CertificatePtr certificate;
  int exit_code = kExitOk;

  if (opt.algorithm == "exact") {
    mec_certificate* cert_raw = nullptr;
    mec_status st = mec_solve_exact(
        graph.get(), oracle_budget_or_default(opt.budget), &cert_raw);
    certificate.reset(cert_raw);
    if (st != MEC_OK && st != MEC_ERR_BUDGET_EXCEEDED) {
      std::cerr << "error: " << mec_last_error() << "\n";
      return kExitUsage;
    }
    if (st == MEC_ERR_BUDGET_EXCEEDED) {
      std::cerr << "error: " << mec_last_error()
                << " (best incumbent reported, not proven optimal)\n";
      exit_code = kExitBudget;
    }
    report["exact"] = {
        {"opt", mec_certificate_opt(certificate.get())},
        {"classes", mec_certificate_class_count(certificate.get())},
        {"nodes", mec_certificate_nodes(certificate.get())},
        {"optimal", mec_certificate_is_optimal(certificate.get()) == 1}};
    report["total_weight"] = mec_certificate_opt(certificate.get());
    report["classes"] =
        classes_to_json(mec_certificate_solution(certificate.get()));
  } else {
    mec_algorithm alg = MEC_ALG_BEST;
    if (opt.algorithm == "alg1") alg = MEC_ALG_ALG1;
    if (opt.algorithm == "kk") alg = MEC_ALG_KK;

    if (alg != MEC_ALG_KK) {
      if (opt.root >= n && !(n == 0 && opt.root == 0)) {
        std::cerr << "error: root " << opt.root << " out of range\n";
        return kExitNotATree;
      }
      if (mec_graph_check_tree(graph.get(), opt.root) != MEC_OK) {
        std::cerr << "error: " << mec_last_error() << "\n";
        return kExitNotATree;
      }
      report["root"] = opt.root;
    }
    mec_solution* sol_raw = nullptr;
    if (mec_solve(graph.get(), alg, opt.root, &sol_raw) != MEC_OK) {
      std::cerr << "error: " << mec_last_error() << "\n";
      return kExitNotATree;
    }
    solution.reset(sol_raw);
    if (alg == MEC_ALG_BEST)
      report["chosen"] =
          mec_solution_algorithm(solution.get()) == MEC_ALG_ALG1 ? "alg1"
                                                                 : "kk";
    report["total_weight"] = mec_solution_total_weight(solution.get());
    report["classes"] = classes_to_json(solution.get());
  }

  report["rank_profile"] = profile_to_json(profile.get());
  report["lower_bound"] = mec_lower_bound(graph.get());

  std::string rendered;
  if (opt.format == "json") {
    rendered = report.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "instance: n=" << n << " m=" << m
        << " delta=" << mec_graph_max_degree(graph.get()) << '\n';
    out << "algorithm: " << opt.algorithm;
    if (report.contains("chosen"))
      out << " (chose " << report["chosen"].get<std::string>() << ")";
    out << '\n';
    out << "total weight: " << report["total_weight"].get<std::uint64_t>()
        << '\n';
    const mec_solution* printable =
        certificate ? mec_certificate_solution(certificate.get())
                    : solution.get();
    print_classes_text(out, printable);
    if (certificate) {
      out << "oracle nodes: " << mec_certificate_nodes(certificate.get())
          << (mec_certificate_is_optimal(certificate.get())
                  ? " (optimal)\n"
                  : " (budget exceeded, incumbent)\n");
    }
    out << "rank profile:";
    for (std::uint32_t i = 1; i <= mec_profile_delta(profile.get()); ++i)
      out << ' ' << mec_profile_rank_weight(profile.get(), i);
    out << '\n';
    out << "lower bound: " << mec_lower_bound(graph.get()) << '\n';
    rendered = out.str();
  }

  if (!write_output(opt.output, rendered)) {
    std::cerr << "error: cannot write " << opt.output << "\n";
    return kExitUsage;
  }
  return exit_code;
}

// ---- gen ------------------------------------------------------------------

struct GenOptions {
  std::string family;
  std::uint32_t n = 10;
  std::uint64_t wmin = 1;
  std::uint64_t wmax = 100;
  std::uint64_t seed = 0;
  std::uint64_t big_c = 10000;
  std::uint64_t eps = 1;
  std::string output;
};

int run_gen(const GenOptions& opt) {
  mec_graph* raw = nullptr;
  mec_status st;
  if (opt.family == "random") {
    st = mec_gen_random_tree(opt.n, opt.wmin, opt.wmax, opt.seed, &raw);
  } else {
    st = mec_gen_alg1_worst(opt.big_c, opt.eps, &raw);
  }
  if (st != MEC_OK) {
    std::cerr << "error: " << mec_last_error() << "\n";
    return kExitUsage;
  }
  GraphPtr graph(raw);
  std::string text = api_string(mec_graph_serialize(graph.get()));
  if (!write_output(opt.output, text)) {
    std::cerr << "error: cannot write " << opt.output << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---- experiment -------------------------------------------------------------

struct ExperimentOptions {
  std::uint64_t trials = 0;
  std::uint32_t nmax = 9;
  std::uint64_t wmin = 1;
  std::uint64_t wmax = 1000000;
  std::uint64_t seed = 0;
  bool with_oracle = false;
  std::uint64_t budget = 0;
  std::string output;
};

const char kCsvHeader[] =
    "trial,seed,n,m,delta,y_profile,lower_bound,w_alg1,w_kk,w_best,"
    "best_algorithm,opt,oracle_status,oracle_nodes,ratio_best_vs_opt,"
    "ratio_best_vs_lb,ranks_dominated_ok,class_count_ok,weight_chain_ok,"
    "kk_bound_ok,alg1_bound_ok,combined_bound_ok,bounds_ok";

int run_experiment(const ExperimentOptions& opt) {
  if (opt.with_oracle && opt.nmax > 10) {
    std::cerr << "error: --with-oracle caps instances at 9 edges; "
                 "use --nmax <= 10\n";
    return kExitUsage;
  }
  const std::uint64_t oracle_budget = oracle_budget_or_default(opt.budget);

  std::string csv = kCsvHeader;
  csv += '\n';

  std::uint64_t violations = 0;
  std::uint64_t oracle_skipped = 0;
  std::uint64_t oracle_rows = 0;
  // Ratio aggregates as exact integer pairs; reduced to doubles at the end.
  double max_ratio_opt = 0.0, sum_ratio_opt = 0.0;
  double max_ratio_lb = 0.0, sum_ratio_lb = 0.0;

  for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
    const std::uint64_t sub_seed = opt.seed ^ trial;
    const std::uint64_t draw = splitmix64(sub_seed);
    const std::uint32_t n =
        opt.nmax <= 2 ? 2
                      : 2 + static_cast<std::uint32_t>(draw % (opt.nmax - 1));
    const std::uint64_t tree_seed = splitmix64(draw);

    mec_graph* graph_raw = nullptr;
    if (mec_gen_random_tree(n, opt.wmin, opt.wmax, tree_seed, &graph_raw) !=
        MEC_OK) {
      std::cerr << "error: " << mec_last_error() << "\n";
      return kExitUsage;
    }
    GraphPtr graph(graph_raw);
    const std::uint32_t m = mec_graph_edge_count(graph.get());
    const std::uint32_t delta = mec_graph_max_degree(graph.get());

    mec_profile* profile_raw = nullptr;
    mec_rank_profile(graph.get(), &profile_raw);
    ProfilePtr profile(profile_raw);
    const std::uint64_t lb = mec_lower_bound(graph.get());

    mec_solution* alg1_raw = nullptr;
    mec_solve(graph.get(), MEC_ALG_ALG1, 0, &alg1_raw);
    SolutionPtr alg1(alg1_raw);
    mec_solution* kk_raw = nullptr;
    mec_solve(graph.get(), MEC_ALG_KK, 0, &kk_raw);
    SolutionPtr kk(kk_raw);

    const std::uint64_t w_alg1 = mec_solution_total_weight(alg1.get());
    const std::uint64_t w_kk = mec_solution_total_weight(kk.get());
    const std::uint64_t w_best = std::min(w_alg1, w_kk);
    const char* best_algorithm = (w_alg1 <= w_kk) ? "alg1" : "kk";

    // Checks that need no oracle.
    const bool class_count_ok = mec_solution_class_count(alg1.get()) == delta;
    bool weight_chain_ok = true;
    {
      std::vector<std::uint64_t> weights;
      for (std::uint32_t c = 0; c < mec_solution_class_count(alg1.get()); ++c)
        weights.push_back(mec_solution_class_weight(alg1.get(), c));
      std::sort(weights.rbegin(), weights.rend());
      for (std::size_t i = 0; i < weights.size(); ++i) {
        const std::uint32_t rank = (i == 0) ? 1 : static_cast<std::uint32_t>(i);
        if (weights[i] > mec_profile_rank_weight(profile.get(), rank))
          weight_chain_ok = false;
      }
    }

    std::string opt_cell, nodes_cell, ratio_opt_cell;
    std::string oracle_status = "off";
    std::string ranks_cell, kk_bound_cell, alg1_bound_cell,
        combined_bound_cell, bounds_cell;

    if (opt.with_oracle) {
      mec_certificate* cert_raw = nullptr;
      mec_status st = mec_solve_exact(graph.get(), oracle_budget, &cert_raw);
      CertificatePtr certificate(cert_raw);
      if (st == MEC_ERR_BUDGET_EXCEEDED) {
        oracle_status = "skipped";
        ++oracle_skipped;
      } else if (st != MEC_OK) {
        std::cerr << "error: " << mec_last_error() << "\n";
        return kExitUsage;
      } else {
        oracle_status = "ok";
        ++oracle_rows;
        const std::uint64_t opt_w = mec_certificate_opt(certificate.get());
        const std::uint32_t s_star =
            mec_certificate_class_count(certificate.get());
        const mec_solution* opt_sol =
            mec_certificate_solution(certificate.get());
        const std::uint64_t w1_star = mec_solution_class_weight(opt_sol, 0);
        const std::uint64_t wdelta_star =
            delta >= 1 && delta <= s_star
                ? mec_solution_class_weight(opt_sol, delta - 1)
                : 0;

        int ranks_dominated = 0;
        mec_certificate_check(graph.get(), certificate.get(), nullptr,
                              &ranks_dominated,
                              nullptr);
        const bool kk_bound = w_kk + w1_star <= 2 * opt_w;
        const bool alg1_bound = w_alg1 + wdelta_star <= opt_w + w1_star;
        const bool combined_bound = 2 * w_best <= 3 * opt_w;
        const bool bounds = lb <= opt_w && opt_w <= w_best;

        opt_cell = std::to_string(opt_w);
        nodes_cell =
            std::to_string(mec_certificate_nodes(certificate.get()));
        const double ratio_opt =
            static_cast<double>(w_best) / static_cast<double>(opt_w);
        ratio_opt_cell = format_ratio(ratio_opt);
        max_ratio_opt = std::max(max_ratio_opt, ratio_opt);
        sum_ratio_opt += ratio_opt;

        ranks_cell = ranks_dominated ? "1" : "0";
        kk_bound_cell = kk_bound ? "1" : "0";
        alg1_bound_cell = alg1_bound ? "1" : "0";
        combined_bound_cell = combined_bound ? "1" : "0";
        bounds_cell = bounds ? "1" : "0";
        violations += !ranks_dominated + !kk_bound + !alg1_bound +
                      !combined_bound + !bounds;
      }
    }
    violations += !class_count_ok + !weight_chain_ok;

    const double ratio_lb =
        static_cast<double>(w_best) / static_cast<double>(lb);
    max_ratio_lb = std::max(max_ratio_lb, ratio_lb);
    sum_ratio_lb += ratio_lb;

    std::string y_cell;
    for (std::uint32_t i = 1; i <= mec_profile_delta(profile.get()); ++i) {
      if (i > 1) y_cell += ';';
      y_cell += std::to_string(mec_profile_rank_weight(profile.get(), i));
    }

    csv += std::to_string(trial);
    csv += ',';
    csv += std::to_string(sub_seed);
    csv += ',';
    csv += std::to_string(n);
    csv += ',';
    csv += std::to_string(m);
    csv += ',';
    csv += std::to_string(delta);
    csv += ',';
    csv += y_cell;
    csv += ',';
    csv += std::to_string(lb);
    csv += ',';
    csv += std::to_string(w_alg1);
    csv += ',';
    csv += std::to_string(w_kk);
    csv += ',';
    csv += std::to_string(w_best);
    csv += ',';
    csv += best_algorithm;
    csv += ',';
    csv += opt_cell;
    csv += ',';
    csv += oracle_status;
    csv += ',';
    csv += nodes_cell;
    csv += ',';
    csv += ratio_opt_cell;
    csv += ',';
    csv += format_ratio(ratio_lb);
    csv += ',';
    csv += ranks_cell;
    csv += ',';
    csv += class_count_ok ? "1" : "0";
    csv += ',';
    csv += weight_chain_ok ? "1" : "0";
    csv += ',';
    csv += kk_bound_cell;
    csv += ',';
    csv += alg1_bound_cell;
    csv += ',';
    csv += combined_bound_cell;
    csv += ',';
    csv += bounds_cell;
    csv += '\n';
  }

  if (!write_output(opt.output, csv)) {
    std::cerr << "error: cannot write " << opt.output << "\n";
    return kExitUsage;
  }

  json summary;
  summary["trials"] = opt.trials;
  summary["seed"] = opt.seed;
  summary["nmax"] = opt.nmax;
  summary["wmin"] = opt.wmin;
  summary["wmax"] = opt.wmax;
  summary["with_oracle"] = opt.with_oracle;
  summary["violations"] = violations;
  summary["oracle_skipped"] = oracle_skipped;
  if (oracle_rows > 0) {
    summary["max_ratio_vs_opt"] = max_ratio_opt;
    summary["mean_ratio_vs_opt"] =
        sum_ratio_opt / static_cast<double>(oracle_rows);
  }
  if (opt.trials > 0) {
    summary["max_ratio_vs_lb"] = max_ratio_lb;
    summary["mean_ratio_vs_lb"] =
        sum_ratio_lb / static_cast<double>(opt.trials);
  }
  std::cout << summary.dump(2) << "\n";

  return violations > 0 ? kExitFalsified : kExitOk;
}

// ---- search -----------------------------------------------------------------

struct SearchOptions {
  std::uint32_t max_edges = 10;
  std::vector<std::uint64_t> levels;
  std::uint64_t budget = 200000;
  std::uint64_t seed = 1;
  std::uint64_t oracle_budget = 0;
  std::string output;
};

json solution_summary(const mec_solution* sol) {
  return {{"total", mec_solution_total_weight(sol)},
          {"classes", classes_to_json(sol)}};
}

int run_search(const SearchOptions& opt) {
  mec_search_result* raw = nullptr;
  mec_status st = mec_search_combined_worst(
      opt.max_edges, opt.levels.data(),
      static_cast<std::uint32_t>(opt.levels.size()), opt.budget, opt.seed,
      oracle_budget_or_default(opt.oracle_budget), &raw);
  if (st != MEC_OK) {
    std::cerr << "error: " << mec_last_error() << "\n";
    return kExitUsage;
  }
  SearchPtr result(raw);

  json report;
  report["params"] = {{"max_edges", opt.max_edges},
                      {"levels", opt.levels},
                      {"budget", opt.budget},
                      {"seed", opt.seed}};
  report["evaluated"] = mec_search_result_evaluated(result.get());
  report["space_exhausted"] =
      mec_search_result_space_exhausted(result.get()) == 1;
  report["oracle_skipped"] = mec_search_result_oracle_skipped(result.get());

  bool falsified = false;
  if (mec_search_result_has_witness(result.get())) {
    const std::uint64_t combined =
        mec_search_result_combined_weight(result.get());
    const std::uint64_t opt_w = mec_search_result_opt(result.get());
    falsified = 2 * combined > 3 * opt_w;

    const mec_certificate* cert =
        mec_search_result_certificate(result.get());
    json witness;
    witness["instance"] = api_string(mec_graph_serialize(
        mec_search_result_instance(result.get())));
    witness["combined_weight"] = combined;
    witness["opt"] = opt_w;
    witness["ratio"] = {{"num", combined},
                        {"den", opt_w},
                        {"value", mec_search_result_ratio(result.get())}};
    witness["alg1"] = solution_summary(mec_search_result_alg1(result.get()));
    witness["alg1"]["root"] = mec_search_result_alg1_root(result.get());
    witness["kk"] = solution_summary(mec_search_result_kk(result.get()));
    witness["optimal"] = solution_summary(mec_certificate_solution(cert));
    witness["optimal"]["nodes"] = mec_certificate_nodes(cert);
    report["witness"] = witness;
  } else {
    report["witness"] = nullptr;
  }

  std::string rendered = report.dump(2) + "\n";
  std::string out_path = opt.output;
  if (falsified && out_path.empty()) out_path = "mec_falsification.json";
  if (!write_output(out_path, rendered)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }

  if (falsified) {
    std::cerr << "error: combined ratio exceeds 3/2; counterexample saved"
              << (out_path.empty() ? "" : " to " + out_path) << "\n";
    return kExitFalsified;
  }
  if (!mec_search_result_has_witness(result.get()))
    std::cerr << "warning: no candidate evaluated (budget too small); "
                 "best-effort output\n";
  else if (!mec_search_result_space_exhausted(result.get()))
    std::cerr << "warning: candidate budget did not cover the full space; "
                 "result is a sampled maximum\n";
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyOptions {
  std::string input;
  std::string solution;
  std::string format = "text";
  bool with_oracle = false;
  std::uint64_t budget = 0;
};

int run_verify(const VerifyOptions& opt) {
  GraphPtr graph;
  if (int rc = load_instance(opt.input, graph)) return rc;

  std::string sol_text;
  if (!read_input(opt.solution, sol_text)) {
    std::cerr << "error: cannot read " << opt.solution << "\n";
    return kExitParse;
  }
  mec_solution* sol_raw = nullptr;
  if (mec_solution_parse(graph.get(), sol_text.c_str(), &sol_raw) != MEC_OK) {
    std::cerr << "error: " << opt.solution << ": " << mec_last_error()
              << "\n";
    return kExitParse;
  }
  SolutionPtr solution(sol_raw);

  json report;
  report["instance"] = {{"n", mec_graph_vertex_count(graph.get())},
                        {"m", mec_graph_edge_count(graph.get())},
                        {"delta", mec_graph_max_degree(graph.get())}};

  bool all_ok = true;
  const bool valid =
      mec_solution_validate(graph.get(), solution.get()) == MEC_OK;
  report["valid"] = valid;
  if (!valid) {
    report["violation"] = mec_last_error();
    all_ok = false;
  }

  const std::uint64_t total = mec_solution_total_weight(solution.get());
  const std::uint64_t lb = mec_lower_bound(graph.get());
  report["total_weight"] = total;
  report["lower_bound"] = lb;

  mec_profile* profile_raw = nullptr;
  mec_rank_profile(graph.get(), &profile_raw);
  ProfilePtr profile(profile_raw);
  report["rank_profile"] = profile_to_json(profile.get());

  json checks;
  if (valid) {
    const bool lb_ok = total >= lb;
    checks["weight_ge_lower_bound"] = lb_ok;
    all_ok = all_ok && lb_ok;
  }

  if (valid && opt.with_oracle) {
    mec_certificate* cert_raw = nullptr;
    mec_status st = mec_solve_exact(
        graph.get(), oracle_budget_or_default(opt.budget), &cert_raw);
    CertificatePtr certificate(cert_raw);
    if (st == MEC_ERR_BUDGET_EXCEEDED) {
      std::cerr << "error: " << mec_last_error() << "\n";
      return kExitBudget;
    }
    if (st != MEC_OK) {
      std::cerr << "error: " << mec_last_error() << "\n";
      return kExitUsage;
    }
    const std::uint64_t opt_w = mec_certificate_opt(certificate.get());
    report["opt"] = opt_w;
    checks["weight_ge_opt"] = total >= opt_w;
    int cert_valid = 0, ranks = 0, lb_le_opt = 0;
    mec_certificate_check(graph.get(), certificate.get(), &cert_valid, &ranks,
                          &lb_le_opt);
    checks["certificate_valid"] = cert_valid == 1;
    checks["ranks_dominated"] = ranks == 1;
    checks["opt_ge_lower_bound"] = lb_le_opt == 1;
    const double ratio =
        static_cast<double>(total) / static_cast<double>(opt_w);
    report["ratio_vs_opt"] = ratio;
    all_ok = all_ok && total >= opt_w && cert_valid && ranks && lb_le_opt;
  }
  report["checks"] = checks;
  report["ok"] = all_ok;

  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << (valid ? "solution: valid" : "solution: INVALID") << '\n';
    if (!valid)
      std::cout << "violation: " << report["violation"].get<std::string>()
                << '\n';
    std::cout << "total weight: " << total << '\n';
    std::cout << "lower bound: " << lb << '\n';
    if (report.contains("opt"))
      std::cout << "opt: " << report["opt"].get<std::uint64_t>() << " (ratio "
                << format_ratio(report["ratio_vs_opt"].get<double>()) << ")"
                << '\n';
    std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << '\n';
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mec: max edge coloring solver and experiment toolkit"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "solve a single instance");
  solve->add_option("--input", solve_opt.input,
                    "instance file ('-' for stdin)")
      ->required();
  solve->add_option("--alg", solve_opt.algorithm, "algorithm")
      ->check(CLI::IsMember({"alg1", "kk", "best", "exact"}));
  solve->add_option("--root", solve_opt.root, "root vertex for alg1/best");
  solve->add_option("--format", solve_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--output", solve_opt.output, "write report to file");
  solve->add_option("--budget", solve_opt.budget,
                    "oracle node budget (exact)");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", gen_opt.family, "instance family")
      ->check(CLI::IsMember({"random", "alg1-worst"}))
      ->required();
  gen->add_option("--n", gen_opt.n, "vertex count (random)");
  gen->add_option("--wmin", gen_opt.wmin, "minimum weight (random)");
  gen->add_option("--wmax", gen_opt.wmax, "maximum weight (random)");
  gen->add_option("--seed", gen_opt.seed, "random seed");
  gen->add_option("--C", gen_opt.big_c, "heavy weight (alg1-worst)");
  gen->add_option("--eps", gen_opt.eps, "light weight (alg1-worst)");
  gen->add_option("--output", gen_opt.output, "write instance to file");

  ExperimentOptions exp_opt;
  auto* experiment =
      app.add_subcommand("experiment", "batch ratio experiment over random trees");
  experiment->add_option("--trials", exp_opt.trials, "number of instances")
      ->required()
      ->check(CLI::PositiveNumber);
  experiment->add_option("--nmax", exp_opt.nmax, "vertex count range [2,nmax]")
      ->check(CLI::Range(2u, 1000000u));
  experiment->add_option("--wmin", exp_opt.wmin, "minimum weight");
  experiment->add_option("--wmax", exp_opt.wmax, "maximum weight");
  experiment->add_option("--seed", exp_opt.seed, "campaign seed");
  experiment->add_flag("--with-oracle", exp_opt.with_oracle,
                       "solve every instance exactly (nmax <= 10)");
  experiment->add_option("--budget", exp_opt.budget, "oracle node budget");
  experiment->add_option("--output", exp_opt.output, "CSV output path")
      ->required();

  SearchOptions search_opt;
  auto* search =
      app.add_subcommand("search", "search for hard instances for the combined algorithm");
  search->add_option("--max-edges", search_opt.max_edges, "largest tree size")
      ->check(CLI::Range(1u, 16u));
  search->add_option("--levels", search_opt.levels, "weight levels")
      ->required()
      ->delimiter(',');
  search->add_option("--budget", search_opt.budget,
                     "candidate evaluation budget");
  search->add_option("--seed", search_opt.seed, "sampling seed");
  search->add_option("--oracle-budget", search_opt.oracle_budget,
                     "oracle node budget per candidate");
  search->add_option("--output", search_opt.output,
                     "certificate JSON output path");

  VerifyOptions verify_opt;
  auto* verify =
      app.add_subcommand("verify", "validate a solution file against an instance");
  verify->add_option("--input", verify_opt.input, "instance file")->required();
  verify->add_option("--solution", verify_opt.solution, "solution file")
      ->required();
  verify->add_option("--format", verify_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--with-oracle", verify_opt.with_oracle,
                   "also compare against the exact optimum");
  verify->add_option("--budget", verify_opt.budget, "oracle node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*solve) return run_solve(solve_opt);
  if (*gen) return run_gen(gen_opt);
  if (*experiment) return run_experiment(exp_opt);
  if (*search) return run_search(search_opt);
  if (*verify) return run_verify(verify_opt);
  return kExitUsage;
}
