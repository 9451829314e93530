// Command-line front end: check | solve | factor | generate | verify | explore.
// Exit codes: 0 success/verified, 1 counterexample or open-problem candidate
// found, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hamlab/conditions.hpp"
#include "hamlab/connectivity.hpp"
#include "hamlab/cycle_factor.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/families.hpp"
#include "hamlab/harness.hpp"
#include "hamlab/version.hpp"

namespace {

using namespace hamlab;

Digraph load_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Digraph::parse(buffer.str());
}

int env_threads() {
  const char* v = std::getenv("HAMLAB_THREADS");
  if (!v) return 1;
  int t = std::atoi(v);
  return t >= 1 ? t : 1;
}

std::string join_vertices(const std::vector<int>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

void print_certificate(const std::optional<CycleCertificate>& c) {
  if (!c) {
    std::cout << "none\n";
    return;
  }
  std::cout << "cycle (length " << c->length() << "): "
            << join_vertices(c->vertices) << "\n";
}

int report_and_exit_code(const VerificationReport& report,
                         const std::string& report_path) {
  std::cout << report.theorem_id << ": examined " << report.digraphs_examined
            << ", hypothesis hits " << report.hypothesis_hits << ", "
            << (report.exploration ? "open-problem candidates "
                                   : "conclusion failures ")
            << report.conclusion_failures.size() << " (" << report.runtime_ms
            << " ms)\n";
  if (report.vacuous)
    std::cout << "warning: hypothesis class empty on this scope -- "
                 "vacuous run, no evidence either way\n";
  if (!report.notes.empty()) std::cout << report.notes << "\n";
  for (const auto& f : report.conclusion_failures) {
    std::cout << (report.exploration ? "open-problem candidate"
                                     : "conclusion failure")
              << ": " << f.detail << "\n"
              << f.digraph;
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out)
      throw std::invalid_argument("cannot write report file '" + report_path +
                                  "'");
    out << report.to_json_string() << "\n";
  }
  return report.conclusion_failures.empty() ? 0 : 1;
}

int write_reports(const std::vector<VerificationReport>& reports,
                  const std::string& report_path) {
  if (reports.size() == 1) return report_and_exit_code(reports[0], report_path);
  int code = 0;
  for (const auto& r : reports)
    if (report_and_exit_code(r, "") != 0) code = 1;
  if (!report_path.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    std::ofstream out(report_path);
    if (!out)
      throw std::invalid_argument("cannot write report file '" + report_path +
                                  "'");
    out << arr.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamlab: degree conditions, exact cycle solvers, and "
               "theorem verification for loop-free digraphs"};
  app.set_version_flag("--version", hamlab::kToolVersion);
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "evaluate a named degree condition");
  std::string check_input, check_condition;
  check->add_option("--input", check_input, "digraph file (DG/DGA)")->required();
  check->add_option("--condition", check_condition,
                    "condition id (e.g. condition_m, meyniel)")->required();

  auto* solve = app.add_subcommand("solve", "exact cycle computations");
  std::string solve_input, solve_op = "hamiltonian";
  int solve_x = -1, solve_y = -1, solve_through = -1, solve_avoiding = -1;
  int dp_threshold = 16;
  solve->add_option("--input", solve_input, "digraph file")->required();
  solve->add_option("--op", solve_op, "hamiltonian | pair | longest | profile");
  solve->add_option("--x", solve_x, "first vertex (op=pair)");
  solve->add_option("--y", solve_y, "second vertex (op=pair)");
  solve->add_option("--through", solve_through, "vertex constraint (op=longest)");
  solve->add_option("--avoiding", solve_avoiding,
                    "vertex constraint (op=longest)");
  solve->add_option("--dp-threshold", dp_threshold,
                    "max order for subset DP (default 16)");

  auto* factor = app.add_subcommand(
      "factor", "cycle factor or the partition witness ruling one out");
  std::string factor_input;
  factor->add_option("--input", factor_input, "digraph file")->required();

  auto* gen = app.add_subcommand("generate", "emit a named family member");
  std::string gen_family, gen_out;
  gen->add_option("--family", gen_family,
                  "family spec, e.g. phi:n=8,m=6 or complete:n=4")->required();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  auto add_scope_flags = [](CLI::App* cmd, std::string& mode, int& n,
                            int& n_max, uint64_t& samples, uint64_t& seed,
                            int& pair_budget, std::string& report,
                            std::string& out_dir, int& threads,
                            std::vector<std::string>& prefilter) {
    cmd->add_option("--n", n, "order (start of range)")->required();
    cmd->add_option("--n-max", n_max, "end of order range (inclusive)");
    cmd->add_option("--mode", mode, "exhaustive | complement | sampled");
    cmd->add_option("--samples", samples, "draw count for sampled mode");
    cmd->add_option("--seed", seed, "RNG seed (sampled mode)");
    cmd->add_option("--pair-budget", pair_budget,
                    "max non-adjacent pairs in complement mode (default 3)");
    cmd->add_option("--report", report, "write a JSON report here");
    cmd->add_option("--out", out_dir,
                    "persist failure digraphs in this directory");
    cmd->add_option("--threads", threads,
                    "worker threads (default HAMLAB_THREADS or 1)");
    cmd->add_option("--prefilter", prefilter,
                    "predicates applied before the hypothesis");
  };

  auto* verify_cmd = app.add_subcommand("verify", "run a theorem over a scope");
  std::string verify_theorem, verify_mode = "exhaustive";
  int verify_n = 0, verify_n_max = 0, verify_threads = env_threads();
  int verify_budget = 3;
  uint64_t verify_samples = 0, verify_seed = 0;
  std::string verify_report, verify_out;
  std::vector<std::string> verify_prefilter;
  verify_cmd->add_option("--theorem", verify_theorem, "registry id")->required();
  add_scope_flags(verify_cmd, verify_mode, verify_n, verify_n_max,
                  verify_samples, verify_seed, verify_budget, verify_report,
                  verify_out, verify_threads, verify_prefilter);

  auto* explore_cmd =
      app.add_subcommand("explore", "search the open pancyclicity regime");
  std::string explore_mode = "complement";
  int explore_n = 0, explore_n_max = 0, explore_threads = env_threads();
  int explore_budget = 3;
  uint64_t explore_samples = 0, explore_seed = 0;
  std::string explore_report, explore_out;
  std::vector<std::string> explore_prefilter;
  add_scope_flags(explore_cmd, explore_mode, explore_n, explore_n_max,
                  explore_samples, explore_seed, explore_budget, explore_report,
                  explore_out, explore_threads, explore_prefilter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      Digraph d = load_digraph(check_input);
      ConditionId id = ConditionId::from_string(check_condition);
      ConditionResult r = evaluate(d, id);
      std::cout << id.to_string() << ": "
                << (r.satisfied ? "satisfied" : "violated");
      if (r.vacuous) std::cout << " (vacuously: hypothesis class empty)";
      std::cout << "\n";
      if (r.witness)
        std::cout << "witness: " << r.witness->inequality << " [vertices "
                  << join_vertices(r.witness->vertices) << "]\n";
      return 0;
    }

    if (*solve) {
      Digraph d = load_digraph(solve_input);
      CycleSearchLimits limits{dp_threshold};
      if (solve_op == "hamiltonian") {
        print_certificate(hamiltonian_cycle(d, limits));
      } else if (solve_op == "pair") {
        if (solve_x < 0 || solve_y < 0)
          throw std::invalid_argument("op=pair needs --x and --y");
        print_certificate(cycle_through_pair(d, solve_x, solve_y, limits));
      } else if (solve_op == "longest") {
        std::optional<int> through, avoiding;
        if (solve_through >= 0) through = solve_through;
        if (solve_avoiding >= 0) avoiding = solve_avoiding;
        print_certificate(longest_cycle(d, through, avoiding, limits));
      } else if (solve_op == "profile") {
        auto profile = cycle_length_profile(d, limits);
        std::cout << "lengths:";
        for (int len : profile.present) std::cout << ' ' << len;
        std::cout << "\n";
        for (const auto& w : profile.witnesses)
          std::cout << "  length " << w.length() << ": "
                    << join_vertices(w.vertices) << "\n";
        std::cout << (profile.pancyclic(d.order()) ? "pancyclic\n"
                                                   : "not pancyclic\n");
      } else {
        throw std::invalid_argument("unknown solve op '" + solve_op + "'");
      }
      return 0;
    }

    if (*factor) {
      Digraph d = load_digraph(factor_input);
      if (auto f = extract_cycle_factor(d)) {
        std::cout << "cycle factor (" << f->cycles.size() << " cycles):\n";
        for (const auto& c : f->cycles)
          std::cout << "  " << join_vertices(c.vertices) << "\n";
        return 0;
      }
      PartitionWitness w = extract_partition_witness(d);
      std::cout << "no cycle factor; partition witness:\n"
                << "  Y:  " << join_vertices(w.y) << "\n"
                << "  Z:  " << join_vertices(w.z) << "\n"
                << "  R1: " << join_vertices(w.r1) << "\n"
                << "  R2: " << join_vertices(w.r2) << "\n";
      return 0;
    }

    if (*gen) {
      Digraph d = generate(FamilySpec::from_string(gen_family));
      if (gen_out.empty()) {
        std::cout << d.serialize();
      } else {
        std::ofstream out(gen_out);
        if (!out) throw std::invalid_argument("cannot write '" + gen_out + "'");
        out << d.serialize();
      }
      return 0;
    }

    auto build_scopes = [](int n, int n_max, const std::string& mode,
                           uint64_t samples, uint64_t seed, int budget,
                           const std::vector<std::string>& prefilter) {
      std::vector<EnumerationScope> scopes;
      int hi = n_max > 0 ? n_max : n;
      for (int order = n; order <= hi; ++order) {
        EnumerationScope scope;
        scope.n = order;
        scope.mode = enumeration_mode_from_string(mode);
        if (samples > 0) scope.sample_count = samples;
        scope.seed = seed;
        scope.pair_budget = budget;
        scope.prefilter = prefilter;
        scopes.push_back(std::move(scope));
      }
      return scopes;
    };

    if (*verify_cmd) {
      std::vector<VerificationReport> reports;
      for (const auto& scope :
           build_scopes(verify_n, verify_n_max, verify_mode, verify_samples,
                        verify_seed, verify_budget, verify_prefilter))
        reports.push_back(
            verify(verify_theorem, scope, {verify_threads, verify_out}));
      return write_reports(reports, verify_report);
    }

    if (*explore_cmd) {
      std::vector<VerificationReport> reports;
      for (const auto& scope :
           build_scopes(explore_n, explore_n_max, explore_mode, explore_samples,
                        explore_seed, explore_budget, explore_prefilter))
        reports.push_back(
            explore_problem_1_17(scope, {explore_threads, explore_out}));
      return write_reports(reports, explore_report);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
