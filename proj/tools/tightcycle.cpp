#include <atomic>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tightcycle/certificate.hpp"
#include "tightcycle/exact.hpp"
#include "tightcycle/experiment.hpp"
#include "tightcycle/plot.hpp"

using namespace tightcycle;

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

void save_certificate(const std::string& dir, const TrialRecord& rec) {
  if (dir.empty() || !rec.result.certificate) return;
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) /
                    ("cell" + std::to_string(rec.cell) + "_trial" + std::to_string(rec.trial) + ".cert");
  std::ofstream out(path);
  write_certificate(out, *rec.result.certificate);
}

int cmd_run(const std::string& config_path, const std::string& out_opt, int jobs, std::int64_t seed,
            const std::string& certs_opt) {
  ExperimentConfig cfg = load_config(config_path);
  if (!out_opt.empty()) cfg.out = out_opt;
  if (jobs > 0) cfg.jobs = jobs;
  if (seed >= 0) cfg.base_seed = static_cast<std::uint64_t>(seed);
  if (!certs_opt.empty()) cfg.cert_dir = certs_opt;

  std::signal(SIGINT, on_sigint);
  const ExperimentResults results = run_experiment(cfg, &g_stop, [&](const TrialRecord& rec) {
    const Cell& cell = cfg.cells[rec.cell];
    std::fprintf(stderr, "n=%d k=%d j=%d c=%g trial %d: %s L_C=%lld (%.0f ms)\n", cell.n, cell.k, cell.j, cell.c,
                 rec.trial, rec.result.closed ? "closed" : ("failed " + rec.result.failed_phase).c_str(),
                 static_cast<long long>(rec.result.cycle_length), rec.result.wall_ms);
  });
  for (const TrialRecord& rec : results.records) save_certificate(cfg.cert_dir, rec);
  if (cfg.out.empty()) {
    write_results_csv(std::cout, cfg, results);
  } else {
    std::ofstream out(cfg.out);
    if (!out) throw std::runtime_error("cannot write " + cfg.out);
    write_results_csv(out, cfg, results);
  }
  if (results.interrupted) {
    std::fprintf(stderr, "interrupted: %zu trials written\n", results.records.size());
    return 130;
  }
  return 0;
}

int cmd_trial(const Cell& cell, const TrialSettings& settings, std::uint64_t seed, const std::string& cert_path) {
  const TrialResult r = run_trial(cell, settings, seed);
  const Params params = derive_params(cell.n, cell.k, cell.j);
  const double l1 = l_one(params, cell.c);
  std::printf("%s c=%g seed=%llu\n", describe(params).c_str(), cell.c, static_cast<unsigned long long>(seed));
  std::printf("dfs      stop %s, longest path %lld (target %lld), %llu queries\n", r.dfs_stop.c_str(),
              static_cast<long long>(r.path_length), static_cast<long long>(r.p0_length + 2 * r.stub),
              static_cast<unsigned long long>(r.q_dfs));
  if (!r.fray_a_stop.empty()) {
    std::printf("family   run A %s |A|=%llu (%llu queries), run B %s |B|=%llu (%llu queries)\n", r.fray_a_stop.c_str(),
                static_cast<unsigned long long>(r.size_a), static_cast<unsigned long long>(r.q_fray_a),
                r.fray_b_stop.c_str(), static_cast<unsigned long long>(r.size_b),
                static_cast<unsigned long long>(r.q_fray_b));
    std::printf("         heavy %llu, disjoint fraction %.4f, longest extension %lld, guarantees %s\n",
                static_cast<unsigned long long>(r.heavy), r.disjoint_fraction, static_cast<long long>(r.max_extension),
                r.family_ok ? "met" : "missed");
  }
  if (r.failed_phase == "close" || r.closed)
    std::printf("close    %llu triples, %llu queries, expected closures %.3g\n",
                static_cast<unsigned long long>(r.triples), static_cast<unsigned long long>(r.q_close),
                r.expected_closures);
  if (r.closed) {
    std::printf("cycle    length %lld, L_C/n %.4f, bound (1-delta)L1 = %.1f, L1/n = %.4f\n",
                static_cast<long long>(r.cycle_length), static_cast<double>(r.cycle_length) / cell.n,
                (1.0 - settings.delta) * l1, l1 / cell.n);
    if (!cert_path.empty()) {
      std::ofstream out(cert_path);
      write_certificate(out, *r.certificate);
      std::printf("certificate written to %s\n", cert_path.c_str());
    }
  } else {
    std::printf("failed   %s: %s\n", r.failed_phase.c_str(), r.failure.c_str());
  }
  std::printf("wall     %.0f ms\n", r.wall_ms);
  return r.closed ? 0 : 1;
}

int cmd_bruteforce(const std::string& path, int n, int j, int cap, std::uint64_t budget) {
  const SmallInstance inst = make_instance(read_edge_list_file(path, n), j, cap);
  const BruteResult p = brute_longest_path(inst, budget);
  std::printf("longest path  %lld\n", static_cast<long long>(p.length));
  const auto c = brute_longest_cycle(inst, budget);
  if (c) std::printf("longest cycle %lld\n", static_cast<long long>(c->length));
  else std::printf("longest cycle none\n");
  return 0;
}

int cmd_check(const std::string& path) {
  const Verdict v = check_certificate(read_certificate_file(path));
  if (!v.ok) {
    std::printf("FAIL %s\n", v.failure.c_str());
    return 1;
  }
  std::printf("PASS length %lld, bound (1-delta)L1 = %.1f (%s)\n", static_cast<long long>(v.length), v.bound,
              v.clears_bound ? "cleared" : "not cleared");
  return 0;
}

int cmd_plot(const std::string& csv_path, const std::string& out_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path);
  const auto points = read_plot_points(in);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  plot_curve(out, points);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long j-tight cycles in random hypergraphs: experiments and checks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run an experiment grid from a config file");
  std::string config_path, out_opt, certs_opt;
  int jobs = 0;
  std::int64_t seed_opt = -1;
  run->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_opt, "Results CSV (default: config's out, else stdout)");
  run->add_option("--jobs", jobs, "Worker threads");
  run->add_option("--seed", seed_opt, "Base seed");
  run->add_option("--certs", certs_opt, "Directory for certificates of closed cycles");

  auto* trial = app.add_subcommand("trial", "Run one verbose trial");
  Cell cell{2000, 3, 2, 4.0};
  TrialSettings settings;
  std::uint64_t trial_seed = 1;
  double omega = 0.0;
  std::string cert_path;
  trial->add_option("--n", cell.n, "Vertices")->capture_default_str();
  trial->add_option("--k", cell.k, "Uniformity")->capture_default_str();
  trial->add_option("--j", cell.j, "Overlap")->capture_default_str();
  trial->add_option("--c", cell.c, "p = c p0")->capture_default_str();
  trial->add_option("--seed", trial_seed, "Seed")->capture_default_str();
  trial->add_option("--delta", settings.delta, "delta")->capture_default_str();
  trial->add_option("--eps", settings.eps, "eps")->capture_default_str();
  trial->add_option("--omega", omega, "Sprinkling divisor (default 12)");
  trial->add_option("--c-chain", settings.c_chain, "Degree constants c_0 .. c_{j-1}")->delimiter(',');
  trial->add_option("--budget", settings.close_budget, "Closer triple budget (0 = all admissible pairs)");
  trial->add_flag("--force-second-round", settings.force_second_round, "Second-round probability 1");
  trial->add_flag("--forbid-all-first-run", settings.forbid_all_first_run,
                  "Second run forbids every vertex the first run used");
  trial->add_option("--cert", cert_path, "Write the certificate here on success");

  auto* brute = app.add_subcommand("bruteforce", "Exact longest path and cycle of a small edge list");
  std::string edges_path;
  int brute_n = 0, brute_j = 0, brute_cap = kDefaultSmallCap;
  std::uint64_t brute_budget = kDefaultStepBudget;
  brute->add_option("edges", edges_path, "Edge-list file")->required()->check(CLI::ExistingFile);
  brute->add_option("--j", brute_j, "Overlap j")->required();
  brute->add_option("--n", brute_n, "Vertices (default: largest vertex + 1)");
  brute->add_option("--cap", brute_cap, "Largest n accepted")->capture_default_str();
  brute->add_option("--budget", brute_budget, "Search step budget")->capture_default_str();

  auto* check = app.add_subcommand("check", "Re-verify a certificate");
  std::string check_path;
  check->add_option("certificate", check_path, "Certificate file")->required()->check(CLI::ExistingFile);

  auto* plot = app.add_subcommand("plot", "Plot mean L_C/n against the bound curve");
  std::string plot_in, plot_out = "results.svg";
  plot->add_option("results", plot_in, "Results CSV")->required()->check(CLI::ExistingFile);
  plot->add_option("--out", plot_out, "SVG output")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return cmd_run(config_path, out_opt, jobs, seed_opt, certs_opt);
    if (*trial) {
      if (omega > 0.0) settings.omega = omega;
      return cmd_trial(cell, settings, trial_seed, cert_path);
    }
    if (*brute) return cmd_bruteforce(edges_path, brute_n, brute_j, brute_cap, brute_budget);
    if (*check) return cmd_check(check_path);
    if (*plot) return cmd_plot(plot_in, plot_out);
  } catch (const BudgetExceeded& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
