// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--work DIR]                 generate, then check all criteria
//   acceptance generate --work DIR          run the trials criteria 6-9 read
//   acceptance --criterion N [--work DIR]   check one criterion
//
// Exit status is 0 only when every checked criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tightcycle/certificate.hpp"
#include "tightcycle/cycle_closer.hpp"
#include "tightcycle/exact.hpp"
#include "tightcycle/experiment.hpp"
#include "tightcycle/fray.hpp"
#include "tightcycle/pathfinder.hpp"

namespace fs = std::filesystem;
using namespace tightcycle;

namespace {

// Pinned values.
constexpr double kC1Seconds = 1.0;

constexpr int kC2N = 40;
constexpr double kC2P = 0.1;
constexpr int kC2Queries = 10000;
constexpr int kC2Seeds = 10;
constexpr double kC2Seconds = 5.0;

constexpr int kC3TrialsPerShape = 50;
constexpr std::uint64_t kC3EndCap = 2000;
constexpr std::uint64_t kC3DfsQueryCap = 5'000'000;
constexpr double kC3Seconds = 120.0;

constexpr int kC4Instances = 100;
constexpr double kC4Density = 0.5;
constexpr std::uint64_t kC4Seed = 4;
constexpr double kC4Seconds = 300.0;

constexpr int kC5N = 3000;
constexpr double kC5C = 4.0;
constexpr std::int64_t kC5BinWidth = 200;
constexpr std::uint64_t kC5MinBin = 100;
constexpr std::uint64_t kC5MinSamples = 1000;
constexpr double kC5Tolerance = 0.10;
constexpr std::uint64_t kC5FirstSeed = 1;
constexpr double kC5Seconds = 120.0;

constexpr int kC6Trials = 20;
constexpr std::uint64_t kC6Seed = 1;
constexpr double kC6SuccessRate = 0.70;
constexpr double kC6MeanTolerance = 0.15;
constexpr double kC6Seconds = 1800.0;

const char* const kTrialsCsv = "criterion6.csv";
const char* const kCerts4 = "certs4";
const char* const kCerts6 = "certs6";

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

void note(const std::string& text) { std::printf("  %s\n", text.c_str()); }

// Degree limits that tiny instances never reach, so searches run to the end.
RunConstants loose_constants(const Params& params) {
  RunConstants consts = default_constants(params, 4.0);
  consts.eps = 1e-3;
  consts.c_chain.clear();
  for (int i = 0; i < params.j; ++i) consts.c_chain.push_back(500.0 + i);
  consts.c_chain.back() = 999.0;
  return consts;
}

// ---------------------------------------------------------------------------

Verdict criterion1() {
  const auto start = Clock::now();
  int checked = 0;
  std::string bad;
  for (int k = 3; k <= 12; ++k)
    for (int j = 2; j <= k - 1; ++j) {
      const Params p = derive_params(k + 1, k, j);
      const int w = k - j;
      const int s = (j + w - 1) / w;
      const bool ok = p.a >= 1 && p.a <= w && (k - p.a) % w == 0 && p.a + p.r * w == j && p.s == s &&
                      p.b == w - p.a && p.b == s * w - j;
      if (!ok) bad += fmt(" (%d,%d)", k, j);
      ++checked;
    }
  const double t = seconds_since(start);
  return {bad.empty() && t < kC1Seconds, fmt("%d pairs, %.3f s", checked, t) + (bad.empty() ? "" : ", wrong:" + bad)};
}

// ---------------------------------------------------------------------------

Verdict criterion2() {
  const auto start = Clock::now();
  const Params params = derive_params(kC2N, 3, 2);
  // C(40,3) = 9880 < 10^4: every distinct 3-set is queried, and sigma uses
  // the count actually drawn.
  std::vector<KSet> sets;
  for (Vertex x = 0; x < kC2N; ++x)
    for (Vertex y = x + 1; y < kC2N; ++y)
      for (Vertex z = y + 1; z < kC2N; ++z)
        if (static_cast<int>(sets.size()) < kC2Queries) sets.push_back(KSet{x, y, z});
  const double m = static_cast<double>(sets.size());
  const double sigma = std::sqrt(kC2P * (1 - kC2P) / m);
  const double p1 = (1.0 - 1.0 / kDefaultOmega) * kC2P;
  const double p2 = kC2P / kDefaultOmega;
  bool pass = true;
  double worst = 0.0;
  double worst_two = 0.0;
  for (std::uint64_t seed = 1; seed <= kC2Seeds; ++seed) {
    EdgeOracle single = EdgeOracle::hashed(params, {kC2P}, seed);
    EdgeOracle rounds = EdgeOracle::hashed(params, {p1, p2}, seed);
    double hits = 0;
    double cumulative = 0;
    for (const KSet& K : sets) {
      hits += single.query(K, 0);
      cumulative += rounds.query(K, 1);
    }
    const double dev = std::abs(hits / m - kC2P);
    worst = std::max(worst, dev);
    worst_two = std::max(worst_two, cumulative / m);
    pass = pass && dev <= 3 * sigma && cumulative / m <= kC2P + 3 * sigma;
    pass = pass && single.queries(0) == sets.size() && single.memo_hits(0) == 0;
  }
  const double t = seconds_since(start);
  return {pass && t < kC2Seconds,
          fmt("%zu distinct queries x %d seeds, max |f - p| %.4f (3 sigma %.4f), max two-round %.4f <= %.4f, %.2f s",
              sets.size(), kC2Seeds, worst, 3 * sigma, worst_two, kC2P + 3 * sigma, t)};
}

// ---------------------------------------------------------------------------

struct Shape {
  int n, k, j;
};

Verdict criterion3() {
  const auto start = Clock::now();
  const std::vector<Shape> shapes{{300, 3, 2}, {150, 4, 2}, {80, 5, 3}, {40, 7, 4}};
  std::uint64_t trials = 0, dfs_hits = 0, fray_hits = 0, batch_bad = 0, invalid = 0;
  std::uint64_t paths_checked = 0, cycles = 0, fray_runs = 0;
  for (const Shape& shape : shapes) {
    const Params params = derive_params(shape.n, shape.k, shape.j);
    const RunConstants consts = constants_for({shape.n, shape.k, shape.j, 4.0}, TrialSettings{});
    const std::vector<double> probs{static_cast<double>(consts.p_first(params)),
                                    static_cast<double>(consts.p_second(params))};
    const std::uint64_t batch = params.batch_size();
    for (int t = 0; t < kC3TrialsPerShape; ++t, ++trials) {
      const std::uint64_t seed = 1000 * static_cast<std::uint64_t>(shape.k) + static_cast<std::uint64_t>(t);
      auto fresh = [&] { return EdgeOracle::hashed(params, probs, seed, MemoMode::tracked); };
      auto edge = [&](const EdgeOracle& o, int round) { return [&o, round](const KSet& K) { return o.peek(K, round); }; };

      EdgeOracle o_dfs = fresh();
      DfsOptions dopt;
      dopt.start_seed = seed;
      dopt.max_queries = kC3DfsQueryCap;
      const DfsOutcome dfs = run_pathfinder(o_dfs, params, consts, 0, dopt);
      dfs_hits += o_dfs.memo_hits(0);
      batch_bad += dfs.children_activated != dfs.edges_found * batch;
      invalid += !validate_path(dfs.path, edge(o_dfs, 0));
      ++paths_checked;

      // P0' is the search path; short paths seed a single run directly.
      const TightPath& p0_prime = dfs.path;
      const std::int64_t m = p0_prime.length();
      std::vector<Seed> start_seeds, end_seeds;
      std::int64_t limit = 0;
      TightPath p0 = p0_prime;
      if (m >= 3) {
        const std::int64_t h = std::min(default_stub(params, consts), (m - 1) / 2);
        p0 = p0_prime.subpath(h, m - 2 * h);
        for (std::int64_t i = 0; i < h; ++i) {
          start_seeds.push_back({p0_prime.subpath(i, m - h - i).reversed()});
          end_seeds.push_back({p0_prime.subpath(h, m - h - i)});
        }
        limit = p0.length() + 2 * h;
      } else {
        start_seeds.push_back({p0_prime});
        end_seeds.push_back({p0_prime.reversed()});
        limit = m + 2 * log_sq_ceil(params.n);
      }
      FrayOptions fopt;
      fopt.end_cap = std::min(kC3EndCap, default_end_cap(params, consts));

      // Each run gets its own oracle so its memo-hit counter covers one run.
      EdgeOracle o_a = fresh();
      FrayOutcome run_a = fray(o_a, params, consts, p0_prime, start_seeds, {}, limit, 0, fopt);
      std::vector<std::uint8_t> on_p0_prime(params.n, 0);
      for (Vertex v : p0_prime.seq) on_p0_prime[v] = 1;
      const std::vector<Vertex> heavy = heavy_vertices(run_a, on_p0_prime, params, consts);
      EdgeOracle o_b = fresh();
      FrayOutcome run_b = fray(o_b, params, consts, p0_prime, end_seeds, heavy, limit, 0, fopt);
      fray_runs += 2;
      for (auto* run : {&run_a, &run_b}) {
        EdgeOracle& o = run == &run_a ? o_a : o_b;
        fray_hits += o.memo_hits(0);
        // A run that stops mid-batch has activated only part of its last
        // edge's children; every earlier edge activated a full batch.
        const std::uint64_t full = run->edges_found * batch;
        const bool ok = run->stop == FrayStop::death || run->edges_found == 0
                            ? run->children_produced == full
                            : run->children_produced <= full && run->children_produced > full - batch;
        batch_bad += !ok;
        for (std::size_t i = 0; i < run->ends.size(); ++i) {
          invalid += !validate_path(run->path(i), edge(o, 0));
          ++paths_checked;
        }
      }

      if (m >= 3) {
        AugmentingFamily fam;
        fam.params = params;
        fam.p0 = p0;
        fam.p0_prime = p0_prime;
        fam.run_a = std::move(run_a);
        fam.run_b = std::move(run_b);
        EdgeOracle o_close = fresh();
        CloseOptions copt;
        copt.seed = seed;
        copt.budget = 20000;
        const CloseOutcome closed = try_close(fam, o_close, consts, copt);
        if (closed.cycle) {
          ++cycles;
          invalid += !validate_cycle(*closed.cycle, edge(o_close, 1));
        }
      }
    }
  }
  const double t = seconds_since(start);
  const bool pass = dfs_hits == 0 && fray_hits == 0 && batch_bad == 0 && invalid == 0 && t < kC3Seconds;
  return {pass, fmt("%llu trials, %llu fray runs: memo hits dfs %llu / fray %llu, batch violations %llu, "
                    "%llu of %llu paths and %llu cycles invalid, %.1f s",
                    (unsigned long long)trials, (unsigned long long)fray_runs, (unsigned long long)dfs_hits,
                    (unsigned long long)fray_hits, (unsigned long long)batch_bad, (unsigned long long)invalid,
                    (unsigned long long)paths_checked, (unsigned long long)cycles, t)};
}

// ---------------------------------------------------------------------------

struct PipelineLengths {
  std::int64_t path = 0;
  std::optional<TightCycle> cycle;
};

// Exhaustive-budget search on a replay oracle: the DFS runs until no neutral
// j-set is left, its path seeds a family, and the closer tries every pair.
PipelineLengths replay_pipeline(EdgeOracle& oracle, const Params& params, std::uint64_t seed) {
  const RunConstants consts = loose_constants(params);
  DfsOptions dopt;
  dopt.target = 1000;
  dopt.max_queries = 100'000'000;
  dopt.start_seed = seed;
  const DfsOutcome dfs = run_pathfinder(oracle, params, consts, 0, dopt);
  PipelineLengths out;
  out.path = dfs.path.length();
  if (dfs.path.length() < 3) return out;
  FamilyOptions fopt;
  fopt.stub = 1;
  fopt.end_cap = 1'000'000;
  const AugmentingFamily fam = build_family(oracle, params, consts, dfs.path, 0, fopt);
  CloseOptions copt;
  copt.seed = seed;
  const CloseOutcome closed = try_close(fam, oracle, consts, copt);
  out.cycle = closed.cycle;
  return out;
}

Verdict criterion4(const fs::path* cert_dir) {
  const auto start = Clock::now();
  std::mt19937_64 rng(kC4Seed);
  int violations = 0, certificates = 0, cycles = 0, pipeline_cycles = 0, dfs_exact = 0;
  if (cert_dir) fs::create_directories(*cert_dir);
  auto save = [&](const EdgeOracle& oracle, const Params& params, const RunConstants& consts, const TightCycle& cycle,
                  const std::string& name) {
    if (!cert_dir) return;
    std::ofstream out(*cert_dir / name);
    write_certificate(out, make_certificate(oracle, params, consts, cycle, 1));
    ++certificates;
  };
  for (int i = 0; i < kC4Instances; ++i) {
    const int n = 5 + static_cast<int>(rng() % 5);
    std::vector<KSet> edges;
    std::vector<Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    for_each_subset(VertexSet(all), 3, [&](const VertexSet& K) {
      if (std::uniform_real_distribution<double>(0, 1)(rng) < kC4Density) edges.push_back(K);
    });
    const SmallInstance inst = make_instance(n, 3, 2, edges);
    const std::int64_t best_path = brute_longest_path(inst).length;
    const auto best_cycle = brute_longest_cycle(inst);
    const std::int64_t best_cycle_length = best_cycle ? best_cycle->length : 0;
    const Params params = derive_params(n, 3, 2);

    EdgeOracle oracle = EdgeOracle::replay(inst.edges, n, 3);
    const PipelineLengths got = replay_pipeline(oracle, params, static_cast<std::uint64_t>(i));
    dfs_exact += got.path == best_path;
    violations += got.path > best_path;
    if (got.cycle) {
      ++cycles;
      violations += got.cycle->length() > best_cycle_length;
      save(oracle, params, loose_constants(params), *got.cycle, fmt("instance%03d.cert", i));
    }

    // The pipeline with its default caps and constants.
    EdgeOracle fresh = EdgeOracle::replay(inst.edges, n, 3);
    const RunConstants consts = default_constants(params, 4.0);
    const TrialResult r = run_pipeline(fresh, params, consts, TrialSettings{}, static_cast<std::uint64_t>(i));
    violations += r.path_length > best_path;
    if (r.closed) {
      ++pipeline_cycles;
      violations += r.cycle_length > best_cycle_length;
      if (cert_dir && r.certificate) {
        std::ofstream out(*cert_dir / fmt("instance%03d_default.cert", i));
        write_certificate(out, *r.certificate);
        ++certificates;
      }
    }
  }
  // Complete instances: brute force finds the tight Hamilton cycle.
  int hamilton_bad = 0;
  for (int n = 5; n <= 9; ++n) {
    const SmallInstance inst = complete_instance(n, 3, 2);
    const auto cycle = brute_longest_cycle(inst);
    hamilton_bad += !cycle || cycle->length != n;
    EdgeOracle oracle = EdgeOracle::replay(inst.edges, n, 3);
    const PipelineLengths got = replay_pipeline(oracle, derive_params(n, 3, 2), 1);
    hamilton_bad += got.path > n - 2 || (got.cycle && got.cycle->length() > n);
  }
  const double t = seconds_since(start);
  return {violations == 0 && hamilton_bad == 0 && t < kC4Seconds,
          fmt("%d instances, %d dominance violations, search path optimal in %d, %d + %d cycles closed, "
              "Hamilton check %s, %.1f s",
              kC4Instances, violations, dfs_exact, cycles, pipeline_cycles, hamilton_bad == 0 ? "ok" : "wrong", t) +
              (cert_dir ? fmt(", %d certificates written", certificates) : "")};
}

// ---------------------------------------------------------------------------

bool branching_once(std::uint64_t seed, std::string& detail) {
  const Params params = derive_params(kC5N, 3, 2);
  const RunConstants consts = default_constants(params, kC5C);
  EdgeOracle oracle = EdgeOracle::hashed(params, {static_cast<double>(consts.p(params))}, seed, MemoMode::untracked);
  DfsOptions options;
  options.probe_branching = true;
  options.start_seed = seed;
  const DfsOutcome out = run_pathfinder(oracle, params, consts, 0, options);
  struct Bin {
    std::uint64_t samples = 0;
    double children = 0;
    double predicted = 0;
  };
  std::map<std::int64_t, Bin> bins;
  for (const BranchProbe& probe : out.probes) {
    Bin& bin = bins[probe.length / kC5BinWidth];
    ++bin.samples;
    bin.children += static_cast<double>(probe.children);
    bin.predicted += (1.0 - static_cast<double>(probe.length) / kC5N) * kC5C;
  }
  bool ok = out.probes.size() >= kC5MinSamples;
  int used = 0;
  double lo = 1e9, hi = 0;
  for (const auto& [index, bin] : bins) {
    if (bin.samples < kC5MinBin) continue;
    ++used;
    const double ratio = bin.children / bin.predicted;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    ok = ok && std::abs(ratio - 1.0) <= kC5Tolerance;
  }
  ok = ok && used > 0;
  detail = fmt("seed %llu: %zu sampled j-sets, %d bins with >= %llu samples, mean/predicted in [%.3f, %.3f]",
               (unsigned long long)seed, out.probes.size(), used, (unsigned long long)kC5MinBin, lo, hi);
  return ok;
}

Verdict criterion5() {
  const auto start = Clock::now();
  std::string first, second;
  if (branching_once(kC5FirstSeed, first)) return {seconds_since(start) < kC5Seconds, first};
  note("retry after " + first);
  const bool ok = branching_once(kC5FirstSeed + 1, second);
  return {ok && seconds_since(start) < kC5Seconds, second};
}

// ---------------------------------------------------------------------------

std::vector<Cell> criterion6_cells() {
  return {{2000, 3, 2, 2.0}, {2000, 3, 2, 4.0}, {2000, 3, 2, 8.0}, {1500, 4, 2, 4.0}};
}

void generate(const fs::path& work) {
  fs::create_directories(work);
  const auto start = Clock::now();
  const fs::path certs4 = work / kCerts4;
  criterion4(&certs4);

  ExperimentConfig cfg;
  cfg.cells = criterion6_cells();
  cfg.trials = kC6Trials;
  cfg.base_seed = kC6Seed;
  cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const ExperimentResults results = run_experiment(cfg);
  std::ofstream csv(work / kTrialsCsv);
  write_results_csv(csv, cfg, results);
  fs::create_directories(work / kCerts6);
  int written = 0;
  for (const TrialRecord& rec : results.records) {
    if (!rec.result.certificate) continue;
    std::ofstream out(work / kCerts6 / fmt("cell%zu_trial%02d.cert", rec.cell, rec.trial));
    write_certificate(out, *rec.result.certificate);
    ++written;
  }
  std::printf("generated %zu trials and %d certificates in %.1f s\n", results.records.size(), written,
              seconds_since(start));
  std::ofstream(work / "elapsed") << seconds_since(start) << '\n';
}

struct Table {
  std::map<std::string, std::size_t> column;
  std::vector<std::vector<std::string>> rows;

  const std::string& at(std::size_t row, const std::string& name) const { return rows[row].at(column.at(name)); }
  double num(std::size_t row, const std::string& name) const { return std::stod(at(row, name)); }
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Table read_trials(const fs::path& work) {
  std::ifstream in(work / kTrialsCsv);
  if (!in) throw std::runtime_error("missing " + (work / kTrialsCsv).string() + "; run `acceptance generate` first");
  Table table;
  std::string line;
  std::getline(in, line);
  const auto header = split_csv(line);
  for (std::size_t i = 0; i < header.size(); ++i) table.column[header[i]] = i;
  while (std::getline(in, line)) {
    auto row = split_csv(line);
    if (row.size() == header.size() && row[table.column.at("kind")] == "trial") table.rows.push_back(std::move(row));
  }
  return table;
}

Verdict criterion6(const fs::path& work) {
  const Table table = read_trials(work);
  const auto cells = criterion6_cells();
  bool pass = true;
  std::string summary;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    int trials = 0, success = 0;
    double sum = 0;
    std::map<std::string, int> failures;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      if (std::stoul(table.at(r, "cell")) != c) continue;
      ++trials;
      const bool closed = table.at(r, "closed") == "1";
      const double length = table.num(r, "cycle_length");
      if (closed && length >= table.num(r, "bound")) ++success;
      sum += closed ? length / cell.n : 0.0;
      if (!closed) {
        std::string phase = table.at(r, "failed_phase");
        if (phase == "family") phase += " " + table.at(r, "fray_a_stop") + "/" + table.at(r, "fray_b_stop");
        else if (phase == "dfs") phase += " " + table.at(r, "dfs_stop");
        ++failures[phase];
      }
    }
    const double rate = trials ? static_cast<double>(success) / trials : 0.0;
    const double mean = trials ? sum / trials : 0.0;
    const double curve = (1.0 - std::pow(cell.c, -1.0 / (cell.k - cell.j))) / (cell.k - cell.j);
    const bool ok = trials == kC6Trials && rate >= kC6SuccessRate && mean >= curve - kC6MeanTolerance;
    pass = pass && ok;
    std::string why;
    for (const auto& [phase, count] : failures) why += fmt(" %s x%d", phase.c_str(), count);
    note(fmt("n=%d k=%d j=%d c=%g: %d/%d certified >= (1-delta)L1 (%.0f%%), mean L_C/n %.3f vs curve %.3f - %.2f: %s",
             cell.n, cell.k, cell.j, cell.c, success, trials, 100 * rate, mean, curve, kC6MeanTolerance,
             ok ? "ok" : "short") +
         (why.empty() ? "" : ";" + why));
    summary += fmt("%s%.0f%%", c ? ", " : "", 100 * rate);
  }
  double elapsed = 0;
  std::ifstream(work / "elapsed") >> elapsed;
  pass = pass && elapsed < kC6Seconds;
  return {pass, "success per cell " + summary + fmt(", generation %.0f s", elapsed)};
}

Verdict criterion7(const fs::path& work) {
  const Table table = read_trials(work);
  int over = 0;
  double worst = 0;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const double n = table.num(r, "n");
    const double bound = 2.0 * table.num(r, "k") * n / std::log(n);
    const double heavy = table.num(r, "heavy");
    over += heavy > bound;
    worst = std::max(worst, heavy / bound);
  }
  return {over == 0 && !table.rows.empty(),
          fmt("%zu trials, %d over 2kn/ln n, largest heavy/bound %.3f", table.rows.size(), over, worst)};
}

Verdict criterion8(const fs::path& work) {
  const Table table = read_trials(work);
  const auto cells = criterion6_cells();
  int eligible = 0, size_bad = 0, extension_bad = 0, disjoint_bad = 0;
  double min_fraction = 1.0;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.at(r, "fray_a_stop") != "S4" || table.at(r, "fray_b_stop") != "S4") continue;
    ++eligible;
    const Cell& cell = cells.at(std::stoul(table.at(r, "cell")));
    const Params params = derive_params(cell.n, cell.k, cell.j);
    const std::uint64_t cap = default_end_cap(params, constants_for(cell, TrialSettings{}));
    const double ln = std::log(static_cast<double>(cell.n));
    size_bad += std::stoull(table.at(r, "size_a")) != cap || std::stoull(table.at(r, "size_b")) != cap;
    extension_bad += table.num(r, "max_extension") > 2 * ln * ln;
    const double fraction = table.num(r, "disjoint_fraction");
    min_fraction = std::min(min_fraction, fraction);
    disjoint_bad += fraction < 1.0 - TrialSettings{}.eps;
  }
  return {eligible > 0 && size_bad == 0 && extension_bad == 0 && disjoint_bad == 0,
          fmt("%d trials with both runs at S4: %d size mismatches, %d extensions over 2(ln n)^2, "
              "%d below 1-eps disjoint (lowest %.3f)",
              eligible, size_bad, extension_bad, disjoint_bad, min_fraction)};
}

Verdict criterion9(const fs::path& work) {
  int checked = 0, failed = 0;
  for (const char* dir : {kCerts4, kCerts6}) {
    if (!fs::exists(work / dir)) continue;
    for (const auto& entry : fs::directory_iterator(work / dir)) {
      const tightcycle::Verdict v = check_certificate(read_certificate_file(entry.path().string()));
      ++checked;
      if (!v.ok) {
        ++failed;
        note(entry.path().filename().string() + ": " + v.failure);
      }
    }
  }
  const Table table = read_trials(work);
  int closed = 0;
  for (std::size_t r = 0; r < table.rows.size(); ++r) closed += table.at(r, "closed") == "1";
  int six = 0;
  if (fs::exists(work / kCerts6))
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(work / kCerts6)) ++six;
  return {checked > 0 && failed == 0 && six == closed,
          fmt("%d certificates re-read and re-checked, %d failed; %d of %d closed trials certified", checked, failed,
              six, closed)};
}

Verdict run(int criterion, const fs::path& work) {
  switch (criterion) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4(nullptr);
    case 5: return criterion5();
    case 6: return criterion6(work);
    case 7: return criterion7(work);
    case 8: return criterion8(work);
    case 9: return criterion9(work);
  }
  throw std::invalid_argument("no criterion " + std::to_string(criterion));
}

const char* const kTitles[] = {"",
                               "parameter identities",
                               "oracle statistics",
                               "no repeated queries, batch sizes, validators",
                               "oracle equivalence on small instances",
                               "branching factor",
                               "desk-scale cycle lengths",
                               "heavy-vertex bound",
                               "family guarantees",
                               "certificate round trip"};

bool report(int criterion, const fs::path& work) {
  Verdict v;
  try {
    v = run(criterion, work);
  } catch (const std::exception& e) {
    v = {false, std::string("error: ") + e.what()};
  }
  std::printf("criterion %d (%s): %s  %s\n", criterion, kTitles[criterion], v.pass ? "PASS" : "FAIL", v.detail.c_str());
  std::fflush(stdout);
  return v.pass;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path work = fs::temp_directory_path() / "tightcycle-acceptance";
  int only = 0;
  bool generate_only = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--work" && i + 1 < argc) work = argv[++i];
    else if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (arg == "generate") generate_only = true;
    else {
      std::fprintf(stderr, "usage: acceptance [generate] [--work DIR] [--criterion N]\n");
      return 2;
    }
  }
  try {
    if (generate_only) {
      generate(work);
      return 0;
    }
    if (only != 0) return report(only, work) ? 0 : 1;
    generate(work);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  int failed = 0;
  for (int c = 1; c <= 9; ++c) failed += !report(c, work);
  return failed == 0 ? 0 : 1;
}
