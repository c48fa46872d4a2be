#include "tightcycle/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <thread>

#include "tightcycle/cycle_closer.hpp"
#include "tightcycle/fray.hpp"
#include "tightcycle/pathfinder.hpp"

namespace tightcycle {

namespace {

constexpr std::uint64_t kDfsSalt = 0x6a09e667f3bcc909ULL;
constexpr std::uint64_t kCloseSalt = 0xbb67ae8584caa73bULL;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

template <class T>
T parse_number(const std::string& text, int lineno) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof())
    throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad number '" + text + "'");
  return value;
}

bool parse_flag(const std::string& text, int lineno) {
  if (text == "1" || text == "true" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "no") return false;
  throw std::invalid_argument("config line " + std::to_string(lineno) + ": bad flag '" + text + "'");
}

double heavy_bound(const Cell& cell) { return 2.0 * cell.k * cell.n / std::log(static_cast<double>(cell.n)); }

}  // namespace

RunConstants constants_for(const Cell& cell, const TrialSettings& settings) {
  RunConstants consts;
  consts.c = cell.c;
  consts.delta = settings.delta;
  consts.eps = settings.eps;
  consts.c_chain = settings.c_chain.empty() ? default_c_chain(cell.j, settings.eps) : settings.c_chain;
  consts.omega = settings.omega.value_or(default_omega(cell.n));
  return consts;
}

void validate_cell(const Cell& cell, const TrialSettings& settings) {
  if (cell.j < 2 || cell.j > cell.k - 1) throw std::invalid_argument("cell needs 2 <= j <= k-1");
  if (!(cell.c > 1.0)) throw std::invalid_argument("cell needs c > 1");
  const Params params = derive_params(cell.n, cell.k, cell.j);
  constants_for(cell, settings).validate(params);
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    std::vector<std::string> values;
    for (std::string v; fields >> v;) values.push_back(v);
    auto one = [&]() -> const std::string& {
      if (values.size() != 1) throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + key + " takes one value");
      return values[0];
    };
    if (key == "trials") cfg.trials = parse_number<int>(one(), lineno);
    else if (key == "seed") cfg.base_seed = parse_number<std::uint64_t>(one(), lineno);
    else if (key == "jobs") cfg.jobs = parse_number<int>(one(), lineno);
    else if (key == "delta") cfg.settings.delta = parse_number<double>(one(), lineno);
    else if (key == "eps") cfg.settings.eps = parse_number<double>(one(), lineno);
    else if (key == "omega") cfg.settings.omega = parse_number<double>(one(), lineno);
    else if (key == "budget") cfg.settings.close_budget = parse_number<std::uint64_t>(one(), lineno);
    else if (key == "force_second_round") cfg.settings.force_second_round = parse_flag(one(), lineno);
    else if (key == "forbid_all_first_run") cfg.settings.forbid_all_first_run = parse_flag(one(), lineno);
    else if (key == "out") cfg.out = one();
    else if (key == "certs") cfg.cert_dir = one();
    else if (key == "c_chain") {
      cfg.settings.c_chain.clear();
      for (const std::string& v : values)
        for (const std::string& x : split(v, ',')) cfg.settings.c_chain.push_back(parse_number<double>(x, lineno));
    } else if (key == "cell") {
      std::vector<int> ns, ks, js;
      std::vector<double> cs;
      for (const std::string& v : values) {
        const auto eq = v.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected name=value");
        const std::string name = v.substr(0, eq);
        for (const std::string& x : split(v.substr(eq + 1), ',')) {
          if (name == "n") ns.push_back(parse_number<int>(x, lineno));
          else if (name == "k") ks.push_back(parse_number<int>(x, lineno));
          else if (name == "j") js.push_back(parse_number<int>(x, lineno));
          else if (name == "c") cs.push_back(parse_number<double>(x, lineno));
          else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown cell field " + name);
        }
      }
      if (ns.empty() || ks.empty() || js.empty() || cs.empty())
        throw std::invalid_argument("config line " + std::to_string(lineno) + ": cell needs n, k, j and c");
      for (int n : ns)
        for (int k : ks)
          for (int j : js)
            for (double c : cs) cfg.cells.push_back({n, k, j, c});
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  if (cfg.trials < 0) throw std::invalid_argument("trials must be non-negative");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be positive");
  for (const Cell& cell : cfg.cells) {
    try {
      validate_cell(cell, cfg.settings);
    } catch (const std::invalid_argument& e) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "cell n=%d k=%d j=%d c=%g: ", cell.n, cell.k, cell.j, cell.c);
      throw std::invalid_argument(buf + std::string(e.what()));
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return parse_config(in);
}

TrialResult run_pipeline(EdgeOracle& oracle, const Params& params, const RunConstants& consts,
                         const TrialSettings& settings, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  TrialResult r;
  r.seed = seed;
  auto finish = [&]() -> TrialResult {
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  r.stub = default_stub(params, consts);
  r.p0_length = p0_length(params, consts);
  const std::int64_t target = r.p0_length + 2 * r.stub;

  DfsOptions dopt;
  dopt.target = target;
  dopt.start_seed = mix64(seed ^ kDfsSalt);
  const DfsOutcome dfs = run_pathfinder(oracle, params, consts, 0, dopt);
  r.q_dfs = dfs.queries;
  r.dfs_stop = to_string(dfs.stop);
  r.path_length = dfs.path.length();
  for (double ratio : dfs.degree_ratios) r.dfs_degree_ratio = std::max(r.dfs_degree_ratio, ratio);
  if (!validate_path(dfs.path, [&](const KSet& K) { return oracle.peek(K, 0); }))
    throw std::logic_error("search path failed validation");
  if (dfs.path.length() < target) {
    r.failed_phase = "dfs";
    r.failure = "longest path " + std::to_string(dfs.path.length()) + " below " + std::to_string(target);
    return finish();
  }

  const TightPath p0_prime = dfs.path.subpath(dfs.path.length() - target, target);
  FamilyOptions fopt;
  fopt.stub = r.stub;
  fopt.forbid_all_first_run = settings.forbid_all_first_run;
  const AugmentingFamily family = build_family(oracle, params, consts, p0_prime, 0, fopt);
  r.fray_a_stop = to_string(family.run_a.stop);
  r.fray_b_stop = to_string(family.run_b.stop);
  r.q_fray_a = family.queries_a;
  r.q_fray_b = family.queries_b;
  r.size_a = family.size_a();
  r.size_b = family.size_b();
  r.heavy = family.heavy.size();
  r.disjoint_fraction = family.disjoint_fraction();
  const std::int64_t base = family.p0.length();
  for (const FrayOutcome* run : {&family.run_a, &family.run_b})
    for (const FrayEnd& end : run->ends) r.max_extension = std::max(r.max_extension, end.length - base);
  r.family_ok = family.ok();
  if (!family.runs_complete()) {
    r.failed_phase = "family";
    r.failure = family.failure->reason;
    return finish();
  }

  CloseOptions copt;
  copt.seed = mix64(seed ^ kCloseSalt);
  copt.budget = settings.close_budget;
  copt.round = 1;
  const CloseOutcome closed = try_close(family, oracle, consts, copt);
  r.q_close = closed.queries;
  r.triples = closed.triples;
  r.expected_closures = closed.expected;
  if (!closed.cycle) {
    r.failed_phase = "close";
    r.failure = "no closing configuration among " + std::to_string(closed.triples) + " triples";
    return finish();
  }
  r.closed = true;
  r.cycle_length = closed.cycle->length();
  r.certificate = make_certificate(oracle, params, consts, *closed.cycle, copt.round);
  std::istringstream text(certificate_text(*r.certificate));
  r.certificate_ok = check_certificate(read_certificate(text)).ok;
  if (!r.certificate_ok) throw std::logic_error("certificate of a closed cycle failed its check");
  return finish();
}

TrialResult run_trial(const Cell& cell, const TrialSettings& settings, std::uint64_t seed) {
  validate_cell(cell, settings);
  const Params params = derive_params(cell.n, cell.k, cell.j);
  const RunConstants consts = constants_for(cell, settings);
  const double p1 = static_cast<double>(consts.p_first(params));
  const double p2 = settings.force_second_round ? 1.0 : static_cast<double>(consts.p_second(params));
  EdgeOracle oracle = EdgeOracle::hashed(params, {p1, p2}, seed, MemoMode::untracked);
  return run_pipeline(oracle, params, consts, settings, seed);
}

std::vector<CellAggregate> aggregate(const std::vector<Cell>& cells, const std::vector<TrialRecord>& records,
                                     const TrialSettings& settings) {
  std::vector<CellAggregate> out(cells.size());
  std::vector<std::vector<double>> ratios(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out[i].cell = cells[i];
    const Params params = derive_params(cells[i].n, cells[i].k, cells[i].j);
    out[i].l1_over_n = l_one(params, cells[i].c) / cells[i].n;
  }
  for (const TrialRecord& rec : records) {
    CellAggregate& agg = out[rec.cell];
    const TrialResult& r = rec.result;
    const Cell& cell = cells[rec.cell];
    const double bound = (1.0 - settings.delta) * agg.l1_over_n * cell.n;
    ++agg.trials;
    agg.mean_lc_over_n += static_cast<double>(r.cycle_length) / cell.n;
    agg.dfs_rate += r.failed_phase != "dfs" && r.failed_phase != "error";
    agg.family_rate += r.family_ok;
    agg.close_rate += r.closed;
    agg.bound_rate += r.closed && static_cast<double>(r.cycle_length) >= bound;
    agg.mean_degree_ratio += r.dfs_degree_ratio;
  }
  for (const TrialRecord& rec : records) {
    const CellAggregate& agg = out[rec.cell];
    const double x = static_cast<double>(rec.result.cycle_length) / cells[rec.cell].n;
    ratios[rec.cell].push_back(x - agg.mean_lc_over_n / agg.trials);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    CellAggregate& agg = out[i];
    if (agg.trials == 0) continue;
    const double t = agg.trials;
    agg.mean_lc_over_n /= t;
    agg.dfs_rate /= t;
    agg.family_rate /= t;
    agg.close_rate /= t;
    agg.bound_rate /= t;
    agg.mean_degree_ratio /= t;
    double ss = 0.0;
    for (double d : ratios[i]) ss += d * d;
    agg.sd_lc_over_n = agg.trials > 1 ? std::sqrt(ss / (t - 1)) : 0.0;
  }
  return out;
}

ExperimentResults run_experiment(const ExperimentConfig& cfg, const std::atomic<bool>* stop,
                                 const std::function<void(const TrialRecord&)>& on_record) {
  for (const Cell& cell : cfg.cells) validate_cell(cell, cfg.settings);
  const std::size_t trials = static_cast<std::size_t>(std::max(cfg.trials, 0));
  const std::size_t total = cfg.cells.size() * trials;
  std::vector<std::optional<TrialRecord>> slots(total);
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::size_t emitted = 0;

  auto worker = [&]() {
    while (!(stop && stop->load())) {
      const std::size_t task = next.fetch_add(1);
      if (task >= total) return;
      TrialRecord rec;
      rec.cell = task / trials;
      rec.trial = static_cast<int>(task % trials);
      const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(rec.trial);
      try {
        rec.result = run_trial(cfg.cells[rec.cell], cfg.settings, seed);
      } catch (const std::exception& e) {
        rec.result = TrialResult{};
        rec.result.seed = seed;
        rec.result.failed_phase = "error";
        rec.result.failure = e.what();
      }
      std::lock_guard<std::mutex> lock(mutex);
      slots[task] = std::move(rec);
      while (emitted < total && slots[emitted]) {
        if (on_record) on_record(*slots[emitted]);
        ++emitted;
      }
    }
  };

  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(std::max<std::size_t>(total, 1))));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  ExperimentResults results;
  for (auto& slot : slots) {
    if (slot) results.records.push_back(std::move(*slot));
    else results.interrupted = true;
  }
  results.aggregates = aggregate(cfg.cells, results.records, cfg.settings);
  return results;
}

namespace {

constexpr const char* kColumns[] = {
    "schema",       "kind",           "cell",          "n",          "k",           "j",
    "c",            "trial",          "seed",          "dfs_stop",   "path_length", "p0_length",
    "stub",         "fray_a_stop",    "fray_b_stop",   "size_a",     "size_b",      "disjoint_fraction",
    "heavy",        "heavy_bound",    "max_extension", "closed",     "cycle_length", "lc_over_n",
    "l1_over_n",    "bound",          "family_ok",     "failed_phase",  "q_dfs",      "q_fray_a",    "q_fray_b",
    "q_close",      "triples",        "expected_closures", "dfs_degree_ratio", "mean_lc_over_n", "sd_lc_over_n",
    "dfs_rate",     "family_rate",    "close_rate",    "bound_rate", "wall_ms"};

class Row {
 public:
  Row() : fields_(std::size(kColumns)) {}

  template <class T>
  Row& set(std::string_view column, const T& value) {
    std::ostringstream s;
    s << value;
    return put(column, s.str());
  }
  Row& set(std::string_view column, double value) { return put(column, fmt(value)); }

  void write(std::ostream& out) const {
    for (std::size_t i = 0; i < fields_.size(); ++i) out << (i ? "," : "") << fields_[i];
    out << '\n';
  }

 private:
  Row& put(std::string_view column, std::string text) {
    for (std::size_t i = 0; i < std::size(kColumns); ++i)
      if (column == kColumns[i]) {
        fields_[i] = std::move(text);
        return *this;
      }
    throw std::logic_error("unknown column");
  }

  std::vector<std::string> fields_;
};

Row cell_row(const char* kind, const Cell& cell) {
  Row row;
  row.set("schema", kCsvSchema).set("kind", kind).set("n", cell.n).set("k", cell.k).set("j", cell.j).set("c", cell.c);
  row.set("heavy_bound", heavy_bound(cell));
  return row;
}

}  // namespace

void write_csv_header(std::ostream& out) {
  for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
  out << '\n';
}

void write_trial_row(std::ostream& out, const Cell& cell, const TrialRecord& rec, const TrialSettings& settings) {
  const TrialResult& r = rec.result;
  const Params params = derive_params(cell.n, cell.k, cell.j);
  const double l1 = l_one(params, cell.c);
  Row row = cell_row("trial", cell);
  row.set("cell", rec.cell).set("trial", rec.trial).set("seed", r.seed).set("dfs_stop", r.dfs_stop);
  row.set("path_length", r.path_length).set("p0_length", r.p0_length).set("stub", r.stub);
  row.set("fray_a_stop", r.fray_a_stop).set("fray_b_stop", r.fray_b_stop).set("size_a", r.size_a).set("size_b", r.size_b);
  row.set("disjoint_fraction", r.disjoint_fraction).set("heavy", r.heavy).set("max_extension", r.max_extension);
  row.set("closed", r.closed ? 1 : 0).set("cycle_length", r.cycle_length);
  row.set("lc_over_n", static_cast<double>(r.cycle_length) / cell.n).set("l1_over_n", l1 / cell.n);
  row.set("bound", (1.0 - settings.delta) * l1).set("family_ok", r.family_ok ? 1 : 0).set("failed_phase", r.failed_phase);
  row.set("q_dfs", r.q_dfs).set("q_fray_a", r.q_fray_a).set("q_fray_b", r.q_fray_b).set("q_close", r.q_close);
  row.set("triples", r.triples).set("expected_closures", r.expected_closures);
  row.set("dfs_degree_ratio", r.dfs_degree_ratio).set("wall_ms", r.wall_ms);
  row.write(out);
}

void write_aggregate_row(std::ostream& out, std::size_t index, const CellAggregate& agg) {
  Row row = cell_row("aggregate", agg.cell);
  row.set("cell", index).set("trial", agg.trials).set("l1_over_n", agg.l1_over_n);
  row.set("dfs_degree_ratio", agg.mean_degree_ratio).set("mean_lc_over_n", agg.mean_lc_over_n);
  row.set("sd_lc_over_n", agg.sd_lc_over_n).set("dfs_rate", agg.dfs_rate).set("family_rate", agg.family_rate);
  row.set("close_rate", agg.close_rate).set("bound_rate", agg.bound_rate);
  row.write(out);
}

void write_results_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResults& results) {
  write_csv_header(out);
  for (const TrialRecord& rec : results.records) write_trial_row(out, cfg.cells[rec.cell], rec, cfg.settings);
  for (std::size_t i = 0; i < results.aggregates.size(); ++i)
    if (results.aggregates[i].trials > 0) write_aggregate_row(out, i, results.aggregates[i]);
}

}  // namespace tightcycle
