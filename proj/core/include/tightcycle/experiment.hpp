#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tightcycle/certificate.hpp"
#include "tightcycle/edge_oracle.hpp"
#include "tightcycle/params.hpp"

namespace tightcycle {

struct Cell {
  int n = 0;
  int k = 0;
  int j = 0;
  double c = 0.0;
};

// Constant overrides and budgets shared by every trial.
struct TrialSettings {
  double delta = 0.3;
  double eps = 0.05;
  // Unset means kDefaultOmega.
  std::optional<double> omega;
  // Empty means default_c_chain().
  std::vector<double> c_chain;
  // Closer triple budget; 0 tries every admissible pair.
  std::uint64_t close_budget = 0;
  // Second-round probability 1: closure succeeds whenever the family does.
  bool force_second_round = false;
  bool forbid_all_first_run = false;
};

struct ExperimentConfig {
  std::vector<Cell> cells;
  int trials = 1;
  std::uint64_t base_seed = 1;
  TrialSettings settings;
  int jobs = 1;
  std::string out;
  // Certificates of closed cycles go here when set.
  std::string cert_dir;
};

// Rejects cells outside 2 <= j <= k-1, c <= 1, or invalid constants.
void validate_cell(const Cell& cell, const TrialSettings& settings);
RunConstants constants_for(const Cell& cell, const TrialSettings& settings);

// Line-oriented config; see README. Throws std::invalid_argument with the
// offending line number.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

struct TrialResult {
  std::uint64_t seed = 0;
  std::string dfs_stop;
  std::string fray_a_stop;
  std::string fray_b_stop;
  // First phase that failed ("dfs", "family", "close", "error"), empty on
  // success.
  std::string failed_phase;
  std::string failure;
  // The family met every guarantee, disjoint-pair fraction included. A
  // family whose runs both reached S4 is still handed to the closer, which
  // only uses disjoint pairs anyway.
  bool family_ok = false;
  std::int64_t path_length = 0;
  std::int64_t p0_length = 0;
  std::int64_t stub = 0;
  std::uint64_t size_a = 0;
  std::uint64_t size_b = 0;
  double disjoint_fraction = 0.0;
  std::uint64_t heavy = 0;
  // Longest stored augmenting path beyond P0 over both runs.
  std::int64_t max_extension = 0;
  bool closed = false;
  std::int64_t cycle_length = 0;
  std::uint64_t q_dfs = 0;
  std::uint64_t q_fray_a = 0;
  std::uint64_t q_fray_b = 0;
  std::uint64_t q_close = 0;
  std::uint64_t triples = 0;
  double expected_closures = 0.0;
  double dfs_degree_ratio = 0.0;
  double wall_ms = 0.0;
  std::optional<Certificate> certificate;
  bool certificate_ok = false;
};

// The whole pipeline on a given oracle: DFS in round 0 to |P0| + 2 stub,
// both fray runs in round 0, closing in round 1.
TrialResult run_pipeline(EdgeOracle& oracle, const Params& params, const RunConstants& consts,
                         const TrialSettings& settings, std::uint64_t seed);
// run_pipeline on the cell's hashed two-round oracle with this seed.
TrialResult run_trial(const Cell& cell, const TrialSettings& settings, std::uint64_t seed);

struct TrialRecord {
  std::size_t cell = 0;
  int trial = 0;
  TrialResult result;
};

struct CellAggregate {
  Cell cell;
  int trials = 0;
  double mean_lc_over_n = 0.0;
  double sd_lc_over_n = 0.0;
  double dfs_rate = 0.0;
  double family_rate = 0.0;
  double close_rate = 0.0;
  double bound_rate = 0.0;
  double mean_degree_ratio = 0.0;
  double l1_over_n = 0.0;
};

struct ExperimentResults {
  std::vector<TrialRecord> records;
  std::vector<CellAggregate> aggregates;
  bool interrupted = false;
};

std::vector<CellAggregate> aggregate(const std::vector<Cell>& cells, const std::vector<TrialRecord>& records,
                                     const TrialSettings& settings);

// Runs every (cell, trial) on cfg.jobs threads. Records come back in
// (cell, trial) order. When `stop` becomes true no new trial starts and the
// finished ones are returned. `on_record` sees each record once its
// predecessors are done, in the same order.
ExperimentResults run_experiment(const ExperimentConfig& cfg, const std::atomic<bool>* stop = nullptr,
                                 const std::function<void(const TrialRecord&)>& on_record = {});

inline constexpr const char* kCsvSchema = "tightcycle.v1";
void write_csv_header(std::ostream& out);
void write_trial_row(std::ostream& out, const Cell& cell, const TrialRecord& record, const TrialSettings& settings);
// The trial column of an aggregate row holds the trial count.
void write_aggregate_row(std::ostream& out, std::size_t index, const CellAggregate& agg);
void write_results_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResults& results);

}  // namespace tightcycle
