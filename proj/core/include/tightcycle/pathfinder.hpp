#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tightcycle/discovered_graph.hpp"
#include "tightcycle/edge_oracle.hpp"
#include "tightcycle/params.hpp"
#include "tightcycle/tight_path.hpp"

namespace tightcycle {

enum class DfsStop { length, queries, degree, exhausted };
std::string to_string(DfsStop stop);

struct DfsOptions {
  // Path length that ends the search; 0 means ceil((1 - delta/3) L1(p)).
  std::int64_t target = 0;
  // Query cap; 0 means max(4, ceil(eps^2 n^k)).
  std::uint64_t max_queries = 0;
  // Used as the first start instead of a random j-set.
  std::optional<ExtendablePartition> first_start;
  // Seeds the choice of new starts.
  std::uint64_t start_seed = 0;
  // Called on every query; forces per-candidate evaluation.
  std::function<void(const KSet&, bool)> on_query;
  bool record_explorations = false;
  // Before a j-set's first query, count its eligible k-sets and how many are
  // edges (via peek). Exhausted j-sets alone give a biased branching sample:
  // a j-set only finishes before the stop if its subtree died out.
  bool probe_branching = false;
  bool trace = false;
};

// One fully explored j-set: its path length, how many j-sets it activated,
// and how many k-sets were queried from it.
struct Exploration {
  std::int64_t length = 0;
  std::uint32_t children = 0;
  std::uint64_t queried = 0;
};

// Branching of one j-set as seen when the search first reached it.
struct BranchProbe {
  std::int64_t length = 0;
  std::uint64_t eligible = 0;
  std::uint64_t children = 0;
};

struct TracePoint {
  std::uint64_t t = 0;
  std::int64_t length = 0;
  std::uint64_t discovered = 0;
  std::vector<double> ratios;
};

struct DfsOutcome {
  TightPath path;
  DfsStop stop = DfsStop::exhausted;
  std::uint64_t queries = 0;
  std::uint64_t edges_found = 0;
  std::uint64_t children_activated = 0;
  std::uint64_t starts = 0;
  std::uint64_t explored = 0;
  std::uint64_t discovered = 0;
  std::int64_t target = 0;
  std::vector<double> degree_ratios;
  std::vector<Exploration> explorations;
  std::vector<BranchProbe> probes;
  std::vector<TracePoint> trace;
};

// Depth-first search for a long j-tight path, querying from the last active
// j-set and stopping at the first of: a path of the target length, the query
// cap, a degree limit, or no neutral j-set left.
DfsOutcome run_pathfinder(EdgeOracle& oracle, const Params& params, const RunConstants& consts, int round,
                          const DfsOptions& options = {});

std::int64_t default_dfs_target(const Params& params, const RunConstants& consts);
std::uint64_t default_dfs_query_cap(const Params& params, const RunConstants& consts);

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace);

}  // namespace tightcycle
