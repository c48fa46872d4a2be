#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tightcycle/edge_oracle.hpp"
#include "tightcycle/params.hpp"
#include "tightcycle/path_store.hpp"
#include "tightcycle/tight_path.hpp"

namespace tightcycle {

enum class FrayStop { death, length, degree, many_ends };
std::string to_string(FrayStop stop);

// A starting end with the path leading to it; the path's tail is the end's
// order, so it also fixes the extendable partition.
struct Seed {
  TightPath path;
};

struct FrayOptions {
  // Stop once this many j-sets are discovered; 0 means max(4, ceil(eps^2 n^j)).
  std::uint64_t end_cap = 0;
  std::function<void(const KSet&, bool)> on_query;
  bool snapshots = false;
};

struct FrayEnd {
  JSet end;
  PathId path = 0;
  std::int64_t length = 0;
  int generation = 0;
};

struct SnapshotRow {
  std::uint64_t t = 0;
  std::uint64_t active = 0;
  std::uint64_t explored = 0;
  int generation = 0;
};

struct FrayOutcome {
  FrayStop stop = FrayStop::death;
  std::uint64_t queries = 0;
  std::uint64_t edges_found = 0;
  // Children produced by found edges, and how many of those were already
  // active (and so kept their first path).
  std::uint64_t children_produced = 0;
  std::uint64_t duplicate_children = 0;
  std::uint64_t explored = 0;
  std::int64_t longest = 0;
  int max_generation = 0;
  std::vector<double> degree_ratios;
  PathStore store{0, 0};
  // Every discovered j-set, seeds first, then in activation order.
  std::vector<FrayEnd> ends;
  std::vector<SnapshotRow> snapshots;

  TightPath path(std::size_t i) const { return store.materialize(ends[i].path); }
};

// Breadth-first search from `seeds` (sorted lexicographically), querying from
// the first active j-set every K whose new vertices avoid that end's path,
// P0', and `forb`, and that contains no explored j-set. Stops at the first
// of: empty queue (S1), an active end of length >= length_limit (S2), a
// degree limit (S3), or end_cap discovered j-sets (S4).
FrayOutcome fray(EdgeOracle& oracle, const Params& params, const RunConstants& consts, const TightPath& p0_prime,
                 std::vector<Seed> seeds, const std::vector<Vertex>& forb, std::int64_t length_limit, int round,
                 const FrayOptions& options = {});

std::uint64_t default_end_cap(const Params& params, const RunConstants& consts);

// Vertices outside `exclude` that lie on at least eps^2 (ln n)^3 n^(j-1) of
// the outcome's paths.
std::vector<Vertex> heavy_vertices(const FrayOutcome& outcome, const std::vector<std::uint8_t>& exclude,
                                   const Params& params, const RunConstants& consts);
double heavy_threshold(const Params& params, const RunConstants& consts);

struct FamilyOptions {
  // Edges trimmed from each end of P0'; 0 means default_stub().
  std::int64_t stub = 0;
  std::uint64_t end_cap = 0;
  // Second run forbids every vertex outside P0' used by the first run's
  // paths instead of only the heavy ones.
  bool forbid_all_first_run = false;
  std::function<void(const KSet&, bool)> on_query;
};

struct FamilyFailure {
  int run = 0;
  FrayStop stop = FrayStop::death;
  std::string reason;
};

struct AugmentingFamily {
  Params params;
  std::int64_t stub = 0;
  TightPath p0;
  TightPath p0_prime;
  JSet j_start;
  JSet j_end;
  // family A replaces j_start, family B replaces j_end. Each stored path
  // contains P0; A-paths run from P0's far end to A.
  FrayOutcome run_a;
  FrayOutcome run_b;
  std::vector<Vertex> heavy;
  std::uint64_t disjoint_pairs = 0;
  std::uint64_t queries_a = 0;
  std::uint64_t queries_b = 0;
  std::optional<FamilyFailure> failure;

  bool ok() const { return !failure.has_value(); }
  // Both runs reached S4; only the disjoint-pair guarantee may be missing.
  bool runs_complete() const { return run_a.stop == FrayStop::many_ends && run_b.stop == FrayStop::many_ends; }
  std::uint64_t size_a() const { return run_a.ends.size(); }
  std::uint64_t size_b() const { return run_b.ends.size(); }
  double disjoint_fraction() const;
};

// ceil((ln n)^2) capped so that a P0' of length ceil((1-delta/2) L1) + 2 stub
// still fits under (1-delta/3) L1, floored at 1.
std::int64_t default_stub(const Params& params, const RunConstants& consts);
std::int64_t p0_length(const Params& params, const RunConstants& consts);

AugmentingFamily build_family(EdgeOracle& oracle, const Params& params, const RunConstants& consts,
                              const TightPath& p0_prime, int round, const FamilyOptions& options = {});

// Pairs (A, B) whose paths share no vertex outside P0, by direct comparison.
std::uint64_t count_disjoint_pairs(const std::vector<std::vector<Vertex>>& a_sets,
                                   const std::vector<std::vector<Vertex>>& b_sets, int n);

// Vertices of each end's path that are not on P0.
std::vector<std::vector<Vertex>> extension_sets(const FrayOutcome& outcome, const std::vector<std::uint8_t>& on_p0);

void write_snapshots_csv(std::ostream& out, const std::vector<SnapshotRow>& rows);

}  // namespace tightcycle
