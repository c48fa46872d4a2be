#pragma once

// Candidate enumeration shared by the depth-first and breadth-first searches.
// From an end J we want every K = J + W, W a (k-j)-subset of the allowed
// vertices L, in lexicographic order of W, skipping K that contain another
// forbidding discovered j-set J'. Such K satisfy W >= J' \ J, so they are found
// up front: |J' \ J| = 1 removes a vertex from L, larger differences expand to
// explicit W tuples that the enumeration steps over.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tightcycle/discovered_graph.hpp"
#include "tightcycle/edge_oracle.hpp"
#include "tightcycle/params.hpp"

namespace tightcycle::detail {

using QueryHook = std::function<void(const KSet&, bool)>;

struct ScanRequest {
  const Params* params = nullptr;
  JSet J;
  // blocked[v] != 0 keeps v out of K \ J.
  const std::vector<std::uint8_t>* blocked = nullptr;
  const DiscoveredGraph* disc = nullptr;
  // Only explored members forbid (breadth-first); otherwise every member but J.
  bool explored_only = false;
  // Resume strictly after this W (sorted vertices); empty starts from scratch.
  std::vector<Vertex> after;
  int round = 0;
  const QueryHook* hook = nullptr;
  // Stop after this many queries (the scan then reports not exhausted).
  std::uint64_t budget = ~0ULL;
};

struct ScanResult {
  std::uint64_t queried = 0;
  bool exhausted = false;
  // Last queried W when the scan stopped early.
  std::vector<Vertex> last;
};

// on_edge(K) returns false to suspend the scan right after K.
ScanResult scan(const ScanRequest& request, EdgeOracle& oracle, const std::function<bool(const KSet&)>& on_edge);

// Number of K the scan would query now, without querying. Used by tests.
std::uint64_t count_eligible(const ScanRequest& request);

// Smallest (k-j)-subset of `allowed` (sorted) that is lexicographically
// greater than `after`; false when none exists. `after` need not lie in
// `allowed`.
bool next_combination_after(std::span<const Vertex> allowed, std::span<const Vertex> after,
                            std::vector<std::uint32_t>& idx);

struct Probe {
  std::uint64_t eligible = 0;
  std::uint64_t edges = 0;
};

// What a full scan from scratch would see now, answered with peek(): no
// oracle bookkeeping.
Probe probe(const ScanRequest& request, const EdgeOracle& oracle);

}  // namespace tightcycle::detail
