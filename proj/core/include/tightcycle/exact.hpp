#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tightcycle/edge_oracle.hpp"
#include "tightcycle/vertex_set.hpp"

namespace tightcycle {

inline constexpr int kDefaultSmallCap = 12;
inline constexpr int kHardSmallCap = 20;
inline constexpr std::uint64_t kDefaultStepBudget = 200'000'000;

// A fixed hypergraph small enough for exhaustive search.
struct SmallInstance {
  int n = 0;
  int k = 0;
  int j = 0;
  std::vector<KSet> edges;
};

// Throws std::invalid_argument on n above `cap`, bad (k, j) or malformed edges.
SmallInstance make_instance(int n, int k, int j, std::vector<KSet> edges, int cap = kDefaultSmallCap);
SmallInstance make_instance(const EdgeList& list, int j, int cap = kDefaultSmallCap);
SmallInstance complete_instance(int n, int k, int j);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BruteResult {
  std::int64_t length = 0;
  // A witness sequence; empty for a path of length 0.
  std::vector<Vertex> seq;
  std::uint64_t steps = 0;
};

// Longest j-tight path. Throws BudgetExceeded rather than answer after
// `budget` search steps.
BruteResult brute_longest_path(const SmallInstance& inst, std::uint64_t budget = kDefaultStepBudget);

// Longest j-tight cycle, or nullopt when there is none.
std::optional<BruteResult> brute_longest_cycle(const SmallInstance& inst, std::uint64_t budget = kDefaultStepBudget);

}  // namespace tightcycle
