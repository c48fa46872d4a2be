#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tightcycle/edge_oracle.hpp"
#include "tightcycle/fray.hpp"
#include "tightcycle/params.hpp"
#include "tightcycle/tight_path.hpp"

namespace tightcycle {

// The s wrap-around windows of the cyclic sequence path_ab ++ R. Throws
// std::invalid_argument unless |R| = b and R avoids the path.
std::vector<KSet> closing_windows(const TightPath& path_ab, std::span<const Vertex> R, const Params& params);

// Same windows from the path's last j vertices and first j vertices only.
std::vector<KSet> closing_windows(std::span<const Vertex> tail, std::span<const Vertex> R,
                                  std::span<const Vertex> head, const Params& params);

// reverse(P_A) followed by the part of P_B beyond P0.
TightPath join_paths(const AugmentingFamily& family, std::size_t a, std::size_t b);

struct CloseOptions {
  // Admissible triples to try; 0 tries every admissible pair once.
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  // Oracle round the bridge edges are queried in (cumulative).
  int round = 1;
};

struct CloseOutcome {
  std::optional<TightCycle> cycle;
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Vertex> R;
  std::uint64_t triples = 0;
  std::uint64_t queries = 0;
  // Distinct bridge k-sets sampled, when the oracle tracks them.
  std::uint64_t distinct_windows = 0;
  double expected = 0.0;
};

// Tries admissible (A, B, R) in seeded random order until every bridge
// window is an edge or the budget runs out.
CloseOutcome try_close(const AugmentingFamily& family, EdgeOracle& oracle, const RunConstants& consts,
                       const CloseOptions& options = {});

// triples * p''^s.
double expected_closures(std::uint64_t triples, const Params& params, double p_second);

}  // namespace tightcycle
