#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tightcycle/params.hpp"
#include "tightcycle/vertex_set.hpp"

namespace tightcycle {

enum class JStatus : std::uint8_t { active, explored };

// How the i-degree of one i-set grew: new starts add one each; jumps and
// pivots are counted once per found edge (each adds up to C(k-j, a)).
struct DegreeTally {
  std::uint32_t degree = 0;
  std::uint32_t starts = 0;
  std::uint32_t jumps = 0;
  std::uint32_t pivots = 0;
  std::uint64_t last_edge = ~0ULL;
};

// The j-uniform hypergraph of discovered (active or explored) j-sets with
// counters for every i-set, 1 <= i <= j-1. Delta_0 is the member count.
class DiscoveredGraph {
 public:
  // `limits[i]` is the threshold for Delta_i, i in [0, j-1].
  DiscoveredGraph(const Params& params, std::vector<double> limits);

  // Inserts J as active. `parent` and `edge` are null for a new start;
  // `edge_id` distinguishes found edges. Returns true when a counter touched
  // by this insertion reached its limit. Throws std::logic_error on a
  // duplicate.
  bool record(const JSet& J, const JSet* parent, const KSet* edge, std::uint64_t edge_id);

  void mark_explored(const JSet& J);

  bool contains(const JSet& J) const { return index_.count(J) > 0; }
  // -1 when J is not a member.
  std::int64_t find(const JSet& J) const;
  JStatus status(std::size_t member) const { return status_[member]; }
  std::size_t size() const { return members_.size(); }
  const std::vector<JSet>& members() const { return members_; }
  // Members containing v, in insertion order.
  const std::vector<std::uint32_t>& members_with(Vertex v) const { return by_vertex_[v]; }

  std::uint64_t degree(const VertexSet& I) const;
  DegreeTally tally(const VertexSet& I) const;
  std::uint64_t max_degree(int i) const;
  const std::vector<double>& limits() const { return limits_; }
  // max_degree(i) / limits[i] for i in [0, j-1].
  std::vector<double> degree_ratios() const;
  std::uint64_t starts() const { return starts_; }

 private:
  Params params_;
  std::vector<double> limits_;
  std::vector<JSet> members_;
  std::vector<JStatus> status_;
  std::unordered_map<JSet, std::uint32_t, VertexSetHash> index_;
  std::vector<std::vector<std::uint32_t>> by_vertex_;
  std::unordered_map<VertexSet, DegreeTally, VertexSetHash> tallies_;
  std::vector<std::uint64_t> max_degree_;
  std::uint64_t starts_ = 0;
};

}  // namespace tightcycle
