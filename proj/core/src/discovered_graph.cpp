#include "tightcycle/discovered_graph.hpp"

#include <stdexcept>

namespace tightcycle {

DiscoveredGraph::DiscoveredGraph(const Params& params, std::vector<double> limits)
    : params_(params), limits_(std::move(limits)), by_vertex_(params.n), max_degree_(params.j, 0) {
  if (static_cast<int>(limits_.size()) != params.j) throw std::invalid_argument("need one limit per i in [0, j-1]");
}

bool DiscoveredGraph::record(const JSet& J, const JSet* parent, const KSet* edge, std::uint64_t edge_id) {
  if (J.size() != params_.j) throw std::invalid_argument("discovered set must be a j-set");
  const auto id = static_cast<std::uint32_t>(members_.size());
  if (!index_.emplace(J, id).second) throw std::logic_error("j-set " + J.to_string() + " discovered twice");
  members_.push_back(J);
  status_.push_back(JStatus::active);
  for (Vertex v : J) by_vertex_[v].push_back(id);
  if (!parent) ++starts_;

  max_degree_[0] = members_.size();
  bool hit = static_cast<double>(members_.size()) >= limits_[0];
  for (int i = 1; i < params_.j; ++i) {
    for_each_subset(J, i, [&](const VertexSet& I) {
      DegreeTally& t = tallies_[I];
      ++t.degree;
      if (!parent) {
        ++t.starts;
      } else if (t.last_edge != edge_id) {
        t.last_edge = edge_id;
        if (parent->includes(I))
          ++t.pivots;
        else if (edge && edge->includes(I))
          ++t.jumps;
      }
      if (t.degree > max_degree_[i]) max_degree_[i] = t.degree;
      if (static_cast<double>(t.degree) >= limits_[i]) hit = true;
    });
  }
  return hit;
}

void DiscoveredGraph::mark_explored(const JSet& J) {
  auto it = index_.find(J);
  if (it == index_.end()) throw std::logic_error("exploring an undiscovered j-set");
  status_[it->second] = JStatus::explored;
}

std::int64_t DiscoveredGraph::find(const JSet& J) const {
  auto it = index_.find(J);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::uint64_t DiscoveredGraph::degree(const VertexSet& I) const {
  if (I.empty()) return members_.size();
  if (I.size() == params_.j) return contains(I) ? 1 : 0;
  auto it = tallies_.find(I);
  return it == tallies_.end() ? 0 : it->second.degree;
}

DegreeTally DiscoveredGraph::tally(const VertexSet& I) const {
  auto it = tallies_.find(I);
  return it == tallies_.end() ? DegreeTally{} : it->second;
}

std::uint64_t DiscoveredGraph::max_degree(int i) const { return max_degree_.at(i); }

std::vector<double> DiscoveredGraph::degree_ratios() const {
  std::vector<double> out(max_degree_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(max_degree_[i]) / limits_[i];
  return out;
}

}  // namespace tightcycle
