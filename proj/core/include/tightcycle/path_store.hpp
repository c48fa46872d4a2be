#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tightcycle/tight_path.hpp"

namespace tightcycle {

using PathId = std::uint32_t;

// Persistent tight paths: a child shares its parent's prefix and stores only
// the k-j vertices that became interior plus its ordered end.
class PathStore {
 public:
  PathStore(int k, int j) : k_(k), j_(j) {}

  PathId add_root(const TightPath& path) {
    Node node;
    node.parent = kNone;
    node.length = path.length();
    node.fixed_begin = pool_.size();
    pool_.insert(pool_.end(), path.seq.begin(), path.seq.end() - j_);
    node.end_begin = pool_.size();
    pool_.insert(pool_.end(), path.seq.end() - j_, path.seq.end());
    nodes_.push_back(node);
    return static_cast<PathId>(nodes_.size() - 1);
  }

  PathId add_child(PathId parent, const Child& child) {
    Node node;
    node.parent = parent;
    node.length = nodes_[parent].length + 1;
    node.fixed_begin = pool_.size();
    pool_.insert(pool_.end(), child.fixed.begin(), child.fixed.end());
    node.end_begin = pool_.size();
    pool_.insert(pool_.end(), child.part.order.begin(), child.part.order.end());
    nodes_.push_back(node);
    return static_cast<PathId>(nodes_.size() - 1);
  }

  std::int64_t length(PathId id) const { return nodes_[id].length; }
  std::span<const Vertex> end_order(PathId id) const {
    return {pool_.data() + nodes_[id].end_begin, static_cast<std::size_t>(j_)};
  }
  std::size_t size() const { return nodes_.size(); }

  // Calls f(v) for every vertex of the path, in no particular order.
  template <class F>
  void for_each_vertex(PathId id, F&& f) const {
    for (Vertex v : end_order(id)) f(v);
    for (PathId cur = id; cur != kNone; cur = nodes_[cur].parent) {
      const Node& node = nodes_[cur];
      for (std::size_t q = node.fixed_begin; q < node.end_begin; ++q) f(pool_[q]);
    }
  }

  TightPath materialize(PathId id) const {
    std::vector<PathId> chain;
    for (PathId cur = id; cur != kNone; cur = nodes_[cur].parent) chain.push_back(cur);
    TightPath path{k_, j_, {}};
    path.seq.reserve(static_cast<std::size_t>(j_ + nodes_[id].length * (k_ - j_)));
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const Node& node = nodes_[*it];
      path.seq.insert(path.seq.end(), pool_.begin() + node.fixed_begin, pool_.begin() + node.end_begin);
    }
    auto tail = end_order(id);
    path.seq.insert(path.seq.end(), tail.begin(), tail.end());
    return path;
  }

 private:
  static constexpr PathId kNone = ~PathId{0};
  struct Node {
    PathId parent = kNone;
    std::int64_t length = 0;
    std::size_t fixed_begin = 0;
    std::size_t end_begin = 0;
  };

  int k_;
  int j_;
  std::vector<Node> nodes_;
  std::vector<Vertex> pool_;
};

}  // namespace tightcycle
