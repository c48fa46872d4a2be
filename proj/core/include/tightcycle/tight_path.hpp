#pragma once

#include <functional>
#include <string>
#include <span>
#include <vector>

#include "tightcycle/params.hpp"
#include "tightcycle/vertex_set.hpp"

namespace tightcycle {

using EdgeTest = std::function<bool(const KSet&)>;

// Ordered split (C0, C1, ..., Cr) of an end j-set, stored flat: `order` holds
// C0 (a vertices) followed by the r blocks of width k-j. Order inside a
// block carries no meaning.
struct ExtendablePartition {
  std::vector<Vertex> order;
  int a = 0;
  int width = 0;

  int blocks() const { return 1 + (static_cast<int>(order.size()) - a) / width; }
  VertexSet block(int i) const;
  JSet jset() const { return JSet(order); }
  bool valid() const;

  // C0 = the a smallest vertices, then blocks of increasing vertices.
  static ExtendablePartition lexicographic(const JSet& J, const Params& params);
  // The split implied by a path ending in `tail` (its last j vertices).
  static ExtendablePartition from_tail(std::span<const Vertex> tail, const Params& params);

  friend bool operator==(const ExtendablePartition&, const ExtendablePartition&) = default;
};

struct Child {
  JSet end;
  ExtendablePartition part;
  // Vertices that become interior when the path moves to `end`: C0 followed
  // by C1 \ Z. Exactly k-j of them.
  std::vector<Vertex> fixed;
};

// One child per a-subset Z of C1 (of K \ J when r = 0), in lexicographic
// order of Z. Throws std::invalid_argument unless J is inside K and |K| = k.
std::vector<Child> child_jsets(const ExtendablePartition& part, const KSet& K, const Params& params);

struct TightPath {
  int k = 0;
  int j = 0;
  std::vector<Vertex> seq;

  int width() const { return k - j; }
  std::int64_t length() const {
    return seq.size() < static_cast<std::size_t>(j) ? 0 : (static_cast<std::int64_t>(seq.size()) - j) / width();
  }
  std::span<const Vertex> tail() const { return {seq.data() + seq.size() - j, static_cast<std::size_t>(j)}; }
  JSet end() const { return JSet(tail()); }
  JSet start() const { return JSet(std::span<const Vertex>(seq.data(), static_cast<std::size_t>(j))); }
  TightPath reversed() const;
  // The sub-path made of edges [first, first + count).
  TightPath subpath(std::int64_t first, std::int64_t count) const;
  // Appends the edge leading to `child` (C0 ++ C1\Z, then the child's order).
  TightPath extended(const Child& child) const;

  friend bool operator==(const TightPath&, const TightPath&) = default;
};

struct TightCycle {
  int k = 0;
  int j = 0;
  std::vector<Vertex> seq;

  std::int64_t length() const { return static_cast<std::int64_t>(seq.size()) / (k - j); }
};

TightPath trivial_path(const ExtendablePartition& part, int k);

std::vector<KSet> path_edges(const TightPath& path);
std::vector<KSet> cycle_edges(const TightCycle& cycle);

bool validate_path(const TightPath& path, const EdgeTest& edge_test);
bool validate_cycle(const TightCycle& cycle, const EdgeTest& edge_test);

// Names the first structural defect, or returns an empty string.
std::string path_defect(const TightPath& path, const EdgeTest& edge_test);
std::string cycle_defect(const TightCycle& cycle, const EdgeTest& edge_test);

}  // namespace tightcycle
