#include "tightcycle/tight_path.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tightcycle {

VertexSet ExtendablePartition::block(int i) const {
  if (i == 0) return VertexSet(std::span<const Vertex>(order.data(), static_cast<std::size_t>(a)));
  const auto first = static_cast<std::size_t>(a + (i - 1) * width);
  return VertexSet(std::span<const Vertex>(order.data() + first, static_cast<std::size_t>(width)));
}

bool ExtendablePartition::valid() const {
  if (a < 1 || width < a || order.size() < static_cast<std::size_t>(a)) return false;
  if ((order.size() - a) % width != 0) return false;
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

ExtendablePartition ExtendablePartition::lexicographic(const JSet& J, const Params& params) {
  if (J.size() != params.j) throw std::invalid_argument("partition needs a j-set");
  return {std::vector<Vertex>(J.begin(), J.end()), params.a, params.width()};
}

ExtendablePartition ExtendablePartition::from_tail(std::span<const Vertex> tail, const Params& params) {
  if (static_cast<int>(tail.size()) != params.j) throw std::invalid_argument("tail must hold j vertices");
  return {std::vector<Vertex>(tail.begin(), tail.end()), params.a, params.width()};
}

std::vector<Child> child_jsets(const ExtendablePartition& part, const KSet& K, const Params& params) {
  const JSet J = part.jset();
  if (K.size() != params.k || !K.includes(J)) throw std::invalid_argument("K must be a k-set containing J");
  const int w = params.width();
  const int a = params.a;
  const VertexSet fresh = K.minus(J);

  // L = (C1, ..., Cr, K \ J); Z is drawn from L[0].
  std::vector<Vertex> rest(part.order.begin() + a, part.order.end());
  rest.insert(rest.end(), fresh.begin(), fresh.end());
  const VertexSet head(std::span<const Vertex>(rest.data(), static_cast<std::size_t>(w)));

  std::vector<Child> children;
  children.reserve(binomial(w, a));
  for_each_subset(head, a, [&](const VertexSet& Z) {
    Child child;
    child.fixed.assign(part.order.begin(), part.order.begin() + a);
    for (Vertex v : head)
      if (!Z.contains(v)) child.fixed.push_back(v);
    child.part.a = a;
    child.part.width = w;
    child.part.order.assign(Z.begin(), Z.end());
    child.part.order.insert(child.part.order.end(), rest.begin() + w, rest.end());
    child.end = child.part.jset();
    children.push_back(std::move(child));
  });
  return children;
}

TightPath TightPath::reversed() const {
  TightPath out = *this;
  std::reverse(out.seq.begin(), out.seq.end());
  return out;
}

TightPath TightPath::subpath(std::int64_t first, std::int64_t count) const {
  if (first < 0 || count < 0 || first + count > length()) throw std::out_of_range("subpath outside path");
  TightPath out{k, j, {}};
  const auto begin = seq.begin() + first * width();
  out.seq.assign(begin, begin + j + count * width());
  return out;
}

TightPath TightPath::extended(const Child& child) const {
  TightPath out{k, j, {}};
  out.seq.reserve(seq.size() + width());
  out.seq.assign(seq.begin(), seq.end() - j);
  out.seq.insert(out.seq.end(), child.fixed.begin(), child.fixed.end());
  out.seq.insert(out.seq.end(), child.part.order.begin(), child.part.order.end());
  return out;
}

TightPath trivial_path(const ExtendablePartition& part, int k) {
  return {k, static_cast<int>(part.order.size()), part.order};
}

std::vector<KSet> path_edges(const TightPath& path) {
  std::vector<KSet> edges;
  const std::int64_t len = path.length();
  edges.reserve(static_cast<std::size_t>(len));
  for (std::int64_t i = 0; i < len; ++i)
    edges.emplace_back(std::span<const Vertex>(path.seq.data() + i * path.width(), static_cast<std::size_t>(path.k)));
  return edges;
}

std::vector<KSet> cycle_edges(const TightCycle& cycle) {
  const std::size_t n = cycle.seq.size();
  const int w = cycle.k - cycle.j;
  std::vector<KSet> edges;
  if (n == 0 || n % w != 0) return edges;
  std::vector<Vertex> window(static_cast<std::size_t>(cycle.k));
  for (std::size_t start = 0; start < n; start += w) {
    for (int q = 0; q < cycle.k; ++q) window[q] = cycle.seq[(start + q) % n];
    std::vector<Vertex> sorted = window;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
    edges.emplace_back(window);
  }
  return edges;
}

namespace {

bool all_distinct(const std::vector<Vertex>& seq) {
  std::vector<Vertex> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

std::string path_defect(const TightPath& path, const EdgeTest& edge_test) {
  if (path.j < 1 || path.k <= path.j || path.k > kMaxUniformity) return "bad uniformity";
  if (path.seq.size() < static_cast<std::size_t>(path.j) || (path.seq.size() - path.j) % path.width() != 0)
    return "degenerate length";
  if (!all_distinct(path.seq)) return "repeated vertex";
  for (const KSet& e : path_edges(path))
    if (!edge_test(e)) return "wrong edge";
  return {};
}

std::string cycle_defect(const TightCycle& cycle, const EdgeTest& edge_test) {
  if (cycle.j < 1 || cycle.k <= cycle.j || cycle.k > kMaxUniformity) return "bad uniformity";
  const int w = cycle.k - cycle.j;
  if (cycle.seq.size() % w != 0 || cycle.seq.size() < static_cast<std::size_t>(cycle.k))
    return "degenerate length";
  if (!all_distinct(cycle.seq)) return "repeated vertex";
  const std::vector<KSet> edges = cycle_edges(cycle);
  std::unordered_set<KSet, VertexSetHash> seen(edges.begin(), edges.end());
  if (seen.size() != edges.size()) return "degenerate length";
  for (const KSet& e : edges)
    if (!edge_test(e)) return "wrong edge";
  return {};
}

bool validate_path(const TightPath& path, const EdgeTest& edge_test) { return path_defect(path, edge_test).empty(); }

bool validate_cycle(const TightCycle& cycle, const EdgeTest& edge_test) {
  return cycle_defect(cycle, edge_test).empty();
}

}  // namespace tightcycle
