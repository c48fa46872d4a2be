#include "tightcycle/exact.hpp"

#include <algorithm>
#include <string>

namespace tightcycle {

namespace {

using Mask = std::uint32_t;

// Backtracking over vertex sequences. Positions between consecutive cut
// points (multiples of k-j, and k plus multiples of k-j) always share their
// windows, so each such segment is filled with an increasing run of vertices.
class Search {
 public:
  Search(const SmallInstance& inst, std::uint64_t budget)
      : n_(inst.n), k_(inst.k), j_(inst.j), w_(inst.k - inst.j), budget_(budget), is_edge_(std::size_t{1} << inst.n, 0) {
    for (const KSet& e : inst.edges) is_edge_[mask_of(e)] = 1;
    seq_.resize(static_cast<std::size_t>(n_));
  }

  BruteResult longest_path() {
    cycle_ = false;
    best_ = 0;
    best_seq_.clear();
    limit_ = (n_ - j_) / w_;
    fill(0);
    return {best_, best_seq_, steps_};
  }

  std::optional<BruteResult> longest_cycle() {
    cycle_ = true;
    best_ = 0;
    best_seq_.clear();
    limit_ = n_ / w_;
    if (limit_ * w_ <= k_) return std::nullopt;
    fill(0);
    if (best_ == 0) return std::nullopt;
    return BruteResult{best_, best_seq_, steps_};
  }

 private:
  static Mask mask_of(const KSet& e) {
    Mask m = 0;
    for (Vertex v : e) m |= Mask{1} << v;
    return m;
  }

  Mask window(int first, int count) const {
    Mask m = 0;
    for (int q = 0; q < k_; ++q) m |= Mask{1} << seq_[(first + q) % count];
    return m;
  }

  int next_cut(int count) const {
    int t = count + 1;
    while (t % w_ != 0 && (t - k_) % w_ != 0) ++t;
    return t;
  }

  // Window ending at `count`, if any, is an edge (and, for cycles, comes
  // after window 0 in mask order so each cycle is met in one rotation).
  bool window_ok(int count) {
    if (count < k_ || (count - k_) % w_ != 0) return true;
    const Mask m = window(count - k_, count);
    if (!is_edge_[m]) return false;
    if (cycle_) {
      if (count == k_) first_ = m;
      else if (m <= first_) return false;
    }
    return true;
  }

  bool closes(int count) const {
    // Windows that wrap past position `count`.
    for (int start = ((count - k_) / w_ + 1) * w_; start < count; start += w_) {
      const Mask m = window(start, count);
      if (!is_edge_[m] || m <= first_) return false;
    }
    return true;
  }

  void record(std::int64_t length, int count) {
    if (length <= best_) return;
    best_ = length;
    best_seq_.assign(seq_.begin(), seq_.begin() + count);
  }

  void fill(int count) {
    if (++steps_ > budget_) throw BudgetExceeded("brute-force step budget of " + std::to_string(budget_) + " exceeded");
    if (cycle_) {
      if (count % w_ == 0 && count > k_ && closes(count)) record(count / w_, count);
    } else if (count >= j_ && (count - j_) % w_ == 0) {
      const std::int64_t length = (count - j_) / w_;
      record(length, count);
      if (length + (n_ - count) / w_ <= best_) return;
    }
    if (best_ == limit_ || count == n_) return;
    const int size = next_cut(count) - count;
    if (count + size > n_) return;
    choose(count, count, size, 0);
  }

  void choose(int start, int pos, int size, Vertex from) {
    if (pos == start + size) {
      if (window_ok(pos)) fill(pos);
      return;
    }
    for (Vertex v = from; v < static_cast<Vertex>(n_); ++v) {
      if (used_ >> v & 1u) continue;
      seq_[pos] = v;
      used_ |= Mask{1} << v;
      choose(start, pos + 1, size, v + 1);
      used_ &= ~(Mask{1} << v);
      if (best_ == limit_) return;
    }
  }

  int n_, k_, j_, w_;
  std::uint64_t budget_;
  std::vector<std::uint8_t> is_edge_;
  std::vector<Vertex> seq_;
  Mask used_ = 0;
  Mask first_ = 0;
  bool cycle_ = false;
  std::int64_t best_ = 0;
  std::int64_t limit_ = 0;
  std::vector<Vertex> best_seq_;
  std::uint64_t steps_ = 0;
};

}  // namespace

SmallInstance make_instance(int n, int k, int j, std::vector<KSet> edges, int cap) {
  if (cap > kHardSmallCap) throw std::invalid_argument("small-instance cap above " + std::to_string(kHardSmallCap));
  if (n < 1 || n > cap) throw std::invalid_argument("n outside the small-instance cap");
  if (k < 2 || k > kMaxUniformity || j < 1 || j >= k) throw std::invalid_argument("need 1 <= j < k <= 12");
  for (const KSet& e : edges) {
    if (e.size() != k) throw std::invalid_argument("edge " + e.to_string() + " is not a k-set");
    if (e[e.size() - 1] >= static_cast<Vertex>(n)) throw std::invalid_argument("edge " + e.to_string() + " exceeds n");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {n, k, j, std::move(edges)};
}

SmallInstance make_instance(const EdgeList& list, int j, int cap) {
  return make_instance(list.n, list.k, j, list.edges, cap);
}

SmallInstance complete_instance(int n, int k, int j) {
  std::vector<KSet> edges;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int q = 0; q < k; ++q) idx[q] = q;
  while (k <= n) {
    std::vector<Vertex> vs(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q) vs[q] = static_cast<Vertex>(idx[q]);
    edges.push_back(KSet::from_sorted(vs));
    int q = k - 1;
    while (q >= 0 && idx[q] == n - k + q) --q;
    if (q < 0) break;
    ++idx[q];
    for (int z = q + 1; z < k; ++z) idx[z] = idx[z - 1] + 1;
  }
  return make_instance(n, k, j, std::move(edges), kHardSmallCap);
}

BruteResult brute_longest_path(const SmallInstance& inst, std::uint64_t budget) {
  return Search(inst, budget).longest_path();
}

std::optional<BruteResult> brute_longest_cycle(const SmallInstance& inst, std::uint64_t budget) {
  return Search(inst, budget).longest_cycle();
}

}  // namespace tightcycle
