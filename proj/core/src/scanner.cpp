#include "scanner.hpp"

#include <algorithm>

namespace tightcycle::detail {

namespace {

using Tuple = std::array<std::uint32_t, kMaxUniformity>;

// Above this many expanded W tuples the scan checks j-subsets per candidate.
constexpr std::uint64_t kExpansionBudget = 4'000'000;

struct Plan {
  std::vector<Vertex> allowed;
  std::vector<Tuple> forbidden;
  bool per_candidate = false;
};

bool forbids(const ScanRequest& req, std::uint32_t member) {
  const DiscoveredGraph& disc = *req.disc;
  if (req.explored_only && disc.status(member) != JStatus::explored) return false;
  return disc.members()[member] != req.J;
}

template <class F>
void for_each_relevant(const ScanRequest& req, F&& f) {
  const Params& p = *req.params;
  const int need = 2 * p.j - p.k;
  const DiscoveredGraph& disc = *req.disc;
  if (need <= 0) {
    for (std::uint32_t id = 0; id < disc.size(); ++id)
      if (forbids(req, id)) f(disc.members()[id]);
    return;
  }
  for (Vertex v : req.J) {
    for (std::uint32_t id : disc.members_with(v)) {
      const JSet& other = disc.members()[id];
      // Visit each member once: from the smallest vertex it shares with J.
      Vertex first_shared = 0;
      for (Vertex u : req.J)
        if (other.contains(u)) {
          first_shared = u;
          break;
        }
      if (first_shared != v || !forbids(req, id)) continue;
      if (other.intersection_size(req.J) >= need) f(other);
    }
  }
}

Plan prepare(const ScanRequest& req) {
  const Params& p = *req.params;
  const int w = p.width();
  const auto& blocked = *req.blocked;
  std::vector<std::uint8_t> bad(p.n, 0);
  std::vector<VertexSet> patterns;
  for_each_relevant(req, [&](const JSet& other) {
    VertexSet d = other.minus(req.J);
    if (d.size() > w) return;
    for (Vertex v : d)
      if (blocked[v]) return;
    if (d.size() == 1)
      bad[d[0]] = 1;
    else
      patterns.push_back(d);
  });

  Plan plan;
  std::vector<std::int32_t> pos(p.n, -1);
  for (Vertex v = 0; v < static_cast<Vertex>(p.n); ++v) {
    if (blocked[v] || bad[v] || req.J.contains(v)) continue;
    pos[v] = static_cast<std::int32_t>(plan.allowed.size());
    plan.allowed.push_back(v);
  }
  const auto m = static_cast<std::int64_t>(plan.allowed.size());

  std::uint64_t expanded = 0;
  for (const VertexSet& d : patterns) {
    bool inside = true;
    for (Vertex v : d) inside = inside && pos[v] >= 0;
    if (!inside) continue;
    const int extra = w - d.size();
    const long double count = binomial_ld(m - d.size(), extra);
    if (count + expanded > static_cast<long double>(kExpansionBudget)) {
      plan.per_candidate = true;
      plan.forbidden.clear();
      return plan;
    }
    expanded += static_cast<std::uint64_t>(count);
    Tuple base{};
    for (int q = 0; q < d.size(); ++q) base[q] = static_cast<std::uint32_t>(pos[d[q]]);
    if (extra == 0) {
      plan.forbidden.push_back(base);
      continue;
    }
    // Extras range over L minus the pattern itself.
    std::vector<std::uint32_t> pool;
    pool.reserve(static_cast<std::size_t>(m));
    for (std::uint32_t i = 0; i < m; ++i)
      if (!std::binary_search(base.begin(), base.begin() + d.size(), i)) pool.push_back(i);
    std::vector<int> idx(extra);
    for (int q = 0; q < extra; ++q) idx[q] = q;
    const int pm = static_cast<int>(pool.size());
    while (true) {
      Tuple t = base;
      for (int q = 0; q < extra; ++q) t[d.size() + q] = pool[idx[q]];
      std::sort(t.begin(), t.begin() + w);
      plan.forbidden.push_back(t);
      int q = extra - 1;
      while (q >= 0 && idx[q] == pm - extra + q) --q;
      if (q < 0) break;
      ++idx[q];
      for (int z = q + 1; z < extra; ++z) idx[z] = idx[z - 1] + 1;
    }
  }
  std::sort(plan.forbidden.begin(), plan.forbidden.end());
  plan.forbidden.erase(std::unique(plan.forbidden.begin(), plan.forbidden.end()), plan.forbidden.end());
  return plan;
}

KSet assemble(const JSet& J, const std::vector<Vertex>& allowed, const std::vector<std::uint32_t>& idx, int w) {
  std::array<Vertex, kMaxUniformity> buf{};
  std::array<Vertex, kMaxUniformity> ws{};
  for (int q = 0; q < w; ++q) ws[q] = allowed[idx[q]];
  auto last = std::merge(J.begin(), J.end(), ws.begin(), ws.begin() + w, buf.begin());
  return KSet::from_sorted({buf.data(), static_cast<std::size_t>(last - buf.begin())});
}

bool contains_other(const ScanRequest& req, const KSet& K) {
  bool found = false;
  for_each_subset(K, req.params->j, [&](const VertexSet& S) {
    if (found || S == req.J) return;
    const std::int64_t id = req.disc->find(S);
    if (id >= 0 && forbids(req, static_cast<std::uint32_t>(id))) found = true;
  });
  return found;
}

// Walks W tuples from `idx` in lexicographic order. visit(idx, word) returns
// false to stop; `word` is the running vertex-word sum when `fast`.
template <bool Fast, class Visit>
bool enumerate(const Plan& plan, const ScanRequest& req, const EdgeOracle& oracle, std::vector<std::uint32_t>& idx,
               Visit&& visit) {
  const int w = req.params->width();
  const auto m = static_cast<std::uint32_t>(plan.allowed.size());
  std::vector<std::uint64_t> words;
  std::uint64_t base = 0;
  if constexpr (Fast) {
    words.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) words[i] = oracle.vertex_word(plan.allowed[i], req.round);
    for (Vertex v : req.J) base += oracle.vertex_word(v, req.round);
  }
  std::vector<std::uint64_t> sums(static_cast<std::size_t>(w), base);
  auto refresh = [&](int from) {
    if constexpr (Fast) {
      for (int d = from; d < w - 1; ++d) sums[d] = (d ? sums[d - 1] : base) + words[idx[d]];
    }
  };
  refresh(0);
  const auto& forb = plan.forbidden;
  std::size_t cursor = 0;
  auto prefix_less = [&](const Tuple& t) {
    for (int d = 0; d < w - 1; ++d)
      if (t[d] != idx[d]) return t[d] < idx[d];
    return false;
  };
  auto prefix_equal = [&](const Tuple& t) {
    for (int d = 0; d < w - 1; ++d)
      if (t[d] != idx[d]) return false;
    return true;
  };
  while (true) {
    while (cursor < forb.size() && prefix_less(forb[cursor])) ++cursor;
    const std::uint64_t prefix = w >= 2 ? sums[w - 2] : base;
    for (std::uint32_t i = idx[w - 1]; i < m; ++i) {
      while (cursor < forb.size() && prefix_equal(forb[cursor]) && forb[cursor][w - 1] < i) ++cursor;
      if (cursor < forb.size() && forb[cursor][w - 1] == i && prefix_equal(forb[cursor])) {
        ++cursor;
        continue;
      }
      idx[w - 1] = i;
      if (!visit(idx, prefix + (Fast ? words[i] : 0))) return false;
    }
    int d = w - 2;
    while (d >= 0 && idx[d] == m - w + d) --d;
    if (d < 0) return true;
    ++idx[d];
    for (int q = d + 1; q < w; ++q) idx[q] = idx[q - 1] + 1;
    refresh(d);
  }
}

bool first_tuple(const Plan& plan, const ScanRequest& req, std::vector<std::uint32_t>& idx) {
  const int w = req.params->width();
  if (static_cast<int>(plan.allowed.size()) < w) return false;
  if (req.after.empty()) {
    idx.resize(w);
    for (int q = 0; q < w; ++q) idx[q] = q;
    return true;
  }
  return next_combination_after(plan.allowed, req.after, idx);
}

}  // namespace

bool next_combination_after(std::span<const Vertex> allowed, std::span<const Vertex> after,
                            std::vector<std::uint32_t>& idx) {
  const int w = static_cast<int>(after.size());
  const auto m = static_cast<std::int64_t>(allowed.size());
  std::vector<std::int64_t> at(w, -1);
  for (int d = 0; d < w; ++d) {
    auto it = std::lower_bound(allowed.begin(), allowed.end(), after[d]);
    if (it != allowed.end() && *it == after[d]) at[d] = it - allowed.begin();
  }
  int present = 0;
  while (present < w && at[present] >= 0) ++present;
  for (int d = std::min(w - 1, present); d >= 0; --d) {
    const std::int64_t u = std::upper_bound(allowed.begin(), allowed.end(), after[d]) - allowed.begin();
    if (u + (w - 1 - d) >= m) continue;
    idx.assign(w, 0);
    for (int q = 0; q < d; ++q) idx[q] = static_cast<std::uint32_t>(at[q]);
    for (int q = d; q < w; ++q) idx[q] = static_cast<std::uint32_t>(u + (q - d));
    return true;
  }
  return false;
}

ScanResult scan(const ScanRequest& req, EdgeOracle& oracle, const std::function<bool(const KSet&)>& on_edge) {
  const Plan plan = prepare(req);
  const int w = req.params->width();
  ScanResult result;
  std::vector<std::uint32_t> idx;
  if (!first_tuple(plan, req, idx)) {
    result.exhausted = true;
    return result;
  }
  const bool fast = oracle.fast_path(req.round) && !plan.per_candidate && req.hook == nullptr;
  bool done;
  if (fast) {
    std::uint64_t since = 0;
    std::uint64_t left = req.budget;
    done = enumerate<true>(plan, req, oracle, idx, [&](const std::vector<std::uint32_t>& t, std::uint64_t word) {
      ++since;
      const bool last = --left == 0;
      if (!oracle.decide(word, req.round)) return !last;
      oracle.account(req.round, since);
      result.queried += since;
      since = 0;
      return on_edge(assemble(req.J, plan.allowed, t, w)) && !last;
    });
    oracle.account(req.round, since);
    result.queried += since;
  } else {
    done = enumerate<false>(plan, req, oracle, idx, [&](const std::vector<std::uint32_t>& t, std::uint64_t) {
      KSet K = assemble(req.J, plan.allowed, t, w);
      if (plan.per_candidate && contains_other(req, K)) return true;
      ++result.queried;
      const bool edge = oracle.query(K, req.round);
      if (req.hook) (*req.hook)(K, edge);
      const bool go_on = edge ? on_edge(K) : true;
      return go_on && result.queried < req.budget;
    });
  }
  result.exhausted = done;
  if (!done) {
    result.last.resize(w);
    for (int q = 0; q < w; ++q) result.last[q] = plan.allowed[idx[q]];
  }
  return result;
}

std::uint64_t count_eligible(const ScanRequest& req) {
  const Plan plan = prepare(req);
  const int w = req.params->width();
  std::vector<std::uint32_t> idx;
  if (!first_tuple(plan, req, idx)) return 0;
  std::uint64_t count = 0;
  EdgeOracle dummy = EdgeOracle::replay({}, req.params->n, req.params->k, 1);
  enumerate<false>(plan, req, dummy, idx, [&](const std::vector<std::uint32_t>& t, std::uint64_t) {
    if (!plan.per_candidate || !contains_other(req, assemble(req.J, plan.allowed, t, w))) ++count;
    return true;
  });
  return count;
}

Probe probe(const ScanRequest& req, const EdgeOracle& oracle) {
  const Plan plan = prepare(req);
  const int w = req.params->width();
  Probe out;
  std::vector<std::uint32_t> idx;
  if (!first_tuple(plan, req, idx)) return out;
  enumerate<false>(plan, req, oracle, idx, [&](const std::vector<std::uint32_t>& t, std::uint64_t) {
    KSet K = assemble(req.J, plan.allowed, t, w);
    if (plan.per_candidate && contains_other(req, K)) return true;
    ++out.eligible;
    if (oracle.peek(K, req.round)) ++out.edges;
    return true;
  });
  return out;
}

}  // namespace tightcycle::detail
