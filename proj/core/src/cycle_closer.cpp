#include "tightcycle/cycle_closer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tightcycle {

std::vector<KSet> closing_windows(std::span<const Vertex> tail, std::span<const Vertex> R,
                                  std::span<const Vertex> head, const Params& params) {
  if (static_cast<int>(R.size()) != params.b) throw std::invalid_argument("R must hold b vertices");
  if (static_cast<int>(tail.size()) != params.j || static_cast<int>(head.size()) != params.j)
    throw std::invalid_argument("path ends must hold j vertices");
  // tail ++ R ++ head has 2j + b = j + s(k-j) vertices: exactly s windows.
  std::vector<Vertex> bridge(tail.begin(), tail.end());
  bridge.insert(bridge.end(), R.begin(), R.end());
  bridge.insert(bridge.end(), head.begin(), head.end());
  std::vector<KSet> windows;
  for (int q = 0; q < params.s; ++q)
    windows.emplace_back(std::span<const Vertex>(bridge.data() + q * params.width(), static_cast<std::size_t>(params.k)));
  return windows;
}

std::vector<KSet> closing_windows(const TightPath& path_ab, std::span<const Vertex> R, const Params& params) {
  if (path_ab.seq.size() < static_cast<std::size_t>(2 * params.j)) throw std::invalid_argument("path too short to close");
  for (Vertex r : R)
    if (std::find(path_ab.seq.begin(), path_ab.seq.end(), r) != path_ab.seq.end())
      throw std::invalid_argument("R meets the path");
  return closing_windows(path_ab.tail(), R, std::span<const Vertex>(path_ab.seq.data(), static_cast<std::size_t>(params.j)),
                         params);
}

TightPath join_paths(const AugmentingFamily& family, std::size_t a, std::size_t b) {
  TightPath joined = family.run_a.path(a).reversed();
  const TightPath pb = family.run_b.path(b);
  const std::size_t shared = family.p0.seq.size();
  joined.seq.insert(joined.seq.end(), pb.seq.begin() + static_cast<std::ptrdiff_t>(shared), pb.seq.end());
  return joined;
}

double expected_closures(std::uint64_t triples, const Params& params, double p_second) {
  return static_cast<double>(triples) * std::pow(p_second, params.s);
}

CloseOutcome try_close(const AugmentingFamily& family, EdgeOracle& oracle, const RunConstants& consts,
                       const CloseOptions& options) {
  const Params& params = family.params;
  CloseOutcome out;
  const std::size_t na = family.size_a();
  const std::size_t nb = family.size_b();
  if (na == 0 || nb == 0) return out;

  std::vector<std::uint8_t> on_p0(params.n, 0);
  for (Vertex v : family.p0.seq) on_p0[v] = 1;
  const auto ext_a = extension_sets(family.run_a, on_p0);
  const auto ext_b = extension_sets(family.run_b, on_p0);

  const std::size_t words = (na + 63) / 64;
  std::vector<std::vector<std::uint64_t>> holders(params.n);
  for (std::size_t a = 0; a < na; ++a)
    for (Vertex v : ext_a[a]) {
      auto& bits = holders[v];
      if (bits.empty()) bits.assign(words, 0);
      bits[a / 64] |= 1ULL << (a % 64);
    }

  std::mt19937_64 rng(mix64(options.seed ^ 0x2545f4914f6cdd1dULL));
  std::vector<std::size_t> order_a(na);
  std::vector<std::size_t> order_b(nb);
  std::iota(order_a.begin(), order_a.end(), 0);
  std::iota(order_b.begin(), order_b.end(), 0);
  std::shuffle(order_a.begin(), order_a.end(), rng);
  std::shuffle(order_b.begin(), order_b.end(), rng);

  // Ends as they sit in the joined path: A's order reversed at the front,
  // B's order at the back.
  auto head_of = [&](std::size_t a) {
    auto order = family.run_a.store.end_order(family.run_a.ends[a].path);
    return std::vector<Vertex>(order.rbegin(), order.rend());
  };
  auto tail_of = [&](std::size_t b) {
    auto order = family.run_b.store.end_order(family.run_b.ends[b].path);
    return std::vector<Vertex>(order.begin(), order.end());
  };

  const std::uint64_t budget = options.budget > 0 ? options.budget : ~0ULL;
  const double p2 = static_cast<double>(consts.p_second(params));
  const std::uint64_t tracked_before = oracle.tracked() ? oracle.queries(options.round) : 0;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(params.n - 1));
  std::vector<std::uint64_t> meeting(words);
  std::vector<Vertex> R;
  bool done = false;

  for (std::size_t bi = 0; bi < nb && !done; ++bi) {
    const std::size_t b = order_b[bi];
    std::fill(meeting.begin(), meeting.end(), 0);
    for (Vertex v : ext_b[b]) {
      const auto& bits = holders[v];
      if (bits.empty()) continue;
      for (std::size_t q = 0; q < words; ++q) meeting[q] |= bits[q];
    }
    const std::vector<Vertex> tail = tail_of(b);
    // Rotate so successive B's start at different A's.
    const std::size_t offset = bi % na;
    for (std::size_t ai = 0; ai < na; ++ai) {
      const std::size_t a = order_a[(ai + offset) % na];
      if (meeting[a / 64] >> (a % 64) & 1ULL) continue;
      if (out.triples >= budget) {
        done = true;
        break;
      }
      ++out.triples;
      R.clear();
      while (static_cast<int>(R.size()) < params.b) {
        const Vertex v = pick(rng);
        if (on_p0[v] || std::binary_search(ext_a[a].begin(), ext_a[a].end(), v) ||
            std::binary_search(ext_b[b].begin(), ext_b[b].end(), v) || std::find(R.begin(), R.end(), v) != R.end())
          continue;
        R.push_back(v);
      }
      const std::vector<Vertex> head = head_of(a);
      bool closes = true;
      for (const KSet& w : closing_windows(tail, R, head, params)) {
        ++out.queries;
        if (!oracle.query(w, options.round)) {
          closes = false;
          break;
        }
      }
      if (!closes) continue;
      TightPath joined = join_paths(family, a, b);
      TightCycle cycle{params.k, params.j, joined.seq};
      cycle.seq.insert(cycle.seq.end(), R.begin(), R.end());
      const int round = options.round;
      if (!validate_cycle(cycle, [&](const KSet& K) { return oracle.peek(K, round); }))
        throw std::logic_error("closed cycle failed validation");
      out.cycle = cycle;
      out.a = a;
      out.b = b;
      out.R = R;
      done = true;
      break;
    }
  }
  if (oracle.tracked()) out.distinct_windows = oracle.queries(options.round) - tracked_before;
  out.expected = expected_closures(out.triples, params, p2);
  return out;
}

}  // namespace tightcycle
