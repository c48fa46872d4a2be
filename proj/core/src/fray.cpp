#include "tightcycle/fray.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <ostream>
#include <stdexcept>

#include "scanner.hpp"
#include "tightcycle/discovered_graph.hpp"

namespace tightcycle {

std::string to_string(FrayStop stop) {
  switch (stop) {
    case FrayStop::death:
      return "S1";
    case FrayStop::length:
      return "S2";
    case FrayStop::degree:
      return "S3";
    case FrayStop::many_ends:
      return "S4";
  }
  return "?";
}

std::uint64_t default_end_cap(const Params& params, const RunConstants& consts) {
  const long double cap =
      ceil_tol(static_cast<long double>(consts.eps) * consts.eps * std::pow(static_cast<long double>(params.n), params.j));
  return std::max<std::uint64_t>(4, static_cast<std::uint64_t>(cap));
}

FrayOutcome fray(EdgeOracle& oracle, const Params& params, const RunConstants& consts, const TightPath& p0_prime,
                 std::vector<Seed> seeds, const std::vector<Vertex>& forb, std::int64_t length_limit, int round,
                 const FrayOptions& options) {
  consts.validate(params);
  FrayOutcome out;
  out.store = PathStore(params.k, params.j);
  const std::uint64_t cap = options.end_cap > 0 ? options.end_cap : default_end_cap(params, consts);
  const detail::QueryHook* hook = options.on_query ? &options.on_query : nullptr;

  std::vector<std::uint8_t> base(params.n, 0);
  for (Vertex v : p0_prime.seq) base[v] = 1;
  for (Vertex v : forb) {
    if (v >= static_cast<Vertex>(params.n)) throw std::invalid_argument("forbidden vertex out of range");
    base[v] = 1;
  }

  std::sort(seeds.begin(), seeds.end(), [](const Seed& x, const Seed& y) { return x.path.end() < y.path.end(); });
  DiscoveredGraph disc(params, degree_limits(params, consts));
  std::deque<std::size_t> queue;
  bool stopped = false;
  auto stop_with = [&](FrayStop s) {
    out.stop = s;
    stopped = true;
  };

  for (const Seed& seed : seeds) {
    if (seed.path.k != params.k || seed.path.j != params.j) throw std::invalid_argument("seed has wrong uniformity");
    const JSet J = seed.path.end();
    if (disc.contains(J)) continue;
    FrayEnd e{J, out.store.add_root(seed.path), seed.path.length(), 0};
    out.longest = std::max(out.longest, e.length);
    queue.push_back(out.ends.size());
    out.ends.push_back(e);
    const bool hit = disc.record(J, nullptr, nullptr, 0);
    if (e.length >= length_limit)
      stop_with(FrayStop::length);
    else if (hit)
      stop_with(FrayStop::degree);
    else if (disc.size() >= cap)
      stop_with(FrayStop::many_ends);
    if (stopped) break;
  }

  std::uint64_t t = 0;
  std::vector<std::uint8_t> blocked = base;
  while (!stopped) {
    if (queue.empty()) {
      stop_with(FrayStop::death);
      break;
    }
    const std::size_t head = queue.front();
    const FrayEnd current = out.ends[head];
    std::vector<Vertex> marked;
    out.store.for_each_vertex(current.path, [&](Vertex v) {
      if (!blocked[v]) {
        blocked[v] = 1;
        marked.push_back(v);
      }
    });
    const ExtendablePartition part = ExtendablePartition::from_tail(out.store.end_order(current.path), params);

    detail::ScanRequest req;
    req.params = &params;
    req.J = current.end;
    req.blocked = &blocked;
    req.disc = &disc;
    req.explored_only = true;
    req.round = round;
    req.hook = hook;
    detail::ScanResult res = detail::scan(req, oracle, [&](const KSet& K) {
      ++out.edges_found;
      for (const Child& child : child_jsets(part, K, params)) {
        ++out.children_produced;
        if (disc.contains(child.end)) {
          ++out.duplicate_children;
          continue;
        }
        FrayEnd e{child.end, out.store.add_child(current.path, child), current.length + 1, current.generation + 1};
        out.longest = std::max(out.longest, e.length);
        out.max_generation = std::max(out.max_generation, e.generation);
        queue.push_back(out.ends.size());
        out.ends.push_back(e);
        const bool hit = disc.record(child.end, &current.end, &K, out.edges_found);
        if (e.length >= length_limit)
          stop_with(FrayStop::length);
        else if (hit)
          stop_with(FrayStop::degree);
        else if (disc.size() >= cap)
          stop_with(FrayStop::many_ends);
        if (stopped) return false;
      }
      return true;
    });
    for (Vertex v : marked) blocked[v] = 0;
    t += res.queried;
    if (stopped) break;
    disc.mark_explored(current.end);
    queue.pop_front();
    ++out.explored;
    if (options.snapshots) out.snapshots.push_back({t, queue.size(), out.explored, current.generation});
  }

  out.queries = t;
  out.degree_ratios = disc.degree_ratios();
  return out;
}

double heavy_threshold(const Params& params, const RunConstants& consts) {
  const double l = std::log(static_cast<double>(params.n));
  return consts.eps * consts.eps * l * l * l * std::pow(static_cast<double>(params.n), params.j - 1);
}

std::vector<Vertex> heavy_vertices(const FrayOutcome& outcome, const std::vector<std::uint8_t>& exclude,
                                   const Params& params, const RunConstants& consts) {
  std::vector<std::uint64_t> count(params.n, 0);
  std::vector<std::uint32_t> stamp(params.n, 0);
  std::uint32_t tick = 0;
  for (const FrayEnd& e : outcome.ends) {
    ++tick;
    outcome.store.for_each_vertex(e.path, [&](Vertex v) {
      if (exclude[v] || stamp[v] == tick) return;
      stamp[v] = tick;
      ++count[v];
    });
  }
  const double threshold = heavy_threshold(params, consts);
  std::vector<Vertex> heavy;
  for (int v = 0; v < params.n; ++v)
    if (static_cast<double>(count[v]) >= threshold) heavy.push_back(static_cast<Vertex>(v));
  return heavy;
}

std::int64_t p0_length(const Params& params, const RunConstants& consts) {
  return static_cast<std::int64_t>(ceil_tol((1.0 - consts.delta / 2.0) * l_one(params, consts.c)));
}

std::int64_t default_stub(const Params& params, const RunConstants& consts) {
  const std::int64_t log_sq = log_sq_ceil(params.n);
  const double room = (1.0 - consts.delta / 3.0) * l_one(params, consts.c) - static_cast<double>(p0_length(params, consts));
  const auto fit = static_cast<std::int64_t>(std::floor(room / 2.0));
  return std::max<std::int64_t>(1, std::min(log_sq, fit));
}

double AugmentingFamily::disjoint_fraction() const {
  const double total = static_cast<double>(size_a()) * static_cast<double>(size_b());
  return total > 0 ? static_cast<double>(disjoint_pairs) / total : 0.0;
}

std::vector<std::vector<Vertex>> extension_sets(const FrayOutcome& outcome, const std::vector<std::uint8_t>& on_p0) {
  std::vector<std::vector<Vertex>> sets;
  sets.reserve(outcome.ends.size());
  for (const FrayEnd& e : outcome.ends) {
    std::vector<Vertex> ext;
    outcome.store.for_each_vertex(e.path, [&](Vertex v) {
      if (!on_p0[v]) ext.push_back(v);
    });
    std::sort(ext.begin(), ext.end());
    sets.push_back(std::move(ext));
  }
  return sets;
}

std::uint64_t count_disjoint_pairs(const std::vector<std::vector<Vertex>>& a_sets,
                                   const std::vector<std::vector<Vertex>>& b_sets, int n) {
  // One bitset over A per vertex; a B-set meets exactly the A-sets in the
  // union of its vertices' bitsets.
  const std::size_t words = (a_sets.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> holders(n);
  for (std::size_t a = 0; a < a_sets.size(); ++a) {
    for (Vertex v : a_sets[a]) {
      auto& bits = holders[v];
      if (bits.empty()) bits.assign(words, 0);
      bits[a / 64] |= 1ULL << (a % 64);
    }
  }
  std::vector<std::uint64_t> hit(words);
  std::uint64_t disjoint = 0;
  for (const auto& b : b_sets) {
    std::fill(hit.begin(), hit.end(), 0);
    for (Vertex v : b) {
      const auto& bits = holders[v];
      if (bits.empty()) continue;
      for (std::size_t q = 0; q < words; ++q) hit[q] |= bits[q];
    }
    std::uint64_t meeting = 0;
    for (std::uint64_t x : hit) meeting += static_cast<std::uint64_t>(std::popcount(x));
    disjoint += a_sets.size() - meeting;
  }
  return disjoint;
}

AugmentingFamily build_family(EdgeOracle& oracle, const Params& params, const RunConstants& consts,
                              const TightPath& p0_prime, int round, const FamilyOptions& options) {
  AugmentingFamily fam;
  fam.params = params;
  fam.p0_prime = p0_prime;
  const std::int64_t h = options.stub > 0 ? options.stub : default_stub(params, consts);
  const std::int64_t m = p0_prime.length();
  if (m < 2 * h + 1) throw std::invalid_argument("P0' too short for its stubs");
  fam.stub = h;
  fam.p0 = p0_prime.subpath(h, m - 2 * h);
  fam.j_start = fam.p0.start();
  fam.j_end = fam.p0.end();

  // Start-side seeds end at the start of P0' minus i edges; their paths run
  // backwards from the far end of P0. End-side seeds mirror them.
  std::vector<Seed> start_seeds;
  std::vector<Seed> end_seeds;
  for (std::int64_t i = 0; i < h; ++i) {
    start_seeds.push_back({p0_prime.subpath(i, m - h - i).reversed()});
    end_seeds.push_back({p0_prime.subpath(h, m - h - i)});
  }
  const std::int64_t limit = fam.p0.length() + 2 * h;
  FrayOptions fopt;
  fopt.end_cap = options.end_cap;
  fopt.on_query = options.on_query;

  fam.run_a = fray(oracle, params, consts, p0_prime, start_seeds, {}, limit, round, fopt);
  fam.queries_a = fam.run_a.queries;
  std::vector<std::uint8_t> on_p0_prime(params.n, 0);
  for (Vertex v : p0_prime.seq) on_p0_prime[v] = 1;
  if (options.forbid_all_first_run) {
    std::vector<std::uint8_t> used(params.n, 0);
    for (const FrayEnd& e : fam.run_a.ends)
      fam.run_a.store.for_each_vertex(e.path, [&](Vertex v) {
        if (!on_p0_prime[v]) used[v] = 1;
      });
    for (int v = 0; v < params.n; ++v)
      if (used[v]) fam.heavy.push_back(static_cast<Vertex>(v));
  } else {
    fam.heavy = heavy_vertices(fam.run_a, on_p0_prime, params, consts);
  }

  fam.run_b = fray(oracle, params, consts, p0_prime, end_seeds, fam.heavy, limit, round, fopt);
  fam.queries_b = fam.run_b.queries;

  std::vector<std::uint8_t> on_p0(params.n, 0);
  for (Vertex v : fam.p0.seq) on_p0[v] = 1;
  fam.disjoint_pairs =
      count_disjoint_pairs(extension_sets(fam.run_a, on_p0), extension_sets(fam.run_b, on_p0), params.n);

  if (fam.run_a.stop != FrayStop::many_ends) {
    fam.failure = FamilyFailure{1, fam.run_a.stop, "first run stopped at " + to_string(fam.run_a.stop)};
  } else if (fam.run_b.stop != FrayStop::many_ends) {
    fam.failure = FamilyFailure{2, fam.run_b.stop, "second run stopped at " + to_string(fam.run_b.stop)};
  } else if (fam.disjoint_fraction() < 1.0 - consts.eps) {
    fam.failure = FamilyFailure{0, FrayStop::many_ends, "too few disjoint pairs"};
  }
  return fam;
}

void write_snapshots_csv(std::ostream& out, const std::vector<SnapshotRow>& rows) {
  out << "t,active,explored,generation\n";
  for (const SnapshotRow& r : rows) out << r.t << ',' << r.active << ',' << r.explored << ',' << r.generation << '\n';
}

}  // namespace tightcycle
