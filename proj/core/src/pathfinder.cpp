#include "tightcycle/pathfinder.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include "scanner.hpp"
#include "tightcycle/path_store.hpp"

namespace tightcycle {

std::string to_string(DfsStop stop) {
  switch (stop) {
    case DfsStop::length:
      return "DFS1";
    case DfsStop::queries:
      return "DFS2";
    case DfsStop::degree:
      return "DFS3";
    case DfsStop::exhausted:
      return "exhausted";
  }
  return "?";
}

std::int64_t default_dfs_target(const Params& params, const RunConstants& consts) {
  return static_cast<std::int64_t>(ceil_tol((1.0 - consts.delta / 3.0) * l_one(params, consts.c)));
}

std::uint64_t default_dfs_query_cap(const Params& params, const RunConstants& consts) {
  const long double cap =
      ceil_tol(static_cast<long double>(consts.eps) * consts.eps * std::pow(static_cast<long double>(params.n), params.k));
  if (cap > 1.8e19L) return ~0ULL;
  return std::max<std::uint64_t>(4, static_cast<std::uint64_t>(cap));
}

namespace {

// Uniform neutral j-set, or nullopt when every j-set is discovered.
std::optional<JSet> random_neutral(const Params& p, const DiscoveredGraph& disc, std::mt19937_64& rng) {
  const long double total = binomial_ld(p.n, p.j);
  if (static_cast<long double>(disc.size()) >= total) return std::nullopt;
  if (static_cast<long double>(disc.size()) * 2 < total) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(p.n - 1));
    while (true) {
      std::vector<Vertex> vs;
      while (static_cast<int>(vs.size()) < p.j) {
        Vertex v = pick(rng);
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
      }
      JSet J(vs);
      if (!disc.contains(J)) return J;
    }
  }
  std::vector<JSet> neutral;
  std::vector<Vertex> all(p.n);
  for (int v = 0; v < p.n; ++v) all[v] = static_cast<Vertex>(v);
  // Only reached when n is tiny, so the full enumeration is cheap.
  std::vector<int> idx(p.j);
  for (int q = 0; q < p.j; ++q) idx[q] = q;
  while (true) {
    std::vector<Vertex> vs(p.j);
    for (int q = 0; q < p.j; ++q) vs[q] = all[idx[q]];
    JSet J = JSet::from_sorted(vs);
    if (!disc.contains(J)) neutral.push_back(J);
    int q = p.j - 1;
    while (q >= 0 && idx[q] == p.n - p.j + q) --q;
    if (q < 0) break;
    ++idx[q];
    for (int z = q + 1; z < p.j; ++z) idx[z] = idx[z - 1] + 1;
  }
  std::uniform_int_distribution<std::size_t> pick(0, neutral.size() - 1);
  return neutral[pick(rng)];
}

struct Entry {
  JSet J;
  PathId path;
  std::vector<Vertex> resume;
  bool started = false;
  std::uint32_t children = 0;
  std::uint64_t queried = 0;
};

}  // namespace

DfsOutcome run_pathfinder(EdgeOracle& oracle, const Params& params, const RunConstants& consts, int round,
                          const DfsOptions& options) {
  consts.validate(params);
  DfsOutcome out;
  out.target = options.target > 0 ? options.target : default_dfs_target(params, consts);
  const std::uint64_t cap = options.max_queries > 0 ? options.max_queries : default_dfs_query_cap(params, consts);
  const std::uint32_t batch = static_cast<std::uint32_t>(params.batch_size());

  DiscoveredGraph disc(params, degree_limits(params, consts));
  PathStore store(params.k, params.j);
  std::vector<Entry> stack;
  std::vector<std::uint8_t> blocked(params.n, 0);
  std::mt19937_64 rng(mix64(options.start_seed ^ 0xd1b54a32d192ed03ULL));
  const detail::QueryHook* hook = options.on_query ? &options.on_query : nullptr;

  PathId best = 0;
  bool have_best = false;
  std::uint64_t t = 0;
  bool stopped = false;

  auto note_path = [&](PathId id) {
    if (!have_best || store.length(id) > store.length(best)) {
      best = id;
      have_best = true;
    }
  };
  auto snapshot = [&](std::int64_t length) {
    if (options.trace) out.trace.push_back({t, length, disc.size(), disc.degree_ratios()});
  };

  while (!stopped) {
    if (stack.empty()) {
      std::optional<ExtendablePartition> part;
      if (options.first_start && out.starts == 0) {
        part = *options.first_start;
      } else if (auto J = random_neutral(params, disc, rng)) {
        part = ExtendablePartition::lexicographic(*J, params);
      }
      if (!part) {
        out.stop = DfsStop::exhausted;
        break;
      }
      const JSet J = part->jset();
      ++out.starts;
      const PathId id = store.add_root(trivial_path(*part, params.k));
      note_path(id);
      stack.push_back({J, id, {}, false, 0, 0});
      if (disc.record(J, nullptr, nullptr, 0)) {
        out.stop = DfsStop::degree;
        break;
      }
    }

    Entry& entry = stack.back();
    store.for_each_vertex(entry.path, [&](Vertex v) { blocked[v] = 1; });
    detail::ScanRequest req;
    req.params = &params;
    req.J = entry.J;
    req.blocked = &blocked;
    req.disc = &disc;
    req.explored_only = false;
    req.after = entry.resume;
    req.round = round;
    req.hook = hook;
    req.budget = cap - t;
    if (options.probe_branching && !entry.started) {
      const detail::Probe pr = detail::probe(req, oracle);
      out.probes.push_back({store.length(entry.path), pr.eligible, pr.edges * batch});
    }
    std::optional<KSet> found;
    detail::ScanResult res = detail::scan(req, oracle, [&](const KSet& K) {
      found = K;
      return false;
    });
    store.for_each_vertex(entry.path, [&](Vertex v) { blocked[v] = 0; });
    t += res.queried;
    entry.queried += res.queried;
    entry.started = true;

    if (found) {
      entry.resume = res.last;
      entry.children += batch;
      ++out.edges_found;
      const JSet parent = entry.J;
      const PathId parent_path = entry.path;
      const ExtendablePartition part = ExtendablePartition::from_tail(store.end_order(parent_path), params);
      bool degree_hit = false;
      bool length_hit = false;
      for (const Child& child : child_jsets(part, *found, params)) {
        const PathId id = store.add_child(parent_path, child);
        note_path(id);
        if (disc.record(child.end, &parent, &*found, out.edges_found)) degree_hit = true;
        ++out.children_activated;
        stack.push_back({child.end, id, {}, false, 0, 0});
        if (store.length(id) >= out.target) length_hit = true;
      }
      snapshot(store.length(parent_path) + 1);
      if (length_hit) {
        out.stop = DfsStop::length;
        stopped = true;
      } else if (degree_hit) {
        out.stop = DfsStop::degree;
        stopped = true;
      } else if (t >= cap) {
        out.stop = DfsStop::queries;
        stopped = true;
      }
      continue;
    }
    if (res.exhausted) {
      disc.mark_explored(entry.J);
      ++out.explored;
      if (options.record_explorations)
        out.explorations.push_back({store.length(entry.path), entry.children, entry.queried});
      stack.pop_back();
      if (t >= cap) {
        out.stop = DfsStop::queries;
        stopped = true;
      }
      continue;
    }
    out.stop = DfsStop::queries;
    stopped = true;
  }

  out.queries = t;
  out.discovered = disc.size();
  out.degree_ratios = disc.degree_ratios();
  if (have_best) out.path = store.materialize(best);
  return out;
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace) {
  std::size_t width = 0;
  for (const TracePoint& p : trace) width = std::max(width, p.ratios.size());
  out << "t,length,discovered";
  for (std::size_t i = 0; i < width; ++i) out << ",ratio" << i;
  out << '\n';
  for (const TracePoint& p : trace) {
    out << p.t << ',' << p.length << ',' << p.discovered;
    for (double r : p.ratios) out << ',' << r;
    out << '\n';
  }
}

}  // namespace tightcycle
