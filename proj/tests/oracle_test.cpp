#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "tightcycle/edge_oracle.hpp"
#include "tightcycle/tight_path.hpp"

namespace tightcycle {
namespace {

std::vector<KSet> all_ksets(int n, int k) {
  std::vector<KSet> out;
  std::vector<Vertex> all(n);
  for (int v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  std::vector<int> idx(k);
  for (int q = 0; q < k; ++q) idx[q] = q;
  while (true) {
    std::vector<Vertex> vs(k);
    for (int q = 0; q < k; ++q) vs[q] = all[idx[q]];
    out.push_back(KSet::from_sorted(vs));
    int q = k - 1;
    while (q >= 0 && idx[q] == n - k + q) --q;
    if (q < 0) break;
    ++idx[q];
    for (int z = q + 1; z < k; ++z) idx[z] = idx[z - 1] + 1;
  }
  return out;
}

TEST(Oracle, ExtremeProbabilities) {
  const Params params = derive_params(8, 3, 2);
  EdgeOracle full = EdgeOracle::hashed(params, {1.0}, 3);
  EdgeOracle empty = EdgeOracle::hashed(params, {0.0}, 3);
  for (const KSet& K : all_ksets(8, 3)) {
    EXPECT_TRUE(full.query(K, 0));
    EXPECT_FALSE(empty.query(K, 0));
  }
}

TEST(Oracle, RejectsBadInput) {
  const Params params = derive_params(8, 3, 2);
  EXPECT_THROW(EdgeOracle::hashed(params, {1.5}, 1), std::invalid_argument);
  EXPECT_THROW(EdgeOracle::hashed(params, {-0.1}, 1), std::invalid_argument);
  EXPECT_THROW(EdgeOracle::hashed(params, {}, 1), std::invalid_argument);
  EdgeOracle o = EdgeOracle::hashed(params, {0.5}, 1);
  EXPECT_THROW(o.query(KSet{1, 2}, 0), std::invalid_argument);
  EXPECT_THROW(o.query(KSet{1, 2, 8}, 0), std::invalid_argument);
  EXPECT_THROW(o.query(KSet{1, 2, 3}, 1), std::out_of_range);
  EXPECT_THROW(EdgeOracle::replay({KSet{1, 2, 9}}, 8, 3), std::invalid_argument);
}

TEST(Oracle, RepeatedQueryIsMemoHit) {
  const Params params = derive_params(20, 3, 2);
  EdgeOracle o = EdgeOracle::hashed(params, {0.5}, 11);
  const KSet K{2, 5, 7};
  const bool first = o.query(K, 0);
  EXPECT_EQ(o.query(K, 0), first);
  EXPECT_EQ(o.queries(0), 1u);
  EXPECT_EQ(o.memo_hits(0), 1u);
}

TEST(Oracle, CountersTrackDistinctPairs) {
  const Params params = derive_params(10, 3, 2);
  EdgeOracle o = EdgeOracle::hashed(params, {0.3, 0.3}, 5);
  const auto sets = all_ksets(10, 3);
  std::mt19937 rng(1);
  std::set<std::pair<KSet, int>> sampled;
  std::uint64_t calls = 0;
  for (int q = 0; q < 500; ++q) {
    const KSet& K = sets[rng() % sets.size()];
    const int round = static_cast<int>(rng() % 2);
    o.query(K, round);
    ++calls;
    for (int r = 0; r <= round; ++r) sampled.insert({K, r});
  }
  EXPECT_EQ(o.queries(0) + o.queries(1), sampled.size());
  EXPECT_GT(o.memo_hits(0) + o.memo_hits(1), 0u);
  EXPECT_LE(o.memo_hits(0) + o.memo_hits(1), calls);
}

TEST(Oracle, QueryIsCumulativeOverRounds) {
  const Params params = derive_params(12, 3, 2);
  EdgeOracle o = EdgeOracle::hashed(params, {0.0, 1.0}, 2);
  const KSet K{0, 4, 9};
  EXPECT_FALSE(o.query(K, 0));
  EXPECT_TRUE(o.query(K, 1));
  EdgeOracle p = EdgeOracle::hashed(params, {0.4, 0.2}, 8);
  for (const KSet& S : all_ksets(12, 3)) EXPECT_EQ(p.query(S, 1), p.draw(S, 0) || p.draw(S, 1));
}

TEST(Oracle, AnswersIgnoreQueryOrder) {
  const Params params = derive_params(14, 3, 2);
  auto sets = all_ksets(14, 3);
  EdgeOracle a = EdgeOracle::hashed(params, {0.3, 0.1}, 77);
  EdgeOracle b = EdgeOracle::hashed(params, {0.3, 0.1}, 77);
  std::vector<bool> forward;
  for (const KSet& K : sets) forward.push_back(a.query(K, 1));
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), std::mt19937(4));
  for (std::size_t i : order) EXPECT_EQ(b.query(sets[i], 1), forward[i]);
}

TEST(Oracle, DifferentSeedsDiffer) {
  const Params params = derive_params(14, 3, 2);
  EdgeOracle a = EdgeOracle::hashed(params, {0.5}, 1);
  EdgeOracle b = EdgeOracle::hashed(params, {0.5}, 2);
  int differ = 0;
  for (const KSet& K : all_ksets(14, 3)) differ += a.query(K, 0) != b.query(K, 0);
  EXPECT_GT(differ, 100);
}

TEST(Oracle, SuccessFractionWithinThreeSigma) {
  const Params params = derive_params(41, 3, 2);
  auto sets = all_ksets(41, 3);
  sets.resize(10000);
  const double p = 0.1;
  const double sigma = std::sqrt(p * (1 - p) / 10000.0);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    EdgeOracle o = EdgeOracle::hashed(params, {p}, seed);
    int hits = 0;
    for (const KSet& K : sets) hits += o.query(K, 0);
    EXPECT_NEAR(hits / 10000.0, p, 3 * sigma) << "seed " << seed;
  }
}

TEST(Oracle, PeekLeavesCountersAlone) {
  const Params params = derive_params(10, 3, 2);
  EdgeOracle o = EdgeOracle::hashed(params, {0.5, 0.5}, 9);
  for (const KSet& K : all_ksets(10, 3)) o.peek(K, 1);
  EXPECT_EQ(o.total_queries(), 0u);
}

TEST(Oracle, UntrackedAgreesWithTracked) {
  const Params params = derive_params(16, 4, 2);
  EdgeOracle t = EdgeOracle::hashed(params, {0.2, 0.1}, 31, MemoMode::tracked);
  EdgeOracle u = EdgeOracle::hashed(params, {0.2, 0.1}, 31, MemoMode::untracked);
  for (const KSet& K : all_ksets(16, 4)) {
    EXPECT_EQ(t.query(K, 1), u.query(K, 1));
    std::uint64_t word = 0;
    for (Vertex v : K) word += u.vertex_word(v, 0);
    EXPECT_EQ(u.decide(word, 0), u.draw(K, 0));
  }
  EXPECT_TRUE(u.fast_path(0));
  EXPECT_FALSE(u.fast_path(1));
  EXPECT_FALSE(t.fast_path(0));
}

TEST(ReplayOracle, FigurePathWindowsValidate) {
  TightPath path{7, 4, {}};
  for (Vertex v = 1; v <= 16; ++v) path.seq.push_back(v);
  EdgeOracle o = EdgeOracle::replay(path_edges(path), 17, 7);
  EXPECT_TRUE(validate_path(path, [&](const KSet& K) { return o.query(K, 0); }));
  std::swap(path.seq[0], path.seq[15]);
  EXPECT_FALSE(validate_path(path, [&](const KSet& K) { return o.query(K, 0); }));
}

TEST(ReplayOracle, EmptyAndComplete) {
  EdgeOracle empty = EdgeOracle::replay({}, 9, 3);
  EdgeOracle full = EdgeOracle::replay(all_ksets(9, 3), 9, 3);
  for (const KSet& K : all_ksets(9, 3)) {
    EXPECT_FALSE(empty.query(K, 0));
    EXPECT_TRUE(full.query(K, 1));
  }
}

TEST(ReplayOracle, EdgesAreSortedAndDistinct) {
  EdgeOracle o = EdgeOracle::replay({KSet{4, 5, 6}, KSet{0, 1, 2}, KSet{4, 5, 6}, KSet{0, 2, 3}}, 7, 3);
  const auto& edges = o.replay_edges();
  ASSERT_EQ(edges.size(), 3u);
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(EdgeListIo, RoundTripWithComments) {
  std::istringstream in("# header\n0 1 2\n\n3 4 5  # trailing\n2 1 6\n");
  const EdgeList list = read_edge_list(in);
  EXPECT_EQ(list.k, 3);
  EXPECT_EQ(list.n, 7);
  ASSERT_EQ(list.edges.size(), 3u);
  EXPECT_EQ(list.edges[2], KSet({1, 2, 6}));
  std::ostringstream out;
  write_edge_list(out, list.edges);
  std::istringstream again(out.str());
  EXPECT_EQ(read_edge_list(again, 7).edges, list.edges);
}

TEST(EdgeListIo, RejectsMalformedLines) {
  std::istringstream mixed("0 1 2\n0 1\n");
  EXPECT_THROW(read_edge_list(mixed), std::invalid_argument);
  std::istringstream junk("0 1 x\n");
  EXPECT_THROW(read_edge_list(junk), std::invalid_argument);
  std::istringstream big("0 1 9\n");
  EXPECT_THROW(read_edge_list(big, 5), std::invalid_argument);
}

}  // namespace
}  // namespace tightcycle
