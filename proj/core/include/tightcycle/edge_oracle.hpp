#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tightcycle/params.hpp"
#include "tightcycle/vertex_set.hpp"

namespace tightcycle {

// Whether the oracle keeps an exact record of sampled (K, round) pairs.
// Untracked mode answers identically but only counts raw calls; it exists for
// runs that issue ~1e9 queries, where a memo would not fit in memory.
enum class MemoMode { tracked, untracked };

// Lazily sampled multi-round edge source. Round r draws K with probability
// round_probs[r]; query(K, r) is true iff K was drawn in some round <= r.
// Draws are keyed on (seed, K, round), so answers never depend on query order.
class EdgeOracle {
 public:
  // Throws std::invalid_argument on probabilities outside [0, 1].
  static EdgeOracle hashed(const Params& params, std::vector<double> round_probs, std::uint64_t seed,
                           MemoMode mode = MemoMode::tracked);
  // Membership in `edges`, for every round. Throws on malformed edges.
  // replay_edges() lists the distinct edges in sorted order.
  static EdgeOracle replay(std::vector<KSet> edges, int n, int k, int rounds = 2);

  bool query(const KSet& K, int round);

  int n() const { return n_; }
  int k() const { return k_; }
  int rounds() const { return static_cast<int>(probs_.size()); }
  const std::vector<double>& round_probs() const { return probs_; }
  std::uint64_t seed() const { return seed_; }
  bool is_replay() const { return replay_ != nullptr; }
  bool tracked() const { return mode_ == MemoMode::tracked; }
  const std::vector<KSet>& replay_edges() const;

  // Distinct (K, round) samples in tracked mode; raw calls otherwise.
  std::uint64_t queries(int round) const { return samples_.at(round); }
  // Repeated (K, round) evaluations. Always 0 in untracked mode.
  std::uint64_t memo_hits(int round) const { return hits_.at(round); }
  std::uint64_t total_queries() const;

  // Bulk path used by the scanners in untracked hashed mode: a k-set's word
  // is the wrapping sum of its vertex words, and decide() is its draw.
  bool fast_path(int round) const { return !replay_ && mode_ == MemoMode::untracked && round == 0; }
  std::uint64_t vertex_word(Vertex v, int round) const { return words_[round][v]; }
  bool decide(std::uint64_t word, int round) const;
  void account(int round, std::uint64_t calls) { samples_[round] += calls; }

  // Round-r draw only (not cumulative); no bookkeeping.
  bool draw(const KSet& K, int round) const;
  // Cumulative answer without bookkeeping, for re-validating certificates.
  bool peek(const KSet& K, int round) const;

 private:
  EdgeOracle() = default;
  void check(const KSet& K) const;

  int n_ = 0;
  int k_ = 0;
  std::uint64_t seed_ = 0;
  MemoMode mode_ = MemoMode::tracked;
  std::vector<double> probs_;
  std::vector<std::uint64_t> salts_;
  std::vector<std::uint64_t> thresholds_;
  std::vector<std::uint8_t> always_;
  std::vector<std::vector<std::uint64_t>> words_;
  std::shared_ptr<const std::vector<KSet>> replay_list_;
  std::shared_ptr<const std::unordered_set<KSet, VertexSetHash>> replay_;
  std::unordered_map<KSet, std::uint8_t, VertexSetHash> sampled_;
  std::vector<std::uint64_t> samples_;
  std::vector<std::uint64_t> hits_;
};

struct EdgeList {
  int n = 0;
  int k = 0;
  std::vector<KSet> edges;
};

// One edge per line, space-separated sorted vertex indices; '#' starts a
// comment. n defaults to the largest vertex + 1 when `n` is 0.
EdgeList read_edge_list(std::istream& in, int n = 0);
EdgeList read_edge_list_file(const std::string& path, int n = 0);
void write_edge_list(std::ostream& out, const std::vector<KSet>& edges);

}  // namespace tightcycle
