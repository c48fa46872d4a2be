#include "tightcycle/edge_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tightcycle {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t round_salt(std::uint64_t seed, int round) {
  return mix64(mix64(seed ^ 0x5851f42d4c957f2dULL) + kGolden * static_cast<std::uint64_t>(round + 1));
}

}  // namespace

EdgeOracle EdgeOracle::hashed(const Params& params, std::vector<double> round_probs, std::uint64_t seed,
                              MemoMode mode) {
  if (round_probs.empty()) throw std::invalid_argument("oracle needs at least one round");
  EdgeOracle o;
  o.n_ = params.n;
  o.k_ = params.k;
  o.seed_ = seed;
  o.mode_ = mode;
  for (double p : round_probs)
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("round probability outside [0, 1]");
  o.probs_ = std::move(round_probs);
  const int rounds = o.rounds();
  o.salts_.resize(rounds);
  o.thresholds_.resize(rounds);
  o.always_.resize(rounds);
  o.words_.resize(rounds);
  for (int r = 0; r < rounds; ++r) {
    o.salts_[r] = round_salt(seed, r);
    o.always_[r] = o.probs_[r] >= 1.0;
    const long double scaled = std::ldexp(static_cast<long double>(o.probs_[r]), 64);
    o.thresholds_[r] = o.always_[r] ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(scaled);
    o.words_[r].resize(o.n_);
    for (int v = 0; v < o.n_; ++v) o.words_[r][v] = mix64(o.salts_[r] + kGolden * static_cast<std::uint64_t>(v + 1));
  }
  o.samples_.assign(rounds, 0);
  o.hits_.assign(rounds, 0);
  return o;
}

EdgeOracle EdgeOracle::replay(std::vector<KSet> edges, int n, int k, int rounds) {
  if (rounds < 1) throw std::invalid_argument("oracle needs at least one round");
  EdgeOracle o;
  o.n_ = n;
  o.k_ = k;
  o.mode_ = MemoMode::tracked;
  o.probs_.assign(rounds, 0.0);
  for (const KSet& e : edges) o.check(e);
  auto set = std::make_shared<std::unordered_set<KSet, VertexSetHash>>(edges.begin(), edges.end());
  std::vector<KSet> list(set->begin(), set->end());
  std::sort(list.begin(), list.end());
  o.replay_list_ = std::make_shared<const std::vector<KSet>>(std::move(list));
  o.replay_ = std::move(set);
  o.samples_.assign(rounds, 0);
  o.hits_.assign(rounds, 0);
  return o;
}

const std::vector<KSet>& EdgeOracle::replay_edges() const {
  if (!replay_list_) throw std::logic_error("not a replay oracle");
  return *replay_list_;
}

void EdgeOracle::check(const KSet& K) const {
  if (K.size() != k_) throw std::invalid_argument("query needs a k-set");
  if (!K.empty() && K[K.size() - 1] >= static_cast<Vertex>(n_)) throw std::invalid_argument("vertex out of range");
}

bool EdgeOracle::decide(std::uint64_t word, int round) const {
  if (always_[round]) return true;
  return mix64(word ^ salts_[round]) < thresholds_[round];
}

bool EdgeOracle::draw(const KSet& K, int round) const {
  if (replay_) return replay_->count(K) > 0;
  std::uint64_t word = 0;
  for (Vertex v : K) word += words_[round][v];
  return decide(word, round);
}

bool EdgeOracle::peek(const KSet& K, int round) const {
  check(K);
  for (int r = 0; r <= round; ++r)
    if (draw(K, r)) return true;
  return false;
}

bool EdgeOracle::query(const KSet& K, int round) {
  check(K);
  if (round < 0 || round >= rounds()) throw std::out_of_range("round index");
  if (mode_ == MemoMode::tracked) {
    std::uint8_t& mask = sampled_[K];
    for (int r = 0; r <= round; ++r) {
      const std::uint8_t bit = static_cast<std::uint8_t>(1u << r);
      if (mask & bit) {
        if (r == round) ++hits_[r];
      } else {
        mask |= bit;
        ++samples_[r];
      }
    }
  } else {
    ++samples_[round];
  }
  for (int r = 0; r <= round; ++r)
    if (draw(K, r)) return true;
  return false;
}

std::uint64_t EdgeOracle::total_queries() const {
  std::uint64_t total = 0;
  for (std::uint64_t q : samples_) total += q;
  return total;
}

EdgeList read_edge_list(std::istream& in, int n) {
  EdgeList list;
  std::string line;
  int max_vertex = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Vertex> vertices;
    long long v = 0;
    while (fields >> v) {
      if (v < 0) throw std::invalid_argument("negative vertex on line " + std::to_string(lineno));
      vertices.push_back(static_cast<Vertex>(v));
    }
    if (!fields.eof()) throw std::invalid_argument("unparsable edge on line " + std::to_string(lineno));
    if (vertices.empty()) continue;
    if (list.k == 0) list.k = static_cast<int>(vertices.size());
    if (static_cast<int>(vertices.size()) != list.k)
      throw std::invalid_argument("edge size differs on line " + std::to_string(lineno));
    KSet e(vertices);
    max_vertex = std::max<int>(max_vertex, static_cast<int>(e[e.size() - 1]));
    list.edges.push_back(e);
  }
  list.n = n > 0 ? n : max_vertex + 1;
  if (max_vertex >= list.n) throw std::invalid_argument("edge vertex exceeds n");
  return list;
}

EdgeList read_edge_list_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list " + path);
  return read_edge_list(in, n);
}

void write_edge_list(std::ostream& out, const std::vector<KSet>& edges) {
  for (const KSet& e : edges) {
    for (int i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

}  // namespace tightcycle
