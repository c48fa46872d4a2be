#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tightcycle/edge_oracle.hpp"
#include "tightcycle/params.hpp"
#include "tightcycle/tight_path.hpp"

namespace tightcycle {

inline constexpr int kCertificateVersion = 1;

// Everything needed to rebuild the oracle and re-check a claimed cycle.
struct Certificate {
  int version = kCertificateVersion;
  int n = 0;
  int k = 0;
  int j = 0;
  double c = 0.0;
  double delta = 0.0;
  // Hashed oracles are rebuilt from seed and probabilities; replay oracles
  // carry their edge list.
  bool replay = false;
  std::uint64_t seed = 0;
  std::vector<double> probs;
  std::vector<KSet> edges;
  int round = 1;
  std::vector<Vertex> cycle;
};

Certificate make_certificate(const EdgeOracle& oracle, const Params& params, const RunConstants& consts,
                             const TightCycle& cycle, int round);

void write_certificate(std::ostream& out, const Certificate& cert);
std::string certificate_text(const Certificate& cert);
// Throws std::invalid_argument naming the malformed line.
Certificate read_certificate(std::istream& in);
Certificate read_certificate_file(const std::string& path);

struct Verdict {
  bool ok = false;
  // Empty on success; otherwise "wrong edge", "repeated vertex",
  // "degenerate length", "bad uniformity" or "bad oracle".
  std::string failure;
  std::int64_t length = 0;
  // (1 - delta) L1(c p0), and whether the cycle reaches it.
  double bound = 0.0;
  bool clears_bound = false;
};

// Rebuilds the oracle and re-queries every window of the cycle.
Verdict check_certificate(const Certificate& cert);

}  // namespace tightcycle
