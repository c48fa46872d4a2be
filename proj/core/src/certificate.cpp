#include "tightcycle/certificate.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tightcycle {

namespace {

constexpr const char* kMagic = "tightcycle-certificate";

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void malformed(int lineno, const std::string& what) {
  throw std::invalid_argument("certificate line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Certificate make_certificate(const EdgeOracle& oracle, const Params& params, const RunConstants& consts,
                             const TightCycle& cycle, int round) {
  Certificate cert;
  cert.n = params.n;
  cert.k = params.k;
  cert.j = params.j;
  cert.c = consts.c;
  cert.delta = consts.delta;
  cert.replay = oracle.is_replay();
  cert.round = round;
  if (cert.replay) {
    cert.edges = oracle.replay_edges();
  } else {
    cert.seed = oracle.seed();
    cert.probs = oracle.round_probs();
  }
  cert.cycle = cycle.seq;
  return cert;
}

void write_certificate(std::ostream& out, const Certificate& cert) {
  out << kMagic << ' ' << cert.version << '\n';
  out << "n " << cert.n << "\nk " << cert.k << "\nj " << cert.j << '\n';
  out << "c " << exact(cert.c) << "\ndelta " << exact(cert.delta) << '\n';
  if (cert.replay) {
    out << "oracle replay\nedges " << cert.edges.size() << '\n';
    write_edge_list(out, cert.edges);
  } else {
    out << "oracle hashed\nseed " << cert.seed << "\nprobs";
    for (double p : cert.probs) out << ' ' << exact(p);
    out << '\n';
  }
  out << "round " << cert.round << '\n';
  const int w = cert.k - cert.j;
  out << "length " << (w > 0 ? static_cast<std::int64_t>(cert.cycle.size()) / w : 0) << '\n';
  out << "cycle";
  for (Vertex v : cert.cycle) out << ' ' << v;
  out << '\n';
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

Certificate read_certificate(std::istream& in) {
  Certificate cert;
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) malformed(1, "empty input");
  ++lineno;
  {
    std::istringstream head(line);
    std::string magic;
    if (!(head >> magic >> cert.version) || magic != kMagic) malformed(lineno, "not a certificate");
    if (cert.version != kCertificateVersion) malformed(lineno, "unsupported version " + std::to_string(cert.version));
  }
  bool have_cycle = false;
  bool have_oracle = false;
  std::int64_t claimed_length = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    bool ok = true;
    if (key == "n") ok = static_cast<bool>(fields >> cert.n);
    else if (key == "k") ok = static_cast<bool>(fields >> cert.k);
    else if (key == "j") ok = static_cast<bool>(fields >> cert.j);
    else if (key == "c") ok = static_cast<bool>(fields >> cert.c);
    else if (key == "delta") ok = static_cast<bool>(fields >> cert.delta);
    else if (key == "seed") ok = static_cast<bool>(fields >> cert.seed);
    else if (key == "round") ok = static_cast<bool>(fields >> cert.round);
    else if (key == "length") ok = static_cast<bool>(fields >> claimed_length);
    else if (key == "oracle") {
      std::string kind;
      ok = static_cast<bool>(fields >> kind) && (kind == "hashed" || kind == "replay");
      cert.replay = kind == "replay";
      have_oracle = true;
    } else if (key == "probs") {
      double p;
      while (fields >> p) cert.probs.push_back(p);
      ok = fields.eof() && !cert.probs.empty();
    } else if (key == "edges") {
      std::size_t count = 0;
      ok = static_cast<bool>(fields >> count);
      for (std::size_t e = 0; ok && e < count; ++e) {
        if (!std::getline(in, line)) malformed(lineno, "edge list ends early");
        ++lineno;
        std::istringstream edge(line);
        std::vector<Vertex> vs;
        long long v;
        while (edge >> v) vs.push_back(static_cast<Vertex>(v));
        if (!edge.eof() || vs.empty()) malformed(lineno, "bad edge");
        cert.edges.emplace_back(vs);
      }
    } else if (key == "cycle") {
      long long v;
      while (fields >> v) {
        if (v < 0) malformed(lineno, "negative vertex");
        cert.cycle.push_back(static_cast<Vertex>(v));
      }
      ok = fields.eof();
      have_cycle = true;
    } else {
      malformed(lineno, "unknown key " + key);
    }
    if (!ok) malformed(lineno, "bad value for " + key);
  }
  if (!have_oracle || !have_cycle) malformed(lineno, "missing oracle or cycle");
  const int w = cert.k - cert.j;
  if (w > 0 && claimed_length >= 0 && claimed_length * w != static_cast<std::int64_t>(cert.cycle.size()))
    malformed(lineno, "length does not match the cycle");
  return cert;
}

Certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate " + path);
  return read_certificate(in);
}

Verdict check_certificate(const Certificate& cert) {
  Verdict verdict;
  Params params;
  try {
    params = derive_params(cert.n, cert.k, cert.j);
  } catch (const std::invalid_argument&) {
    verdict.failure = "bad uniformity";
    return verdict;
  }
  for (Vertex v : cert.cycle)
    if (v >= static_cast<Vertex>(cert.n)) {
      verdict.failure = "wrong edge";
      return verdict;
    }
  std::optional<EdgeOracle> oracle;
  try {
    if (cert.replay) {
      oracle = EdgeOracle::replay(cert.edges, cert.n, cert.k, cert.round + 1);
    } else {
      if (static_cast<int>(cert.probs.size()) <= cert.round || cert.round < 0) throw std::invalid_argument("round");
      oracle = EdgeOracle::hashed(params, cert.probs, cert.seed);
    }
  } catch (const std::invalid_argument&) {
    verdict.failure = "bad oracle";
    return verdict;
  }
  const TightCycle cycle{cert.k, cert.j, cert.cycle};
  const int round = cert.round;
  verdict.failure = cycle_defect(cycle, [&](const KSet& K) { return oracle->peek(K, round); });
  verdict.ok = verdict.failure.empty();
  verdict.length = cycle.length();
  if (cert.c > 1.0) verdict.bound = (1.0 - cert.delta) * l_one(params, cert.c);
  verdict.clears_bound = verdict.ok && static_cast<double>(verdict.length) >= verdict.bound;
  return verdict;
}

}  // namespace tightcycle
