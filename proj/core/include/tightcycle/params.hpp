#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tightcycle {

// Arithmetic skeleton shared by every search. Invariants (checked by
// derive_params):
//   1 <= a <= k-j,  a == k (mod k-j)
//   a + r(k-j) = j,  s = r + 1 = ceil(j/(k-j))
//   b = k-j-a = s(k-j) - j
struct Params {
  int n = 0;
  int k = 0;
  int j = 0;
  int a = 0;
  int r = 0;
  int s = 0;
  int b = 0;

  // Number of fresh vertices one edge adds to a path.
  int width() const { return k - j; }
  // Vertex count of a path with `length` edges.
  std::int64_t path_vertices(std::int64_t length) const { return j + length * (k - j); }
  // Number of end j-sets one discovered edge activates.
  std::uint64_t batch_size() const;

  friend bool operator==(const Params&, const Params&) = default;
};

inline constexpr int kMaxUniformityParam = 12;

// Throws std::invalid_argument unless 1 <= j <= k-1, k <= 12 and n > k.
Params derive_params(int n, int k, int j);

// Exact binomial coefficient; throws std::overflow_error if it does not fit.
std::uint64_t binomial(std::int64_t n, std::int64_t k);
// Binomial coefficient in extended precision (no overflow for desk sizes).
long double binomial_ld(std::int64_t n, std::int64_t k);

// Threshold edge probability 1 / (C(k-j, a) C(n, k-j)).
long double p_zero(const Params& params);

// Crossover length (1 - c^(-1/(k-j)))/(k-j) * n. Throws unless c > 1.
double l_one(const Params& params, double c);

// Constants of one run. `c_chain[i]` is the degree constant for i-sets,
// i in [0, j-1].
struct RunConstants {
  double c = 2.0;
  double delta = 0.3;
  double eps = 0.05;
  std::vector<double> c_chain;
  double omega = 3.0;

  // Throws std::invalid_argument describing the first violated invariant.
  void validate(const Params& params) const;

  long double p(const Params& params) const { return static_cast<long double>(c) * p_zero(params); }
  // First (exploration) round probability (1 - 1/omega) p.
  long double p_first(const Params& params) const { return (1.0L - 1.0L / omega) * p(params); }
  // Sprinkled probability p - p_first.
  long double p_second(const Params& params) const { return p(params) - p_first(params); }
};

// Default desk-scale chain c_i = 2 * 4^i. When that would break eps * c_{j-1} < 1
// the chain is instead geometric from 2 up to 0.9/eps.
std::vector<double> default_c_chain(int j, double eps);

// Desk-scale sprinkling divisor. See README for why it is not max(3, ln ln n).
inline constexpr double kDefaultOmega = 12.0;
double default_omega(int n);

RunConstants default_constants(const Params& params, double c);

// Degree thresholds eps * c_i * n^(j-i) for i in [0, j-1].
std::vector<double> degree_limits(const Params& params, const RunConstants& consts);

// Ceiling that ignores floating-point noise just above an integer.
long double ceil_tol(long double x);

// ceil((ln n)^2), the stub length and augmentation slack.
std::int64_t log_sq_ceil(int n);

std::string describe(const Params& params);

}  // namespace tightcycle
