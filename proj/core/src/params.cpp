#include "tightcycle/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tightcycle {

Params derive_params(int n, int k, int j) {
  if (k < 2 || k > kMaxUniformityParam) throw std::invalid_argument("k must lie in [2, 12]");
  if (j < 1 || j > k - 1) throw std::invalid_argument("j must lie in [1, k-1]");
  if (n <= k) throw std::invalid_argument("n must exceed k");
  Params p;
  p.n = n;
  p.k = k;
  p.j = j;
  const int w = k - j;
  p.a = k % w == 0 ? w : k % w;
  p.r = (j + w - 1) / w - 1;
  p.s = p.r + 1;
  p.b = w - p.a;
  return p;
}

std::uint64_t Params::batch_size() const { return binomial(k - j, a); }

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (result > UINT64_MAX) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

long double binomial_ld(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0.0L;
  k = std::min(k, n - k);
  long double result = 1.0L;
  for (std::int64_t i = 1; i <= k; ++i) result = result * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return std::round(result);
}

long double p_zero(const Params& params) {
  return 1.0L / (binomial_ld(params.width(), params.a) * binomial_ld(params.n, params.width()));
}

double l_one(const Params& params, double c) {
  if (!(c > 1.0)) throw std::invalid_argument("c must exceed 1");
  const double w = params.width();
  return (1.0 - std::pow(c, -1.0 / w)) / w * params.n;
}

void RunConstants::validate(const Params& params) const {
  if (!(c > 1.0)) throw std::invalid_argument("c must exceed 1");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  if (!(eps > 0.0 && eps < delta)) throw std::invalid_argument("eps must lie in (0, delta)");
  if (!(omega > 1.0)) throw std::invalid_argument("omega must exceed 1");
  if (static_cast<int>(c_chain.size()) != params.j)
    throw std::invalid_argument("c_chain needs exactly j entries");
  if (!(c_chain[0] > 1.0)) throw std::invalid_argument("c_chain[0] must exceed 1");
  for (std::size_t i = 1; i < c_chain.size(); ++i)
    if (!(c_chain[i] > c_chain[i - 1])) throw std::invalid_argument("c_chain must be strictly increasing");
  if (!(eps * c_chain.back() < 1.0)) throw std::invalid_argument("eps * c_{j-1} must be below 1");
  if (p(params) > 1.0L) throw std::invalid_argument("edge probability exceeds 1");
}

std::vector<double> default_c_chain(int j, double eps) {
  std::vector<double> chain(static_cast<std::size_t>(j));
  for (int i = 0; i < j; ++i) chain[i] = 2.0 * std::pow(4.0, i);
  if (eps * chain.back() < 1.0) return chain;
  const double top = 0.9 / eps;
  if (j == 1 || top <= 2.0) return chain;
  const double ratio = std::pow(top / 2.0, 1.0 / (j - 1));
  for (int i = 0; i < j; ++i) chain[i] = 2.0 * std::pow(ratio, i);
  return chain;
}

double default_omega(int) { return kDefaultOmega; }

RunConstants default_constants(const Params& params, double c) {
  RunConstants consts;
  consts.c = c;
  consts.c_chain = default_c_chain(params.j, consts.eps);
  consts.omega = default_omega(params.n);
  return consts;
}

std::vector<double> degree_limits(const Params& params, const RunConstants& consts) {
  std::vector<double> limits(static_cast<std::size_t>(params.j));
  for (int i = 0; i < params.j; ++i)
    limits[i] = consts.eps * consts.c_chain[i] * std::pow(static_cast<double>(params.n), params.j - i);
  return limits;
}

long double ceil_tol(long double x) { return std::ceil(x - 1e-9L * std::max(1.0L, std::fabs(x))); }

std::int64_t log_sq_ceil(int n) {
  const long double l = std::log(static_cast<long double>(n));
  return static_cast<std::int64_t>(ceil_tol(l * l));
}

std::string describe(const Params& params) {
  std::ostringstream out;
  out << "n=" << params.n << " k=" << params.k << " j=" << params.j << " a=" << params.a << " r=" << params.r
      << " s=" << params.s << " b=" << params.b;
  return out.str();
}

}  // namespace tightcycle
