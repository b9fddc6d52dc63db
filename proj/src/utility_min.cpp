#include "recgame/utility_min.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "recgame/rng.hpp"

namespace recgame {

namespace {

// c_k = A[j][k] for any j > k (also A[k][j] by symmetry), k in [1, n-1].
double tail_coefficient(int n, int k) {
  return -1.0 / (static_cast<double>(n - k) * static_cast<double>(n - k + 1));
}

double diagonal(int n, int k) { return 2.0 / static_cast<double>(n - k + 1); }

}  // namespace

std::vector<double> utility_gradient(const std::vector<double>& sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n == 0) throw std::invalid_argument("utility_gradient: empty vector");
  // suffix[k] = sum_{m > k} sigma_m, prefix[k] = sum_{m < k} sigma_m * c_m.
  std::vector<double> grad(static_cast<std::size_t>(n));
  double suffix = 0.0;
  for (double v : sigma) suffix += v;
  double prefix = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double v = sigma[static_cast<std::size_t>(k) - 1];
    suffix -= v;
    grad[static_cast<std::size_t>(k) - 1] = diagonal(n, k) * v + prefix +
                                            (k < n ? tail_coefficient(n, k) * suffix : 0.0) - (k == n ? 1.0 : 0.0);
    if (k < n) prefix += tail_coefficient(n, k) * v;
  }
  return grad;
}

StationarySystem stationary_system(int n) {
  if (n < 1) throw std::invalid_argument("stationary_system: n must be positive");
  StationarySystem sys;
  sys.n = n;
  sys.matrix.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  sys.rhs.assign(static_cast<std::size_t>(n), 0.0);
  sys.rhs.back() = 1.0;
  for (int j = 1; j <= n; ++j)
    for (int m = 1; m <= n; ++m) {
      double v = j == m ? diagonal(n, j) : tail_coefficient(n, std::min(j, m));
      sys.matrix[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(m - 1)] = v;
    }
  return sys;
}

StationaryResult solve_stationary(int n, const StationaryOptions& options) {
  if (n < 1) throw std::invalid_argument("solve_stationary: n must be positive");

  // Forward elimination. Row k of the system is
  //   [c_1 ... c_{k-1} | D_k | c_k c_k ... c_k] sigma = b_k,
  // and eliminating column k subtracts the same multiple of row k from every
  // remaining row, so a pair of running corrections (applied to all entries
  // right of the pivot, and to the rhs) captures the whole elimination.
  std::vector<double> pivot(static_cast<std::size_t>(n));
  std::vector<double> tail(static_cast<std::size_t>(n), 0.0);
  std::vector<double> rhs(static_cast<std::size_t>(n));
  double entry_correction = 0.0;
  double rhs_correction = 0.0;
  for (int k = 1; k <= n; ++k) {
    const std::size_t idx = static_cast<std::size_t>(k) - 1;
    pivot[idx] = diagonal(n, k) - entry_correction;
    rhs[idx] = (k == n ? 1.0 : 0.0) - rhs_correction;
    if (pivot[idx] == 0.0) throw StationaryError("solve_stationary: zero pivot at row " + std::to_string(k));
    if (k < n) {
      tail[idx] = tail_coefficient(n, k) - entry_correction;
      const double factor = tail[idx] / pivot[idx];
      entry_correction += factor * tail[idx];
      rhs_correction += factor * rhs[idx];
    }
  }

  StationaryResult result;
  result.sigma.assign(static_cast<std::size_t>(n), 0.0);
  double suffix = 0.0;
  for (int k = n; k >= 1; --k) {
    const std::size_t idx = static_cast<std::size_t>(k) - 1;
    result.sigma[idx] = (rhs[idx] - tail[idx] * suffix) / pivot[idx];
    suffix += result.sigma[idx];
  }

  // Residual against the fully assembled system, using the same running
  // prefix/suffix trick in O(N).
  {
    double norm2 = 0.0;
    double sig_suffix = 0.0;
    for (double v : result.sigma) sig_suffix += v;
    double coef_prefix = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double v = result.sigma[static_cast<std::size_t>(k) - 1];
      sig_suffix -= v;
      double row = diagonal(n, k) * v + coef_prefix + (k < n ? tail_coefficient(n, k) * sig_suffix : 0.0) -
                   (k == n ? 1.0 : 0.0);
      norm2 += row * row;
      if (k < n) coef_prefix += tail_coefficient(n, k) * v;
    }
    result.residual = std::sqrt(norm2);
    if (result.residual > options.residual_tol)  // ||b||_2 = 1
      throw StationaryError("solve_stationary: residual " + decimal12(result.residual) + " exceeds tolerance at n = " +
                            std::to_string(n));
  }

  for (int k = 0; k < n; ++k) {
    double v = result.sigma[static_cast<std::size_t>(k)];
    double prev = k == 0 ? 0.0 : result.sigma[static_cast<std::size_t>(k) - 1];
    if (v < prev || v > 1.0)
      throw StationaryError("solve_stationary: stationary point infeasible at n = " + std::to_string(n) +
                            " (component " + std::to_string(k + 1) + " = " + decimal12(v) + ")");
  }

  result.utility = single_user_utility(result.sigma);

  if (options.minimality_samples > 0) {
    UniformRng rng(options.seed);
    std::vector<double> point(static_cast<std::size_t>(n));
    for (int s = 0; s < options.minimality_samples; ++s) {
      for (double& v : point) v = rng.next_unit();
      std::sort(point.begin(), point.end());
      if (single_user_utility(point) < result.utility - 1e-12)
        throw StationaryError("solve_stationary: sampled point below the stationary value at n = " +
                              std::to_string(n));
    }
  }
  return result;
}

std::vector<CurvePoint> min_utility_curve(int n_max, const CurveOptions& options) {
  if (n_max < 1) throw std::invalid_argument("min_utility_curve: n_max must be positive");
  std::vector<CurvePoint> curve(static_cast<std::size_t>(n_max));
  std::vector<std::string> failures(static_cast<std::size_t>(n_max));
  const bool parallel = options.execution == Execution::Parallel;

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int n = 1; n <= n_max; ++n) {
    StationaryOptions per_n;
    per_n.minimality_samples = options.minimality_samples;
    per_n.residual_tol = options.residual_tol;
    // Derived per-N seed: the same points get sampled no matter how the
    // loop is scheduled.
    UniformRng derived = UniformRng::for_chunk(options.seed, static_cast<std::uint64_t>(n));
    per_n.seed = derived.next_below(std::uint64_t(1) << 62);
    try {
      StationaryResult r = solve_stationary(n, per_n);
      curve[static_cast<std::size_t>(n) - 1] = {n, r.utility, 1.0 / r.utility, r.residual};
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(n) - 1] = e.what();
    }
  }
  for (const std::string& f : failures)
    if (!f.empty()) throw StationaryError(f);
  return curve;
}

}  // namespace recgame
