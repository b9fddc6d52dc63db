#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "recgame/rational.hpp"
#include "recgame/scan.hpp"

namespace recgame {

class StationaryError : public std::runtime_error {
 public:
  explicit StationaryError(const std::string& what) : std::runtime_error(what) {}
};

// Expected satisfaction of a single user facing N players whose (ascending)
// satisfaction levels are sigma, under the Shapley mediator, with plain
// content worth 1:
//   U = sum_j sigma_j * P(j) + (1 - sigma_N),
//   P(j) = sum_{m<=j} (sigma_m - sigma_{m-1}) / (N - m + 1).
// Throws std::invalid_argument unless 0 <= sigma_1 <= ... <= sigma_N <= 1.
template <typename T>
T single_user_utility(const std::vector<T>& sigma) {
  if (sigma.empty()) throw std::invalid_argument("single_user_utility: empty vector");
  const int n = static_cast<int>(sigma.size());
  T prev = numeric_traits<T>::zero();
  for (const T& v : sigma) {
    if (v < prev) throw std::invalid_argument("single_user_utility: sigma must be ascending and non-negative");
    prev = v;
  }
  if (sigma.back() > numeric_traits<T>::one())
    throw std::invalid_argument("single_user_utility: sigma must lie in [0,1]");

  T utility = numeric_traits<T>::one() - sigma.back();
  T display_prefix = numeric_traits<T>::zero();
  T previous = numeric_traits<T>::zero();
  for (int m = 1; m <= n; ++m) {
    const T& level = sigma[static_cast<std::size_t>(m) - 1];
    display_prefix += (level - previous) / numeric_traits<T>::from_ratio(n - m + 1, 1);
    utility += level * display_prefix;
    previous = level;
  }
  return utility;
}

// Closed-form gradient of the above; matches central finite differences.
std::vector<double> utility_gradient(const std::vector<double>& sigma);

// The stationary condition grad U = 0 as a dense symmetric linear system
// A sigma = b. Off the diagonal A[j][m] = c_min(j,m) with
// c_k = -1/((N-k)(N-k+1)); the diagonal is 2/(N-k+1); b = e_N.
struct StationarySystem {
  int n = 0;
  std::vector<double> matrix;  // row-major, n*n
  std::vector<double> rhs;
};

StationarySystem stationary_system(int n);

struct StationaryOptions {
  // Random monotone points checked against U*; 0 disables the sampling.
  int minimality_samples = 10000;
  std::uint64_t seed = 0;
  double residual_tol = 1e-10;
};

struct StationaryResult {
  std::vector<double> sigma;  // ascending interior point
  double utility = 0.0;
  double residual = 0.0;  // ||A sigma - b||_2, checked against tol * ||b||_2
};

// Solves the stationary system directly. The constant-tail structure of A
// lets Gaussian elimination run in O(N) (every remaining row receives the
// same rank-one update), so no iterative method and no O(N^3) factorization
// is needed; the residual is still measured against the fully assembled
// system. Throws StationaryError on a residual above tol, a non-monotone or
// out-of-range solution, or a sampled point beating the claimed minimum.
StationaryResult solve_stationary(int n, const StationaryOptions& options = {});

struct CurvePoint {
  int n = 0;
  double u_star = 0.0;
  double upoa_bound = 0.0;  // 1 / u_star
  double residual = 0.0;
};

struct CurveOptions {
  int minimality_samples = 256;  // per N; the curve is the bulk caller
  std::uint64_t seed = 0;
  double residual_tol = 1e-10;
  Execution execution = Execution::Parallel;
};

// Minimum single-user utility for every N in [1, n_max]. Independent solves,
// chunked across threads; per-N seeds are derived from options.seed so the
// result does not depend on the thread count.
std::vector<CurvePoint> min_utility_curve(int n_max, const CurveOptions& options = {});

}  // namespace recgame
