#include "recgame/cooperative.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace recgame {

PermutationCounts permutation_counts(int n, int j) {
  if (n < 1 || n > 10) throw std::invalid_argument("permutation_counts: n must be in [1, 10]");
  if (j < 1 || j > n) throw std::invalid_argument("permutation_counts: j must be in [1, n]");

  // max_before[r] counts orders whose best predecessor of j has rank r,
  // with r = 0 meaning j comes first.
  std::vector<std::uint64_t> max_before(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::uint64_t factorial = 0;
  do {
    int best = 0;
    for (int rank : order) {
      if (rank == j) break;
      best = std::max(best, rank);
    }
    ++max_before[static_cast<std::size_t>(best)];
    ++factorial;
  } while (std::next_permutation(order.begin(), order.end()));

  PermutationCounts out;
  std::uint64_t below = 0;
  for (int r = 1; r <= j; ++r) {
    below += max_before[static_cast<std::size_t>(r) - 1];
    out.b.push_back(below);
    std::uint64_t expected = factorial / static_cast<std::uint64_t>(n - r + 1);
    if (below != expected)
      throw std::logic_error("permutation_counts: b_" + std::to_string(r) + " = " + std::to_string(below) +
                             ", expected n!/(n-r+1) = " + std::to_string(expected));
  }
  for (int r = 1; r < j; ++r) {
    out.a.push_back(max_before[static_cast<std::size_t>(r)]);
    std::uint64_t expected = out.b[static_cast<std::size_t>(r)] - out.b[static_cast<std::size_t>(r) - 1];
    if (out.a.back() != expected)
      throw std::logic_error("permutation_counts: a_" + std::to_string(r) + " = " + std::to_string(out.a.back()) +
                             ", expected b_{r+1} - b_r = " + std::to_string(expected));
  }
  return out;
}

}  // namespace recgame
