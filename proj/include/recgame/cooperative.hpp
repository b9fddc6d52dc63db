#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "recgame/game.hpp"

namespace recgame {

// Value one user assigns to a coalition of players under a profile: the best
// satisfaction any member offers, 0 for the empty coalition. Bit j of
// `coalition` selects player j.
template <typename T>
T coalition_value(const Game<T>& game, const StrategyProfile& profile, UserIndex user, std::uint32_t coalition) {
  T best = numeric_traits<T>::zero();
  for (PlayerIndex j = 0; j < game.num_players(); ++j) {
    if (!(coalition >> j & 1u)) continue;
    T v = satisfaction_of_strategy(game, user, profile.choices[static_cast<std::size_t>(j)]);
    if (v > best) best = v;
  }
  return best;
}

// Shapley values of the induced cooperative game, straight from the
// definition: average marginal contribution over all N! player orders,
// enumerated in lexicographic order. Deliberately independent of the
// closed-form display distribution so the two can be checked against each
// other. Throws if the game has more than `cap` players.
template <typename T>
std::vector<T> shapley_bruteforce(const Game<T>& game, const StrategyProfile& profile, UserIndex user, int cap = 10) {
  const int n = game.num_players();
  if (n > cap) throw std::invalid_argument("shapley_bruteforce: too many players (cap " + std::to_string(cap) + ")");
  const std::vector<T> sat = satisfaction_vector(game, profile, user);

  std::vector<PlayerIndex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<T> sum(static_cast<std::size_t>(n), numeric_traits<T>::zero());
  std::uint64_t factorial = 0;
  do {
    T running = numeric_traits<T>::zero();
    for (PlayerIndex j : order) {
      const T& v = sat[static_cast<std::size_t>(j)];
      if (v > running) {
        sum[static_cast<std::size_t>(j)] += v - running;
        running = v;
      }
    }
    ++factorial;
  } while (std::next_permutation(order.begin(), order.end()));

  T denom = numeric_traits<T>::from_ratio(static_cast<long>(factorial), 1);
  for (T& s : sum) s /= denom;
  return sum;
}

// Counts, for the player of rank j among n, the permutation classes behind
// the closed-form display probabilities: b[r-1] is the number of orders in
// which every player preceding j has rank < r (r = 1..j), and a[r-1] the
// number in which the best predecessor has rank exactly r (r = 1..j-1).
// Enumerates all n! orders and verifies b_r = n!/(n-r+1) and
// a_r = b_{r+1} - b_r before returning; throws std::logic_error on mismatch.
struct PermutationCounts {
  std::vector<std::uint64_t> b;
  std::vector<std::uint64_t> a;
};

PermutationCounts permutation_counts(int n, int j);

}  // namespace recgame
