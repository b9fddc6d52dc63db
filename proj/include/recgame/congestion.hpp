#pragma once

#include <algorithm>
#include <vector>

#include "recgame/dynamics.hpp"
#include "recgame/game.hpp"

namespace recgame {

// Weighted congestion form of the Shapley-mediated game. The satisfaction
// levels of all offerable items split [0,1] into intervals; resource (i, m)
// stands for user i's interval (eps_{m-1}, eps_m] and pays each of its k
// users eps_m - eps_{m-1} shared k ways. A strategy occupies, per user, the
// prefix of intervals its satisfaction covers, so congestion payoffs
// reproduce the Shapley display probabilities summed over users.
template <typename T>
struct CongestionGame {
  Game<T> base;
  std::vector<T> breakpoints;  // ascending, breakpoints.front() = 0, .back() = 1

  int num_intervals() const { return static_cast<int>(breakpoints.size()) - 1; }

  // Highest m with eps_m <= sigma, i.e. how many intervals the strategy
  // occupies for this user (they form the prefix 1..m).
  int covered_intervals(UserIndex user, const Strategy& s) const {
    T sigma = satisfaction_of_strategy(base, user, s);
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), sigma);
    return static_cast<int>(it - breakpoints.begin()) - 1;
  }

  // The occupied resources of a strategy, as (user, interval) pairs with
  // intervals 1-based; explicit form of the prefix above.
  std::vector<std::pair<UserIndex, int>> strategy_resources(const Strategy& s) const {
    std::vector<std::pair<UserIndex, int>> out;
    for (UserIndex i = 0; i < base.num_users(); ++i)
      for (int m = 1; m <= covered_intervals(i, s); ++m) out.emplace_back(i, m);
    return out;
  }

  T interval_width(int m) const {
    return breakpoints[static_cast<std::size_t>(m)] - breakpoints[static_cast<std::size_t>(m) - 1];
  }
};

template <typename T>
CongestionGame<T> build_congestion_game(const Game<T>& game) {
  CongestionGame<T> cg{game, {}};
  std::vector<T>& points = cg.breakpoints;
  points.push_back(numeric_traits<T>::zero());
  points.push_back(numeric_traits<T>::one());
  for (const auto& player : game.players)
    for (ItemIndex l : player.menu)
      for (UserIndex i = 0; i < game.num_users(); ++i) points.push_back(game.sat[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return cg;
}

namespace detail {

// loads[i][m-1] = number of players whose offer covers user i's interval m.
template <typename T>
std::vector<std::vector<int>> interval_loads(const CongestionGame<T>& cg, const StrategyProfile& profile) {
  std::vector<std::vector<int>> loads(static_cast<std::size_t>(cg.base.num_users()),
                                      std::vector<int>(static_cast<std::size_t>(cg.num_intervals()), 0));
  for (UserIndex i = 0; i < cg.base.num_users(); ++i)
    for (const Strategy& s : profile.choices)
      for (int m = 1; m <= cg.covered_intervals(i, s); ++m) ++loads[static_cast<std::size_t>(i)][static_cast<std::size_t>(m) - 1];
  return loads;
}

}  // namespace detail

// Payoffs read off the congestion structure; agrees with
// payoff_vector(game, SHAPLEY, profile) on every profile.
template <typename T>
PayoffVector<T> congestion_payoffs(const CongestionGame<T>& cg, const StrategyProfile& profile) {
  auto loads = detail::interval_loads(cg, profile);
  PayoffVector<T> out;
  out.per_player.assign(profile.choices.size(), numeric_traits<T>::zero());
  out.welfare = numeric_traits<T>::zero();
  for (UserIndex i = 0; i < cg.base.num_users(); ++i) {
    for (std::size_t j = 0; j < profile.choices.size(); ++j) {
      for (int m = 1; m <= cg.covered_intervals(i, profile.choices[j]); ++m) {
        T share = cg.interval_width(m) /
                  numeric_traits<T>::from_ratio(loads[static_cast<std::size_t>(i)][static_cast<std::size_t>(m) - 1], 1);
        out.per_player[j] += share;
        out.welfare += share;
      }
    }
  }
  return out;
}

// Rosenthal potential of the congestion form: per resource, the partial sums
// of the shared weight. Equals potential_value(base, profile) everywhere.
template <typename T>
T congestion_potential(const CongestionGame<T>& cg, const StrategyProfile& profile) {
  auto loads = detail::interval_loads(cg, profile);
  T phi = numeric_traits<T>::zero();
  for (UserIndex i = 0; i < cg.base.num_users(); ++i) {
    for (int m = 1; m <= cg.num_intervals(); ++m) {
      int k = loads[static_cast<std::size_t>(i)][static_cast<std::size_t>(m) - 1];
      T width = cg.interval_width(m);
      for (int t = 1; t <= k; ++t) phi += width / numeric_traits<T>::from_ratio(t, 1);
    }
  }
  return phi;
}

}  // namespace recgame
