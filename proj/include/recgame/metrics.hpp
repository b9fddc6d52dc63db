#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "recgame/dynamics.hpp"
#include "recgame/game.hpp"
#include "recgame/mediator.hpp"
#include "recgame/scan.hpp"

namespace recgame {

// Total expected display count across players and users. Under the Shapley
// mediator this equals sum_i max_j sigma_i(X_j) (display mass efficiency).
template <typename T>
T social_welfare(const Game<T>& game, MediatorKind kind, const StrategyProfile& profile) {
  return payoff_vector(game, kind, profile).welfare;
}

// sigma_i(plain content): what a user gets when no player is displayed.
// 0 models worthless fallback content, 1 an optimal non-strategic catalog.
template <typename T>
struct UtilityConfig {
  T plain = numeric_traits<T>::zero();
};

// Expected satisfaction summed over users: displayed players weighted by
// their display probability, plain content by the leftover probability.
template <typename T>
T user_utility(const Game<T>& game, MediatorKind kind, const StrategyProfile& profile,
               const UtilityConfig<T>& config) {
  T total = numeric_traits<T>::zero();
  for (UserIndex i = 0; i < game.num_users(); ++i) {
    DisplayDistribution<T> dist = display_distribution(game, kind, profile, i);
    std::vector<T> sat = satisfaction_vector(game, profile, i);
    for (std::size_t j = 0; j < sat.size(); ++j) total += dist.per_player[j] * sat[j];
    total += dist.none_prob * config.plain;
  }
  return total;
}

// Outcome of a worst-equilibrium analysis. `unbounded` covers both failure
// modes: no pure equilibrium at all (no_pne_cycle then holds a witness loop
// of improving deviations) and a zero-value worst equilibrium under a
// positive optimum.
template <typename T>
struct PoAResult {
  T optimum;
  StrategyProfile optimum_witness;
  std::optional<T> worst_equilibrium;
  std::optional<StrategyProfile> worst_witness;
  std::vector<StrategyProfile> no_pne_cycle;

  bool unbounded() const {
    if (!worst_equilibrium) return true;
    return *worst_equilibrium == numeric_traits<T>::zero() && optimum > numeric_traits<T>::zero();
  }

  // Finite ratio optimum / worst equilibrium; nullopt when unbounded.
  // A game where both values are zero ratios to 1 by convention.
  std::optional<T> ratio() const {
    if (unbounded()) return std::nullopt;
    if (*worst_equilibrium == numeric_traits<T>::zero()) return numeric_traits<T>::one();
    return optimum / *worst_equilibrium;
  }
};

namespace detail {

// Max over profiles of eval(profile), via the chunked scan; returns the
// witnessing profile too (earliest on ties). eval must be pure.
template <typename T, typename Eval>
std::pair<StrategyProfile, T> best_profile(const ProfileSpace& space, Execution exec, Eval&& eval) {
  auto [index, value] = max_by<T>(space.size(), exec, [&](std::uint64_t i) { return eval(space.decode(i)); });
  return {space.decode(index), std::move(value)};
}

// Fills in the equilibrium side: the worst PNE under `metric`, or the
// no-PNE cycle evidence when none exists.
template <typename T, typename Metric>
PoAResult<T> against_worst_equilibrium(const Game<T>& game, MediatorKind kind, const ProfileSpace& space,
                                       std::uint64_t cap, Execution exec, Metric&& metric, T optimum,
                                       StrategyProfile optimum_witness) {
  PoAResult<T> out{std::move(optimum), std::move(optimum_witness), std::nullopt, std::nullopt, {}};
  std::vector<std::uint64_t> pne = enumerate_pne_indices(game, kind, space, exec);
  if (pne.empty()) {
    out.no_pne_cycle = find_better_response_cycle(game, kind, cap);
    return out;
  }
  for (std::uint64_t i : pne) {
    StrategyProfile profile = space.decode(i);
    T value = metric(profile);
    if (!out.worst_equilibrium || value < *out.worst_equilibrium) {
      out.worst_equilibrium = std::move(value);
      out.worst_witness = std::move(profile);
    }
  }
  return out;
}

}  // namespace detail

// Price of anarchy of the mediated game: optimal social welfare over the
// welfare of the worst pure equilibrium.
template <typename T>
PoAResult<T> price_of_anarchy(const Game<T>& game, MediatorKind kind, std::uint64_t cap = kDefaultProfileCap,
                              Execution exec = Execution::Parallel) {
  ProfileSpace space = ProfileSpace::of(game, cap);
  auto welfare = [&](const StrategyProfile& p) { return social_welfare(game, kind, p); };
  auto [witness, optimum] = detail::best_profile<T>(space, exec, welfare);
  return detail::against_worst_equilibrium(game, kind, space, cap, exec, welfare, std::move(optimum),
                                           std::move(witness));
}

// User-side price of anarchy. The benchmark in the numerator is the best
// utility any mediator could deliver: each user gets the better of the best
// offered item and plain content, maximized over profiles (with plain
// content worth 1 this is just n, achieved by showing no one anything).
template <typename T>
PoAResult<T> user_price_of_anarchy(const Game<T>& game, MediatorKind kind, const UtilityConfig<T>& config,
                                   std::uint64_t cap = kDefaultProfileCap, Execution exec = Execution::Parallel) {
  ProfileSpace space = ProfileSpace::of(game, cap);
  auto ideal = [&](const StrategyProfile& p) {
    T total = numeric_traits<T>::zero();
    for (UserIndex i = 0; i < game.num_users(); ++i) {
      T best = config.plain;
      for (const Strategy& s : p.choices) {
        T v = satisfaction_of_strategy(game, i, s);
        if (v > best) best = v;
      }
      total += best;
    }
    return total;
  };
  auto [witness, numerator] = detail::best_profile<T>(space, exec, ideal);
  return detail::against_worst_equilibrium(
      game, kind, space, cap, exec,
      [&](const StrategyProfile& p) { return user_utility(game, kind, p, config); }, std::move(numerator),
      std::move(witness));
}

}  // namespace recgame
