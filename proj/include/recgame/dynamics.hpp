#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "recgame/game.hpp"
#include "recgame/mediator.hpp"
#include "recgame/rng.hpp"
#include "recgame/scan.hpp"

namespace recgame {

template <typename T>
struct PayoffVector {
  std::vector<T> per_player;  // expected display counts summed over users
  T welfare;                  // sum of the above
};

template <typename T>
PayoffVector<T> payoff_vector(const Game<T>& game, MediatorKind kind, const StrategyProfile& profile) {
  PayoffVector<T> out;
  out.per_player.assign(static_cast<std::size_t>(game.num_players()), numeric_traits<T>::zero());
  out.welfare = numeric_traits<T>::zero();
  for (UserIndex i = 0; i < game.num_users(); ++i) {
    DisplayDistribution<T> dist = display_distribution(game, kind, profile, i);
    for (std::size_t j = 0; j < out.per_player.size(); ++j) {
      out.per_player[j] += dist.per_player[j];
      out.welfare += dist.per_player[j];
    }
  }
  return out;
}

template <typename T>
T player_payoff(const Game<T>& game, MediatorKind kind, const StrategyProfile& profile, PlayerIndex j) {
  T total = numeric_traits<T>::zero();
  for (UserIndex i = 0; i < game.num_users(); ++i)
    total += display_distribution(game, kind, profile, i).per_player[static_cast<std::size_t>(j)];
  return total;
}

enum class ResponseRule { FirstImprovement, BestResponse };

// Strictly improving deviation for one player, or nullopt at a fixed point.
// FirstImprovement takes the earliest improving strategy in lexicographic
// menu order; BestResponse the earliest payoff-maximizing one. "Strictly"
// means an exact increase on rational games and a gain above 1e-9 on floats.
template <typename T>
std::optional<Strategy> better_response(const Game<T>& game, MediatorKind kind, const StrategyProfile& profile,
                                        PlayerIndex j, ResponseRule rule = ResponseRule::FirstImprovement) {
  const T current = player_payoff(game, kind, profile, j);
  StrategyProfile candidate = profile;
  std::optional<Strategy> best_move;
  T best = current;
  for (const Strategy& s : strategy_space(game, j)) {
    if (s == profile.choices[static_cast<std::size_t>(j)]) continue;
    candidate.choices[static_cast<std::size_t>(j)] = s;
    T value = player_payoff(game, kind, candidate, j);
    if (numeric_traits<T>::improves(value - best)) {
      if (rule == ResponseRule::FirstImprovement) return s;
      best = value;
      best_move = s;
    }
  }
  return best_move;
}

template <typename T>
bool is_pne(const Game<T>& game, MediatorKind kind, const StrategyProfile& profile) {
  for (PlayerIndex j = 0; j < game.num_players(); ++j)
    if (better_response(game, kind, profile, j)) return false;
  return true;
}

enum class Schedule { RoundRobin, Random };

template <typename T>
struct DynamicsStep {
  PlayerIndex player;
  Strategy from;
  Strategy to;
  T payoff_delta;
  T potential_delta;
};

template <typename T>
struct DynamicsTrace {
  StrategyProfile initial;
  std::vector<DynamicsStep<T>> steps;
  StrategyProfile terminal;
  bool converged = false;  // terminal profile verified deviation-free
};

// Exact potential of the Shapley-mediated game, in the per-user harmonic
// form: Phi = sum_i sum_{m=1}^{N} (sigma_i^m - sigma_i^{m-1}) * H_{N-m+1}.
// Unilateral payoff changes under the Shapley mediator equal the change in
// Phi. Defined for any profile regardless of which mediator is played.
template <typename T>
T potential_value(const Game<T>& game, const StrategyProfile& profile) {
  const int n = game.num_players();
  std::vector<T> harmonic(static_cast<std::size_t>(n) + 1, numeric_traits<T>::zero());
  for (int k = 1; k <= n; ++k)
    harmonic[static_cast<std::size_t>(k)] =
        harmonic[static_cast<std::size_t>(k) - 1] + numeric_traits<T>::from_ratio(1, k);
  T phi = numeric_traits<T>::zero();
  for (UserIndex i = 0; i < game.num_users(); ++i) {
    SortedLevels<T> levels = sorted_levels(game, profile, i);
    for (int m = 1; m <= n; ++m) {
      T width = levels.levels[static_cast<std::size_t>(m)] - levels.levels[static_cast<std::size_t>(m) - 1];
      phi += width * harmonic[static_cast<std::size_t>(n - m + 1)];
    }
  }
  return phi;
}

// Better-response dynamics. Each recorded step is a strictly improving
// unilateral deviation; the round-robin schedule cycles through players and
// the random schedule draws uniformly among players that can improve. Stops
// when no player can improve (converged) or after max_steps improvements.
template <typename T>
DynamicsTrace<T> run_dynamics(const Game<T>& game, MediatorKind kind, StrategyProfile profile, Schedule schedule,
                              std::uint64_t seed, std::uint64_t max_steps,
                              ResponseRule rule = ResponseRule::FirstImprovement) {
  validate_profile(game, profile);
  const int n = game.num_players();
  UniformRng rng(seed);
  DynamicsTrace<T> trace;
  trace.initial = profile;

  int next = 0;  // round-robin cursor
  while (trace.steps.size() < max_steps) {
    PlayerIndex mover = -1;
    std::optional<Strategy> move;
    if (schedule == Schedule::RoundRobin) {
      for (int probe = 0; probe < n; ++probe) {
        PlayerIndex j = (next + probe) % n;
        if ((move = better_response(game, kind, profile, j, rule))) {
          mover = j;
          next = (j + 1) % n;
          break;
        }
      }
    } else {
      std::vector<std::pair<PlayerIndex, Strategy>> improvable;
      for (PlayerIndex j = 0; j < n; ++j)
        if (auto m = better_response(game, kind, profile, j, rule)) improvable.emplace_back(j, *m);
      if (!improvable.empty()) {
        auto& pick = improvable[rng.next_below(improvable.size())];
        mover = pick.first;
        move = pick.second;
      }
    }
    if (mover < 0) {
      trace.converged = true;
      break;
    }

    DynamicsStep<T> step;
    step.player = mover;
    step.from = profile.choices[static_cast<std::size_t>(mover)];
    step.to = *move;
    T payoff_before = player_payoff(game, kind, profile, mover);
    T phi_before = potential_value(game, profile);
    profile.choices[static_cast<std::size_t>(mover)] = *move;
    step.payoff_delta = player_payoff(game, kind, profile, mover) - payoff_before;
    step.potential_delta = potential_value(game, profile) - phi_before;
    trace.steps.push_back(std::move(step));
  }
  trace.terminal = profile;
  if (!trace.converged) trace.converged = is_pne(game, kind, profile);
  return trace;
}

// All pure Nash equilibria, as indices into the profile space (ascending)
// and as decoded profiles. Throws CapExceeded if the space is too large.
template <typename T>
std::vector<std::uint64_t> enumerate_pne_indices(const Game<T>& game, MediatorKind kind, const ProfileSpace& space,
                                                 Execution exec = Execution::Parallel) {
  return filter_indices(space.size(), exec,
                        [&](std::uint64_t i) { return is_pne(game, kind, space.decode(i)); });
}

template <typename T>
std::vector<StrategyProfile> enumerate_pne(const Game<T>& game, MediatorKind kind,
                                           std::uint64_t cap = kDefaultProfileCap,
                                           Execution exec = Execution::Parallel) {
  ProfileSpace space = ProfileSpace::of(game, cap);
  std::vector<StrategyProfile> out;
  for (std::uint64_t i : enumerate_pne_indices(game, kind, space, exec)) out.push_back(space.decode(i));
  return out;
}

// Evidence that no equilibrium exists: follows deterministic round-robin
// first-improvement dynamics until a profile repeats and returns the loop
// (first profile of the returned list recurs after the last one). Only
// meaningful on games without a PNE, where the walk must cycle.
template <typename T>
std::vector<StrategyProfile> find_better_response_cycle(const Game<T>& game, MediatorKind kind,
                                                        std::uint64_t cap = kDefaultProfileCap) {
  ProfileSpace space = ProfileSpace::of(game, cap);
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<std::uint64_t> path;
  std::uint64_t at = 0;
  int next = 0;
  const int n = game.num_players();
  for (std::uint64_t guard = 0; guard <= space.size(); ++guard) {
    auto [it, fresh] = seen.emplace(at, path.size());
    if (!fresh) {
      std::vector<StrategyProfile> cycle;
      for (std::size_t k = it->second; k < path.size(); ++k) cycle.push_back(space.decode(path[k]));
      return cycle;
    }
    path.push_back(at);
    StrategyProfile profile = space.decode(at);
    PlayerIndex mover = -1;
    std::optional<Strategy> move;
    for (int probe = 0; probe < n; ++probe) {
      PlayerIndex j = (next + probe) % n;
      if ((move = better_response(game, kind, profile, j))) {
        mover = j;
        next = (j + 1) % n;
        break;
      }
    }
    if (mover < 0) return {};  // reached a PNE; no cycle to report
    profile.choices[static_cast<std::size_t>(mover)] = *move;
    at = space.index_of(profile);
  }
  return {};
}

}  // namespace recgame
