#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "recgame/game.hpp"
#include "recgame/rng.hpp"

namespace recgame {

enum class MediatorKind { Top, Btl, None, Rand, Shapley };

inline const char* mediator_name(MediatorKind kind) {
  switch (kind) {
    case MediatorKind::Top: return "top";
    case MediatorKind::Btl: return "btl";
    case MediatorKind::None: return "none";
    case MediatorKind::Rand: return "rand";
    case MediatorKind::Shapley: return "shapley";
  }
  return "?";
}

std::optional<MediatorKind> mediator_from_name(const std::string& name);

// What one user gets shown under a profile: a probability per player plus
// the probability of falling back to plain (non-strategic) content.
template <typename T>
struct DisplayDistribution {
  std::vector<T> per_player;
  T none_prob = numeric_traits<T>::zero();

  T display_total() const {
    T sum = numeric_traits<T>::zero();
    for (const T& p : per_player) sum += p;
    return sum;
  }
};

// Display probabilities as the Shapley values of the induced cooperative
// game, by the telescoping closed form over sorted levels:
//   P(j) = sum_{m=1}^{rank(j)} (sigma^m - sigma^{m-1}) / (N - m + 1).
// Duplicated levels contribute zero-width terms, so ties come out equal.
template <typename T>
DisplayDistribution<T> shapley_distribution(const SortedLevels<T>& levels) {
  const int n = static_cast<int>(levels.rank.size());
  std::vector<T> prefix(static_cast<std::size_t>(n) + 1, numeric_traits<T>::zero());
  for (int m = 1; m <= n; ++m) {
    T width = levels.levels[static_cast<std::size_t>(m)] - levels.levels[static_cast<std::size_t>(m) - 1];
    prefix[static_cast<std::size_t>(m)] =
        prefix[static_cast<std::size_t>(m) - 1] + width / numeric_traits<T>::from_ratio(n - m + 1, 1);
  }
  DisplayDistribution<T> out;
  out.per_player.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    out.per_player.push_back(prefix[static_cast<std::size_t>(levels.rank[static_cast<std::size_t>(j)])]);
  out.none_prob = numeric_traits<T>::one() - levels.levels.back();
  return out;
}

// Display distribution of each mediator on one user's satisfaction vector.
// Every kind falls back to plain content with probability 1 when no offer
// satisfies the user at all (the all-zero vector).
template <typename T>
DisplayDistribution<T> mediate(MediatorKind kind, const std::vector<T>& sat) {
  const std::size_t n = sat.size();
  const T zero = numeric_traits<T>::zero();
  DisplayDistribution<T> out;
  out.per_player.assign(n, zero);

  T max = zero;
  T sum = zero;
  std::size_t positive = 0;
  for (const T& v : sat) {
    if (v > max) max = v;
    sum += v;
    if (v > zero) ++positive;
  }
  if (max == zero) {
    out.none_prob = numeric_traits<T>::one();
    return out;
  }

  switch (kind) {
    case MediatorKind::Top: {
      std::size_t leaders = 0;
      for (const T& v : sat)
        if (v == max) ++leaders;
      T share = numeric_traits<T>::one() / numeric_traits<T>::from_ratio(static_cast<long>(leaders), 1);
      for (std::size_t j = 0; j < n; ++j)
        if (sat[j] == max) out.per_player[j] = share;
      break;
    }
    case MediatorKind::Btl: {
      for (std::size_t j = 0; j < n; ++j) out.per_player[j] = sat[j] / sum;
      break;
    }
    case MediatorKind::None: {
      out.none_prob = numeric_traits<T>::one();
      break;
    }
    case MediatorKind::Rand: {
      T share = numeric_traits<T>::one() / numeric_traits<T>::from_ratio(static_cast<long>(positive), 1);
      for (std::size_t j = 0; j < n; ++j)
        if (sat[j] > zero) out.per_player[j] = share;
      break;
    }
    case MediatorKind::Shapley: {
      return shapley_distribution(sorted_levels(sat));
    }
  }
  return out;
}

template <typename T>
DisplayDistribution<T> display_distribution(const Game<T>& game, MediatorKind kind, const StrategyProfile& profile,
                                            UserIndex user) {
  return mediate(kind, satisfaction_vector(game, profile, user));
}

// One draw of the Shapley mediator without computing the distribution: draw
// a satisfaction threshold Y uniform on (0,1); if nobody reaches it, show
// plain content (-1), otherwise show a uniform pick among the players at or
// above it. Marginals equal shapley_distribution.
template <typename T>
int shapley_sample(const std::vector<T>& sat, UniformRng& rng) {
  const double y = rng.next_unit();
  std::vector<int> eligible;
  for (std::size_t j = 0; j < sat.size(); ++j)
    if (numeric_traits<T>::to_double(sat[j]) >= y) eligible.push_back(static_cast<int>(j));
  if (eligible.empty()) return -1;
  return eligible[rng.next_below(eligible.size())];
}

enum class Axiom { NullPlayer, Symmetry, UserIndependence, LeaderMonotonicity, Efficiency, Complete };

inline constexpr std::array<Axiom, 6> kAllAxioms = {Axiom::NullPlayer,          Axiom::Symmetry,
                                                    Axiom::UserIndependence,    Axiom::LeaderMonotonicity,
                                                    Axiom::Efficiency,          Axiom::Complete};

inline const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::NullPlayer: return "null-player";
    case Axiom::Symmetry: return "symmetry";
    case Axiom::UserIndependence: return "user-independence";
    case Axiom::LeaderMonotonicity: return "leader-monotonicity";
    case Axiom::Efficiency: return "efficiency";
    case Axiom::Complete: return "complete";
  }
  return "?";
}

// A recorded violation: enough to replay deterministically.
template <typename T>
struct AxiomCounterexample {
  Game<T> game;
  StrategyProfile profile;
  UserIndex user;
  std::string detail;
};

template <typename T>
struct AxiomReport {
  std::array<std::optional<AxiomCounterexample<T>>, kAllAxioms.size()> counterexamples;
  long cases_checked = 0;

  bool passed(Axiom axiom) const { return !counterexamples[static_cast<std::size_t>(axiom)].has_value(); }
  std::optional<AxiomCounterexample<T>>& slot(Axiom axiom) { return counterexamples[static_cast<std::size_t>(axiom)]; }
};

// Exercises all six axioms on sampled (profile, user) cases of every game,
// recording the first counterexample found per axiom. Efficiency demands
// the displayed mass equal the best available satisfaction; completeness is
// only demanded where some offer has positive satisfaction (every mediator
// here shows plain content on all-zero vectors by design).
template <typename T>
AxiomReport<T> check_axioms(MediatorKind kind, const std::vector<Game<T>>& games, int trials, UniformRng& rng) {
  AxiomReport<T> report;
  const T zero = numeric_traits<T>::zero();
  const T one = numeric_traits<T>::one();

  for (const Game<T>& game : games) {
    ProfileSpace space = ProfileSpace::of(game);
    for (int t = 0; t < trials; ++t) {
      StrategyProfile profile = space.decode(rng.next_below(space.size()));
      UserIndex user = static_cast<UserIndex>(rng.next_below(static_cast<std::uint64_t>(game.num_users())));
      std::vector<T> sat = satisfaction_vector(game, profile, user);
      DisplayDistribution<T> dist = mediate(kind, sat);
      ++report.cases_checked;

      T max = zero;
      for (const T& v : sat)
        if (v > max) max = v;

      auto record = [&](Axiom axiom, const std::string& detail) {
        auto& slot = report.slot(axiom);
        if (!slot) slot = AxiomCounterexample<T>{game, profile, user, detail};
      };

      for (std::size_t j = 0; j < sat.size(); ++j) {
        if (sat[j] == zero && !(dist.per_player[j] == zero))
          record(Axiom::NullPlayer, "P(" + game.players[j].name + ") = " +
                                        numeric_traits<T>::decimal_str(dist.per_player[j]) +
                                        " despite zero satisfaction");
        for (std::size_t k = j + 1; k < sat.size(); ++k) {
          if (sat[j] == sat[k] && !numeric_traits<T>::close(dist.per_player[j], dist.per_player[k]))
            record(Axiom::Symmetry, "equal satisfaction but P(" + game.players[j].name + ") = " +
                                        numeric_traits<T>::decimal_str(dist.per_player[j]) + ", P(" +
                                        game.players[k].name + ") = " +
                                        numeric_traits<T>::decimal_str(dist.per_player[k]));
          if (sat[j] == max && sat[k] < max && !(dist.per_player[j] > dist.per_player[k]))
            record(Axiom::LeaderMonotonicity, "leader " + game.players[j].name + " not favored over " +
                                                  game.players[k].name);
          if (sat[k] == max && sat[j] < max && !(dist.per_player[k] > dist.per_player[j]))
            record(Axiom::LeaderMonotonicity, "leader " + game.players[k].name + " not favored over " +
                                                  game.players[j].name);
        }
      }

      // The distribution for one user may not move when an unrelated user
      // joins or leaves; recompute through the full game path.
      if (game.num_users() >= 2) {
        UserIndex removed = (user + 1) % game.num_users();
        Game<T> smaller = game;
        smaller.users.erase(smaller.users.begin() + removed);
        smaller.sat.erase(smaller.sat.begin() + removed);
        UserIndex shifted = user < removed ? user : user - 1;
        DisplayDistribution<T> after = display_distribution(smaller, kind, profile, shifted);
        for (std::size_t j = 0; j < sat.size(); ++j)
          if (!numeric_traits<T>::close(after.per_player[j], dist.per_player[j]))
            record(Axiom::UserIndependence,
                   "P(" + game.players[j].name + ") changed after removing user " + game.users[removed]);
      }
      {
        Game<T> larger = game;
        larger.users.push_back("aux_user");
        larger.sat.push_back({});
        for (int l = 0; l < game.num_items(); ++l)
          larger.sat.back().push_back(numeric_traits<T>::from_ratio(static_cast<long>(rng.next_below(101)), 100));
        DisplayDistribution<T> after = display_distribution(larger, kind, profile, user);
        for (std::size_t j = 0; j < sat.size(); ++j)
          if (!numeric_traits<T>::close(after.per_player[j], dist.per_player[j]))
            record(Axiom::UserIndependence, "P(" + game.players[j].name + ") changed after adding a user");
      }

      T shown = dist.display_total();
      if (!numeric_traits<T>::close(shown, max))
        record(Axiom::Efficiency, "display mass " + numeric_traits<T>::decimal_str(shown) +
                                      " != best satisfaction " + numeric_traits<T>::decimal_str(max));
      if (max > zero && !numeric_traits<T>::close(shown, one))
        record(Axiom::Complete, "display mass " + numeric_traits<T>::decimal_str(shown) + " != 1");
    }
  }
  return report;
}

}  // namespace recgame
