#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "recgame/rational.hpp"

namespace recgame {

// Thrown when a requested enumeration would exceed the configured profile
// cap; callers are expected to fall back to better-response dynamics.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class GameMode { Single, Personalized };

using PlayerIndex = int;
using UserIndex = int;
using ItemIndex = int;

// A pure strategy: the set of items the player offers, as ascending indices
// into Game::items. Singleton in single mode; any non-empty subset of the
// menu with size <= budget in personalized mode. The empty set is accepted
// as input everywhere (it satisfies nobody and is worth 0 to every user) but
// is never enumerated as a candidate move, since payoffs are non-negative
// and it can therefore never strictly improve on anything.
using Strategy = std::vector<ItemIndex>;

struct StrategyProfile {
  std::vector<Strategy> choices;
  bool operator==(const StrategyProfile&) const = default;
};

// A recommendation game: n users, a pool of items with per-user satisfaction
// in [0,1], and N players each choosing what to offer from a personal menu.
template <typename T>
struct Game {
  struct Player {
    std::string name;
    std::vector<ItemIndex> menu;  // ascending indices into items
    int budget = 1;               // max offer size; meaningful in personalized mode
    bool operator==(const Player&) const = default;
  };

  GameMode mode = GameMode::Single;
  std::vector<std::string> users;
  std::vector<std::string> items;
  std::vector<std::vector<T>> sat;  // sat[user][item]
  std::vector<Player> players;

  int num_users() const { return static_cast<int>(users.size()); }
  int num_items() const { return static_cast<int>(items.size()); }
  int num_players() const { return static_cast<int>(players.size()); }

  const T& satisfaction(UserIndex u, ItemIndex l) const { return sat[u][l]; }

  ItemIndex item_index(const std::string& name) const {
    auto it = std::find(items.begin(), items.end(), name);
    if (it == items.end()) throw std::invalid_argument("unknown item \"" + name + "\"");
    return static_cast<ItemIndex>(it - items.begin());
  }

  bool operator==(const Game&) const = default;
};

// Validates that `s` is a legal strategy for the player: items from the
// menu, no duplicates, and (in personalized mode) at most `budget` items.
template <typename T>
void validate_strategy(const Game<T>& game, PlayerIndex j, const Strategy& s) {
  const auto& player = game.players.at(static_cast<std::size_t>(j));
  if (game.mode == GameMode::Single && s.size() != 1)
    throw std::invalid_argument("player " + player.name + ": single mode requires exactly one item");
  if (game.mode == GameMode::Personalized && static_cast<int>(s.size()) > player.budget)
    throw std::invalid_argument("player " + player.name + ": offer exceeds budget");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("player " + player.name + ": offer items must be ascending and distinct");
    if (std::find(player.menu.begin(), player.menu.end(), s[i]) == player.menu.end())
      throw std::invalid_argument("player " + player.name + ": item not in menu");
  }
}

template <typename T>
void validate_profile(const Game<T>& game, const StrategyProfile& profile) {
  if (static_cast<int>(profile.choices.size()) != game.num_players())
    throw std::invalid_argument("profile has wrong number of strategies");
  for (PlayerIndex j = 0; j < game.num_players(); ++j) validate_strategy(game, j, profile.choices[j]);
}

// sigma_i(X_j): the best the offer does for user i; 0 for the empty offer.
template <typename T>
T satisfaction_of_strategy(const Game<T>& game, UserIndex user, const Strategy& s) {
  T best = numeric_traits<T>::zero();
  for (ItemIndex l : s) {
    const T& v = game.sat[user][l];
    if (v > best) best = v;
  }
  return best;
}

template <typename T>
std::vector<T> satisfaction_vector(const Game<T>& game, const StrategyProfile& profile, UserIndex user) {
  std::vector<T> out;
  out.reserve(profile.choices.size());
  for (const Strategy& s : profile.choices) out.push_back(satisfaction_of_strategy(game, user, s));
  return out;
}

// Satisfaction levels of one user under a profile, sorted ascending with the
// virtual level sigma^0 = 0 in front. Ties get consecutive ranks in player
// order, so levels has exactly N+1 entries including duplicates.
template <typename T>
struct SortedLevels {
  std::vector<T> levels;  // size N+1, levels[0] = 0, ascending
  std::vector<int> rank;  // rank[j] in [1..N]; levels[rank[j]] == sigma_i(X_j)
};

template <typename T>
SortedLevels<T> sorted_levels(const std::vector<T>& sat) {
  const int n = static_cast<int>(sat.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sat[a] < sat[b]; });
  SortedLevels<T> out;
  out.levels.reserve(static_cast<std::size_t>(n) + 1);
  out.levels.push_back(numeric_traits<T>::zero());
  out.rank.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    out.levels.push_back(sat[order[m]]);
    out.rank[order[m]] = m + 1;
  }
  return out;
}

template <typename T>
SortedLevels<T> sorted_levels(const Game<T>& game, const StrategyProfile& profile, UserIndex user) {
  return sorted_levels(satisfaction_vector(game, profile, user));
}

// All legal strategies of one player, in lexicographic menu order: for
// personalized mode every non-empty ascending subset of the menu of size
// <= budget, compared as tuples ({l1} < {l1,l2} < {l2}).
template <typename T>
std::vector<Strategy> strategy_space(const Game<T>& game, PlayerIndex j) {
  const auto& player = game.players.at(static_cast<std::size_t>(j));
  std::vector<Strategy> out;
  if (game.mode == GameMode::Single) {
    for (ItemIndex l : player.menu) out.push_back({l});
    return out;
  }
  const int m = static_cast<int>(player.menu.size());
  const int cap = std::min(player.budget, m);
  Strategy current;
  auto rec = [&](auto&& self, int start) -> void {
    for (int i = start; i < m; ++i) {
      current.push_back(player.menu[static_cast<std::size_t>(i)]);
      out.push_back(current);
      if (static_cast<int>(current.size()) < cap) self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline constexpr std::uint64_t kDefaultProfileCap = 10'000'000;

// The full product strategy space, random-accessible by index so scans can
// be chunked across threads. Index 0 is the profile where every player picks
// their first strategy; player 0 varies slowest (lexicographic order).
class ProfileSpace {
 public:
  template <typename T>
  static ProfileSpace of(const Game<T>& game, std::uint64_t cap = kDefaultProfileCap) {
    ProfileSpace space;
    space.spaces_.reserve(static_cast<std::size_t>(game.num_players()));
    for (PlayerIndex j = 0; j < game.num_players(); ++j) space.spaces_.push_back(strategy_space(game, j));
    space.size_ = 1;
    for (const auto& s : space.spaces_) {
      if (s.empty()) throw std::invalid_argument("player with empty strategy space");
      if (space.size_ > cap / s.size())
        throw CapExceeded("profile space exceeds cap of " + std::to_string(cap) + " profiles");
      space.size_ *= s.size();
    }
    return space;
  }

  std::uint64_t size() const { return size_; }
  int num_players() const { return static_cast<int>(spaces_.size()); }
  const std::vector<Strategy>& strategies(PlayerIndex j) const { return spaces_[static_cast<std::size_t>(j)]; }

  StrategyProfile decode(std::uint64_t index) const {
    StrategyProfile profile;
    profile.choices.resize(spaces_.size());
    for (int j = static_cast<int>(spaces_.size()) - 1; j >= 0; --j) {
      const auto& s = spaces_[static_cast<std::size_t>(j)];
      profile.choices[static_cast<std::size_t>(j)] = s[index % s.size()];
      index /= s.size();
    }
    return profile;
  }

  std::uint64_t index_of(const StrategyProfile& profile) const {
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < spaces_.size(); ++j) {
      const auto& s = spaces_[j];
      auto it = std::find(s.begin(), s.end(), profile.choices[j]);
      if (it == s.end()) throw std::invalid_argument("profile strategy not in player's strategy space");
      index = index * s.size() + static_cast<std::uint64_t>(it - s.begin());
    }
    return index;
  }

 private:
  std::vector<std::vector<Strategy>> spaces_;
  std::uint64_t size_ = 0;
};

// Renders a strategy like "l2" or "l1+l3" (and "-" for the empty offer).
template <typename T>
std::string strategy_name(const Game<T>& game, const Strategy& s) {
  if (s.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += '+';
    out += game.items[static_cast<std::size_t>(s[i])];
  }
  return out;
}

template <typename T>
std::string profile_name(const Game<T>& game, const StrategyProfile& profile) {
  std::string out = "(";
  for (std::size_t j = 0; j < profile.choices.size(); ++j) {
    if (j > 0) out += ',';
    out += strategy_name(game, profile.choices[j]);
  }
  return out + ")";
}

}  // namespace recgame
