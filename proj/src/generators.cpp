#include "recgame/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace recgame {

namespace {

Game<Rational> empty_game(GameMode mode, int n_users) {
  Game<Rational> game;
  game.mode = mode;
  for (int i = 1; i <= n_users; ++i) game.users.push_back("u" + std::to_string(i));
  game.sat.resize(static_cast<std::size_t>(n_users));
  return game;
}

// sat_by_user holds one value per user, in user order.
ItemIndex add_item(Game<Rational>& game, const std::string& name, const std::vector<Rational>& sat_by_user) {
  game.items.push_back(name);
  for (std::size_t i = 0; i < sat_by_user.size(); ++i) game.sat[i].push_back(sat_by_user[i]);
  return static_cast<ItemIndex>(game.items.size()) - 1;
}

void add_player(Game<Rational>& game, const std::string& name, std::vector<ItemIndex> menu, int budget = 0) {
  typename Game<Rational>::Player p;
  p.name = name;
  p.menu = std::move(menu);
  p.budget = budget > 0 ? budget : static_cast<int>(p.menu.size());
  if (game.mode == GameMode::Single) p.budget = 1;
  game.players.push_back(std::move(p));
}

void require_unit_interval(const Rational& v, const char* name, bool allow_zero) {
  if (v > Rational(1) || v < Rational(0) || (!allow_zero && v == Rational(0)))
    throw std::invalid_argument(std::string(name) + " must be in " + (allow_zero ? "[0,1]" : "(0,1]"));
}

}  // namespace

Game<Rational> example_game() {
  Game<Rational> game = empty_game(GameMode::Single, 3);
  auto r = [](long num, long den) { return Rational(num, den); };
  ItemIndex l1 = add_item(game, "l1", {r(1, 10), r(9, 10), r(2, 10)});
  ItemIndex l2 = add_item(game, "l2", {r(8, 10), r(7, 10), r(9, 10)});
  ItemIndex l3 = add_item(game, "l3", {r(9, 10), r(8, 10), r(1, 10)});
  add_player(game, "p1", {l1, l2});
  add_player(game, "p2", {l3});
  return game;
}

Game<Rational> impossibility_game(const Rational& x, const Rational& y) {
  require_unit_interval(x, "x", false);
  require_unit_interval(y, "y", false);
  if (!(y < x)) throw std::invalid_argument("impossibility_game requires 0 < y < x <= 1");
  Game<Rational> game = empty_game(GameMode::Single, 3);
  Rational zero(0);
  ItemIndex l1 = add_item(game, "l1", {zero, y, x});
  ItemIndex l2 = add_item(game, "l2", {x, zero, y});
  ItemIndex l3 = add_item(game, "l3", {y, x, zero});
  add_player(game, "p1", {l1, l2, l3});
  add_player(game, "p2", {l1, l2, l3});
  return game;
}

Game<Rational> tight_poa_game(int n_players) {
  if (n_players < 1) throw std::invalid_argument("tight_poa_game requires at least one player");
  Game<Rational> game = empty_game(GameMode::Single, n_players);
  const Rational shared_value(n_players, 2L * n_players - 1);
  std::vector<ItemIndex> menu;
  for (int j = 1; j <= n_players; ++j) {
    std::vector<Rational> sat(static_cast<std::size_t>(n_players), Rational(0));
    sat[static_cast<std::size_t>(j) - 1] = Rational(1);
    menu.push_back(add_item(game, "l" + std::to_string(j), sat));
  }
  menu.push_back(add_item(game, "lstar",
                          std::vector<Rational>(static_cast<std::size_t>(n_players), shared_value)));
  for (int j = 1; j <= n_players; ++j) add_player(game, "p" + std::to_string(j), menu);
  return game;
}

Game<Rational> shapley_upoa_game(const Rational& eps) {
  require_unit_interval(eps, "eps", false);
  Game<Rational> game = empty_game(GameMode::Single, 1);
  ItemIndex l = add_item(game, "l1", {eps});
  add_player(game, "p1", {l});
  return game;
}

Game<Rational> top_upoa_game(const Rational& delta, const Rational& eps) {
  require_unit_interval(delta, "delta", false);
  require_unit_interval(eps, "eps", false);
  if (!(eps < delta)) throw std::invalid_argument("top_upoa_game requires 0 < eps < delta <= 1");
  Game<Rational> game = empty_game(GameMode::Single, 2);
  ItemIndex l1 = add_item(game, "l1", {Rational(1), Rational(0)});
  ItemIndex l2 = add_item(game, "l2", {delta, delta});
  ItemIndex l3 = add_item(game, "l3", {eps, eps});
  add_player(game, "p1", {l1, l2});
  add_player(game, "p2", {l3});
  return game;
}

Game<Rational> random_game(UniformRng& rng, const RandomGameOptions& options) {
  const int n_players = static_cast<int>(rng.next_between(1, options.max_players));
  const int n_users = static_cast<int>(rng.next_between(1, options.max_users));
  std::vector<int> menu_sizes;
  int largest = 1;
  for (int j = 0; j < n_players; ++j) {
    menu_sizes.push_back(static_cast<int>(rng.next_between(1, options.max_menu)));
    largest = std::max(largest, menu_sizes.back());
  }
  int total = 0;
  for (int m : menu_sizes) total += m;
  const int pool = static_cast<int>(rng.next_between(largest, total));

  Game<Rational> game = empty_game(options.mode, n_users);
  for (int l = 1; l <= pool; ++l) {
    std::vector<Rational> sat;
    for (int i = 0; i < n_users; ++i) sat.push_back(Rational(rng.next_between(0, 100), 100));
    add_item(game, "l" + std::to_string(l), sat);
  }
  for (int j = 1; j <= n_players; ++j) {
    std::vector<ItemIndex> all(static_cast<std::size_t>(pool));
    for (int l = 0; l < pool; ++l) all[static_cast<std::size_t>(l)] = l;
    std::vector<ItemIndex> menu;
    for (int take = menu_sizes[static_cast<std::size_t>(j) - 1]; take > 0; --take) {
      std::size_t pick = rng.next_below(all.size());
      menu.push_back(all[pick]);
      all.erase(all.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    std::sort(menu.begin(), menu.end());
    int budget = options.mode == GameMode::Personalized
                     ? static_cast<int>(rng.next_between(1, static_cast<long>(menu.size())))
                     : 1;
    add_player(game, "p" + std::to_string(j), std::move(menu), budget);
  }
  return game;
}

Game<double> to_float_game(const Game<Rational>& game) {
  Game<double> out;
  out.mode = game.mode;
  out.users = game.users;
  out.items = game.items;
  out.sat.resize(game.sat.size());
  for (std::size_t i = 0; i < game.sat.size(); ++i)
    for (const Rational& v : game.sat[i]) out.sat[i].push_back(v.to_double());
  for (const auto& p : game.players) out.players.push_back({p.name, p.menu, p.budget});
  return out;
}

}  // namespace recgame
