#pragma once

#include "recgame/game.hpp"
#include "recgame/rng.hpp"

namespace recgame {

// Running example: three users, two players, overlapping tastes. Small
// enough to verify every number by hand, rich enough that the mediators
// disagree about equilibria.
Game<Rational> example_game();

// Cyclic three-item game on three users with satisfaction values {0, y, x},
// 0 < y < x <= 1. Both players share the full menu. Complete and fair
// mediators that ignore losers' satisfaction (top, btl with x != y) admit no
// pure equilibrium here; the Shapley mediator always does.
Game<Rational> impossibility_game(const Rational& x, const Rational& y);

// Worst case for equilibrium welfare under the Shapley mediator: n players
// and n users, player j alone can fully satisfy user j, and a shared item
// satisfies everyone a little (a = n/(2n-1)). Everyone piling on the shared
// item is an equilibrium, so the price of anarchy hits (2n-1)/n exactly.
Game<Rational> tight_poa_game(int n_players);

// One player, one user, one item worth eps: the Shapley mediator displays
// it with probability eps only, so realized user utility is eps^2 while a
// greedy mediator delivers eps. Drives the user-side ratio to 1/eps.
Game<Rational> shapley_upoa_game(const Rational& eps);

// Two players; player 1 chooses between a polarizing item (1, 0) and a bland
// one (delta, delta); player 2 is stuck with (eps, eps), eps < delta. Under
// top the bland item wins every user and is the unique equilibrium, leaving
// utility 2*delta instead of 1 + eps.
Game<Rational> top_upoa_game(const Rational& delta, const Rational& eps);

// Random games on a denominator-100 satisfaction grid (exact rationals).
// Menus are drawn from a shared pool so players can overlap.
struct RandomGameOptions {
  int max_players = 4;
  int max_menu = 4;
  int max_users = 5;
  GameMode mode = GameMode::Single;
};

Game<Rational> random_game(UniformRng& rng, const RandomGameOptions& options = {});

Game<double> to_float_game(const Game<Rational>& game);

}  // namespace recgame
