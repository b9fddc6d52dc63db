#include <doctest.h>

#include "recgame/congestion.hpp"
#include "recgame/generators.hpp"
#include "testutil.hpp"

using namespace recgame;
using testutil::R;

TEST_CASE("breakpoints are the distinct offerable levels plus 0 and 1") {
  CongestionGame<Rational> cg = build_congestion_game(example_game());
  CHECK(cg.breakpoints ==
        std::vector<Rational>{R(0), R(1, 10), R(1, 5), R(7, 10), R(4, 5), R(9, 10), R(1)});
  CHECK(cg.num_intervals() == 6);
  // 3 users x 6 intervals; within n * |L| + 2 levels.
  CHECK(cg.breakpoints.size() <= 3 * 3 + 2);
}

TEST_CASE("a strategy occupies the prefix of intervals its satisfaction covers") {
  Game<Rational> game = example_game();
  CongestionGame<Rational> cg = build_congestion_game(game);
  // l3 is worth 9/10 to u1, 4/5 to u2, 1/10 to u3.
  CHECK(cg.covered_intervals(0, {2}) == 5);
  CHECK(cg.covered_intervals(1, {2}) == 4);
  CHECK(cg.covered_intervals(2, {2}) == 1);
  CHECK(cg.covered_intervals(0, {}) == 0);

  auto resources = cg.strategy_resources({2});
  CHECK(resources.size() == 5 + 4 + 1);
  CHECK(resources.front() == std::pair<UserIndex, int>{0, 1});
}

TEST_CASE("congestion payoffs and potential reproduce the mediated game") {
  UniformRng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    RandomGameOptions options;
    options.mode = trial % 2 == 0 ? GameMode::Single : GameMode::Personalized;
    Game<Rational> game = random_game(rng, options);
    CongestionGame<Rational> cg = build_congestion_game(game);
    ProfileSpace space = ProfileSpace::of(game);
    for (int k = 0; k < 5; ++k) {
      StrategyProfile profile = space.decode(rng.next_below(space.size()));
      PayoffVector<Rational> direct = payoff_vector(game, MediatorKind::Shapley, profile);
      PayoffVector<Rational> via_congestion = congestion_payoffs(cg, profile);
      CHECK(direct.per_player == via_congestion.per_player);
      CHECK(direct.welfare == via_congestion.welfare);
      CHECK(congestion_potential(cg, profile) == potential_value(game, profile));
    }
  }
}
