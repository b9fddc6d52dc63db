// Acceptance gate: thirteen standalone criteria covering the example game,
// the oracle equivalences, equilibrium existence and convergence, the
// anarchy bounds, the numeric minimum-utility curve, the sampler, the
// congestion reduction, the axiom pattern, and the personalized-offers
// re-runs. Each criterion prints exactly one pass/fail line and carries a
// wall-clock budget; the process exits nonzero if any selected criterion
// fails. Run with no arguments for all criteria, or pass criterion numbers.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "recgame/congestion.hpp"
#include "recgame/cooperative.hpp"
#include "recgame/dynamics.hpp"
#include "recgame/generators.hpp"
#include "recgame/metrics.hpp"
#include "recgame/utility_min.hpp"

using namespace recgame;

namespace {

// Pinned tolerances. Everything not listed here is exact rational equality.
constexpr double kFloatPotentialTol = 1e-12;  // criterion 4: float-game potential identity
constexpr double kGradientRelTol = 1e-6;      // criterion 9: gradient vs central differences
constexpr double kCurveFloor = 0.568;         // criterion 9: min utility over N <= 1000
constexpr double kCurveBoundCap = 1.7605 + 1e-3;  // criterion 9: implied user-ratio bound
constexpr double kSamplerTvTol = 0.005;       // criterion 10: total-variation distance
constexpr double kSamplerNoneTol = 0.002;     // criterion 10: empty-display frequency gap

Game<Rational> random_game_of(UniformRng& rng, GameMode mode, int max_players = 4) {
  RandomGameOptions options;
  options.mode = mode;
  options.max_players = max_players;
  return random_game(rng, options);
}

GameMode alternating(int i) { return i % 2 == 0 ? GameMode::Single : GameMode::Personalized; }

StrategyProfile random_profile(const ProfileSpace& space, UniformRng& rng) {
  return space.decode(rng.next_below(space.size()));
}

std::string count_str(long v) { return std::to_string(v); }

// --- criterion 1: the two-player, three-user example under the Shapley
// mediator: display probabilities, payoffs, the unique equilibrium, and the
// user utility there. Exact.

bool c01(std::string& detail) {
  const Game<Rational> ex = example_game();
  const StrategyProfile good{{{1}, {2}}};  // (l2,l3)
  const StrategyProfile weak{{{0}, {2}}};  // (l1,l3)
  const Rational expected[3] = {Rational(2, 5), Rational(7, 20), Rational(17, 20)};
  for (UserIndex i = 0; i < 3; ++i) {
    if (!(display_distribution(ex, MediatorKind::Shapley, good, i).per_player[0] == expected[i])) {
      detail = "display probability for user " + count_str(i + 1) + " at (l2,l3)";
      return false;
    }
  }
  if (!(player_payoff(ex, MediatorKind::Shapley, good, 0) == Rational(8, 5))) {
    detail = "payoff of p1 at (l2,l3)";
    return false;
  }
  if (!(player_payoff(ex, MediatorKind::Shapley, weak, 0) == Rational(7, 10))) {
    detail = "payoff of p1 at (l1,l3)";
    return false;
  }
  std::vector<StrategyProfile> pne = enumerate_pne(ex, MediatorKind::Shapley);
  if (!(pne.size() == 1 && pne[0] == good)) {
    detail = "equilibrium set is not exactly {(l2,l3)}";
    return false;
  }
  if (!(user_utility(ex, MediatorKind::Shapley, good, UtilityConfig<Rational>{Rational(0)}) == Rational(429, 200))) {
    detail = "user utility at the equilibrium is not 429/200";
    return false;
  }
  detail = "distributions 2/5, 7/20, 17/20; payoffs 8/5 and 7/10; unique equilibrium; utility 2.145";
  return true;
}

// --- criterion 2: the same game under the top mediator. Exact.

bool c02(std::string& detail) {
  const Game<Rational> ex = example_game();
  const StrategyProfile good{{{1}, {2}}};
  const StrategyProfile weak{{{0}, {2}}};
  const UtilityConfig<Rational> plain0{Rational(0)};
  if (!(player_payoff(ex, MediatorKind::Top, weak, 0) == Rational(2))) {
    detail = "top payoff of p1 at (l1,l3)";
    return false;
  }
  if (!(user_utility(ex, MediatorKind::Top, weak, plain0) == Rational(2))) {
    detail = "top user utility at (l1,l3)";
    return false;
  }
  if (!(user_utility(ex, MediatorKind::Top, good, plain0) == Rational(13, 5))) {
    detail = "top user utility at (l2,l3)";
    return false;
  }
  detail = "payoff 2; user utilities 2 vs 13/5 across the two profiles";
  return true;
}

// --- criterion 3 (and the personalized re-run of criterion 13): the closed
// form equals the permutation-average oracle on 1000 random games. Exact.

bool oracle_equivalence(GameMode mode, std::uint64_t seed, std::string& detail) {
  UniformRng rng(seed);
  long compared = 0;
  for (int g = 0; g < 1000; ++g) {
    Game<Rational> game = random_game_of(rng, mode, 6);
    ProfileSpace space = ProfileSpace::of(game);
    for (int rep = 0; rep < 2; ++rep) {
      StrategyProfile profile = random_profile(space, rng);
      for (UserIndex i = 0; i < game.num_users(); ++i) {
        std::vector<Rational> closed = display_distribution(game, MediatorKind::Shapley, profile, i).per_player;
        std::vector<Rational> brute = shapley_bruteforce(game, profile, i);
        ++compared;
        if (closed != brute) {
          detail = "closed form disagrees with the permutation oracle (game " + count_str(g) + ", user " +
                   count_str(i + 1) + ")";
          return false;
        }
      }
    }
  }
  detail = "1000 games, " + count_str(compared) + " user distributions, 0 discrepancies";
  return true;
}

bool c03(std::string& detail) { return oracle_equivalence(GameMode::Single, 1003, detail); }

// --- criterion 4 (and its personalized re-run): every unilateral deviation
// changes the deviator's payoff by exactly the potential change; float games
// within kFloatPotentialTol.

bool potential_identity(GameMode mode, std::uint64_t seed, std::string& detail) {
  UniformRng rng(seed);
  int done = 0;
  double worst_float = 0.0;
  while (done < 10000) {
    Game<Rational> game = random_game_of(rng, mode);
    Game<double> fgame = to_float_game(game);
    ProfileSpace space = ProfileSpace::of(game);
    for (int rep = 0; rep < 25 && done < 10000; ++rep) {
      StrategyProfile profile = random_profile(space, rng);
      PlayerIndex j = static_cast<PlayerIndex>(rng.next_below(static_cast<std::uint64_t>(game.num_players())));
      std::vector<Strategy> moves = strategy_space(game, j);
      if (moves.size() < 2) continue;
      Strategy alt = moves[rng.next_below(moves.size())];
      if (alt == profile.choices[static_cast<std::size_t>(j)]) continue;
      StrategyProfile after = profile;
      after.choices[static_cast<std::size_t>(j)] = alt;

      Rational dpi = player_payoff(game, MediatorKind::Shapley, after, j) -
                     player_payoff(game, MediatorKind::Shapley, profile, j);
      Rational dphi = potential_value(game, after) - potential_value(game, profile);
      if (!(dpi == dphi)) {
        detail = "exact potential identity violated at deviation " + count_str(done);
        return false;
      }
      double fdpi = player_payoff(fgame, MediatorKind::Shapley, after, j) -
                    player_payoff(fgame, MediatorKind::Shapley, profile, j);
      double fdphi = potential_value(fgame, after) - potential_value(fgame, profile);
      worst_float = std::max(worst_float, std::fabs(fdpi - fdphi));
      ++done;
    }
  }
  if (worst_float > kFloatPotentialTol) {
    detail = "float potential gap " + std::string(decimal12(worst_float)) + " exceeds 1e-12";
    return false;
  }
  detail = "10000 deviations exact; worst float gap " + std::string(decimal12(worst_float));
  return true;
}

bool c04(std::string& detail) { return potential_identity(GameMode::Single, 1004, detail); }

// --- criterion 5 (and its personalized re-run): better-response dynamics
// from random initial profiles converge under both schedules, and every
// terminal profile passes the exhaustive deviation check.

bool convergence(GameMode mode, std::uint64_t seed, std::string& detail) {
  UniformRng rng(seed);
  long steps_total = 0;
  for (int g = 0; g < 500; ++g) {
    Game<Rational> game = random_game_of(rng, mode);
    ProfileSpace space = ProfileSpace::of(game);
    StrategyProfile initial = random_profile(space, rng);
    for (Schedule schedule : {Schedule::RoundRobin, Schedule::Random}) {
      DynamicsTrace<Rational> trace =
          run_dynamics(game, MediatorKind::Shapley, initial, schedule, seed + static_cast<std::uint64_t>(g), 1000000);
      if (!trace.converged) {
        detail = "dynamics did not converge (game " + count_str(g) + ")";
        return false;
      }
      if (!is_pne(game, MediatorKind::Shapley, trace.terminal)) {
        detail = "terminal profile failed the exhaustive deviation check (game " + count_str(g) + ")";
        return false;
      }
      steps_total += static_cast<long>(trace.steps.size());
    }
  }
  detail = "500 games x 2 schedules converged (" + count_str(steps_total) + " improvement steps), terminals verified";
  return true;
}

bool c05(std::string& detail) { return convergence(GameMode::Single, 1005, detail); }

// --- criterion 6: the cyclic instance family has no equilibrium under the
// top or weight-based mediators but always has one under Shapley. Exact.

bool impossibility_case(const Rational& x, const Rational& y, std::string& detail) {
  Game<Rational> game = impossibility_game(x, y);
  if (!enumerate_pne(game, MediatorKind::Top).empty()) {
    detail = "top has an equilibrium at x=" + x.fraction_str() + ", y=" + y.fraction_str();
    return false;
  }
  if (!enumerate_pne(game, MediatorKind::Btl).empty()) {
    detail = "btl has an equilibrium at x=" + x.fraction_str() + ", y=" + y.fraction_str();
    return false;
  }
  if (enumerate_pne(game, MediatorKind::Shapley).empty()) {
    detail = "shapley lacks an equilibrium at x=" + x.fraction_str() + ", y=" + y.fraction_str();
    return false;
  }
  return true;
}

bool c06(std::string& detail) {
  if (!impossibility_case(Rational(9, 10), Rational(1, 2), detail)) return false;
  UniformRng rng(1006);
  for (int rep = 0; rep < 20; ++rep) {
    long y_cents = rng.next_between(1, 99);
    long x_cents = rng.next_between(y_cents + 1, 100);
    if (!impossibility_case(Rational(x_cents, 100), Rational(y_cents, 100), detail)) return false;
  }
  detail = "canonical instance plus 20 random (x,y): no top/btl equilibrium, shapley equilibrium exists";
  return true;
}

// --- criterion 7: the shared-item family meets its exact anarchy ratio, and
// random games never exceed 2 - 1/N. Exact.

bool c07(std::string& detail) {
  for (int n = 2; n <= 6; ++n) {
    PoAResult<Rational> result = price_of_anarchy(tight_poa_game(n), MediatorKind::Shapley);
    std::optional<Rational> ratio = result.ratio();
    if (!ratio || !(*ratio == Rational(2 * n - 1, n))) {
      detail = "tight-family ratio at n=" + count_str(n) + " is not (2n-1)/n";
      return false;
    }
  }
  UniformRng rng(1007);
  for (int g = 0; g < 500; ++g) {
    Game<Rational> game = random_game_of(rng, alternating(g));
    PoAResult<Rational> result = price_of_anarchy(game, MediatorKind::Shapley);
    std::optional<Rational> ratio = result.ratio();
    if (!result.worst_equilibrium || !ratio) {
      detail = "random game " + count_str(g) + " has no equilibrium under shapley";
      return false;
    }
    if (!(*ratio <= Rational(2) - Rational(1, game.num_players()))) {
      detail = "random game " + count_str(g) + " exceeds the 2 - 1/N bound";
      return false;
    }
  }
  detail = "ratios 3/2..11/6 exact for n=2..6; 500 random games within 2 - 1/N";
  return true;
}

// --- criterion 8: user-side anarchy. The two lower-bound instances reach
// their advertised ratios, and with optimal plain content the ratio is
// capped by 4 because every profile keeps utility >= n/4. Exact.

bool c08(std::string& detail) {
  PoAResult<Rational> lone = user_price_of_anarchy(shapley_upoa_game(Rational(1, 100)), MediatorKind::Shapley,
                                                   UtilityConfig<Rational>{Rational(0)});
  if (!lone.ratio() || *lone.ratio() < Rational(100)) {
    detail = "shapley lower-bound instance fell short of ratio 100";
    return false;
  }
  PoAResult<Rational> bland = user_price_of_anarchy(top_upoa_game(Rational(1, 100), Rational(1, 200)),
                                                    MediatorKind::Top, UtilityConfig<Rational>{Rational(0)});
  if (!bland.ratio() || *bland.ratio() < Rational(50)) {
    detail = "top lower-bound instance fell short of ratio 50";
    return false;
  }
  const UtilityConfig<Rational> plain_one{Rational(1)};
  UniformRng rng(1008);
  for (int g = 0; g < 500; ++g) {
    Game<Rational> game = random_game_of(rng, alternating(g));
    PoAResult<Rational> result = user_price_of_anarchy(game, MediatorKind::Shapley, plain_one);
    std::optional<Rational> ratio = result.ratio();
    if (!result.worst_equilibrium || !ratio) {
      detail = "random game " + count_str(g) + " has no equilibrium under shapley";
      return false;
    }
    if (!(*ratio <= Rational(4))) {
      detail = "random game " + count_str(g) + " exceeds user-ratio 4 with optimal plain content";
      return false;
    }
    ProfileSpace space = ProfileSpace::of(game);
    const Rational floor = Rational(game.num_users(), 4);
    for (std::uint64_t index = 0; index < space.size(); ++index) {
      if (!(user_utility(game, MediatorKind::Shapley, space.decode(index), plain_one) >= floor)) {
        detail = "profile below the n/4 utility floor in random game " + count_str(g);
        return false;
      }
    }
  }
  detail = "lower bounds 100 and 201/4 met; 500 games capped at 4 with every profile above n/4";
  return true;
}

// --- criterion 9: the numeric minimum-utility curve and its gradient.

bool c09(std::string& detail) {
  StationaryResult one = solve_stationary(1);
  if (!(one.sigma.size() == 1 && one.sigma[0] == 0.5 && one.utility == 0.75)) {
    detail = "one-player stationary point is not exactly (1/2, 3/4)";
    return false;
  }
  std::vector<CurvePoint> curve = min_utility_curve(1000);
  double min_u = 1.0, max_bound = 0.0;
  for (const CurvePoint& point : curve) {
    min_u = std::min(min_u, point.u_star);
    max_bound = std::max(max_bound, point.upoa_bound);
  }
  if (curve.size() != 1000 || min_u < kCurveFloor) {
    detail = "curve minimum " + std::string(decimal12(min_u)) + " fell below 0.568";
    return false;
  }
  if (max_bound > kCurveBoundCap) {
    detail = "implied user-ratio bound " + std::string(decimal12(max_bound)) + " exceeds 1.7615";
    return false;
  }
  UniformRng rng(1009);
  const double h = 1e-6;
  for (int point = 0; point < 400; ++point) {
    int n = 1 + static_cast<int>(rng.next_below(50));
    std::vector<double> sigma(static_cast<std::size_t>(n));
    for (double& v : sigma) v = rng.next_unit();
    std::sort(sigma.begin(), sigma.end());
    for (int k = 0; k < n; ++k)
      sigma[static_cast<std::size_t>(k)] = (k + 0.1 + 0.8 * sigma[static_cast<std::size_t>(k)]) / n;
    std::vector<double> grad = utility_gradient(sigma);
    for (int k = 0; k < n; ++k) {
      std::vector<double> up = sigma, down = sigma;
      up[static_cast<std::size_t>(k)] += h;
      down[static_cast<std::size_t>(k)] -= h;
      double fd = (single_user_utility(up) - single_user_utility(down)) / (2 * h);
      double rel = std::fabs(fd - grad[static_cast<std::size_t>(k)]) /
                   std::max(1.0, std::fabs(grad[static_cast<std::size_t>(k)]));
      if (rel > kGradientRelTol) {
        detail = "gradient component off by relative " + std::string(decimal12(rel));
        return false;
      }
    }
  }
  detail = "curve of 1000 points, min " + std::string(decimal12(min_u)) +
           "; gradient matched central differences on 400 points; N=1 exact";
  return true;
}

// --- criterion 10: the threshold sampler's empirical law matches the closed
// form within kSamplerTvTol, and the empty-display frequency matches
// 1 - max(sigma) within kSamplerNoneTol.

bool c10(std::string& detail) {
  UniformRng rng(1010);
  double worst_tv = 0.0, worst_none = 0.0;
  for (int instance = 0; instance < 20; ++instance) {
    const int n = 1 + static_cast<int>(rng.next_below(10));
    std::vector<double> sat(static_cast<std::size_t>(n));
    for (double& v : sat) v = static_cast<double>(rng.next_between(0, 100)) / 100.0;
    DisplayDistribution<double> exact = mediate(MediatorKind::Shapley, sat);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    constexpr std::uint64_t kDraws = 1000000;
    for (std::uint64_t d = 0; d < kDraws; ++d) {
      int pick = shapley_sample(sat, rng);
      ++counts[pick < 0 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(pick)];
    }
    double l1 = 0.0;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
      double expect = j == static_cast<std::size_t>(n) ? exact.none_prob : exact.per_player[j];
      l1 += std::fabs(static_cast<double>(counts[j]) / static_cast<double>(kDraws) - expect);
    }
    worst_tv = std::max(worst_tv, l1 / 2);
    worst_none = std::max(
        worst_none,
        std::fabs(static_cast<double>(counts[static_cast<std::size_t>(n)]) / static_cast<double>(kDraws) -
                  exact.none_prob));
  }
  if (worst_tv > kSamplerTvTol) {
    detail = "total variation " + std::string(decimal12(worst_tv)) + " exceeds 0.005";
    return false;
  }
  if (worst_none > kSamplerNoneTol) {
    detail = "empty-display gap " + std::string(decimal12(worst_none)) + " exceeds 0.002";
    return false;
  }
  detail = "20 instances x 1e6 draws; worst tv " + std::string(decimal12(worst_tv)) + ", worst none gap " +
           std::string(decimal12(worst_none));
  return true;
}

// --- criterion 11: the interval congestion reduction reproduces Shapley
// payoffs exactly, and the permutation class counts obey their closed forms.

bool c11(std::string& detail) {
  UniformRng rng(1011);
  for (int g = 0; g < 100; ++g) {
    Game<Rational> game = random_game_of(rng, alternating(g));
    CongestionGame<Rational> cg = build_congestion_game(game);
    ProfileSpace space = ProfileSpace::of(game);
    for (int rep = 0; rep < 5; ++rep) {
      StrategyProfile profile = random_profile(space, rng);
      PayoffVector<Rational> via_congestion = congestion_payoffs(cg, profile);
      PayoffVector<Rational> via_mediator = payoff_vector(game, MediatorKind::Shapley, profile);
      if (via_congestion.per_player != via_mediator.per_player || !(via_congestion.welfare == via_mediator.welfare)) {
        detail = "congestion payoffs diverged in game " + count_str(g);
        return false;
      }
      if (!(congestion_potential(cg, profile) == potential_value(game, profile))) {
        detail = "congestion potential diverged in game " + count_str(g);
        return false;
      }
    }
  }
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 8; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    for (int j = 1; j <= n; ++j) {
      PermutationCounts counts = permutation_counts(n, j);  // enumerates all n! orders
      for (int r = 1; r <= j; ++r) {
        if (counts.b[static_cast<std::size_t>(r) - 1] != factorial / static_cast<std::uint64_t>(n - r + 1)) {
          detail = "class count b_" + count_str(r) + " off at n=" + count_str(n);
          return false;
        }
      }
      for (int r = 1; r + 1 <= j; ++r) {
        if (counts.a[static_cast<std::size_t>(r) - 1] !=
            counts.b[static_cast<std::size_t>(r)] - counts.b[static_cast<std::size_t>(r) - 1]) {
          detail = "class count a_" + count_str(r) + " off at n=" + count_str(n);
          return false;
        }
      }
    }
  }
  detail = "100 games agree through the reduction; class counts verified by enumeration up to n=8";
  return true;
}

// --- criterion 12: the mediator/axiom verdict table. Shapley passes the
// fairness set plus efficiency; top and btl pass fairness but fail
// equilibrium existence (criterion 6's instance); none and rand break
// leader monotonicity.

bool c12(std::string& detail) {
  UniformRng corpus_rng(1012);
  std::vector<Game<Rational>> corpus;
  corpus.reserve(1000);
  for (int i = 0; i < 1000; ++i) corpus.push_back(random_game_of(corpus_rng, alternating(i)));

  UniformRng rng(2012);
  const AxiomReport<Rational> shapley = check_axioms(MediatorKind::Shapley, corpus, 4, rng);
  for (Axiom axiom : {Axiom::NullPlayer, Axiom::Symmetry, Axiom::UserIndependence, Axiom::LeaderMonotonicity,
                      Axiom::Efficiency}) {
    if (!shapley.passed(axiom)) {
      detail = std::string("shapley failed ") + axiom_name(axiom);
      return false;
    }
  }
  for (MediatorKind kind : {MediatorKind::Top, MediatorKind::Btl}) {
    const AxiomReport<Rational> report = check_axioms(kind, corpus, 4, rng);
    for (Axiom axiom :
         {Axiom::NullPlayer, Axiom::Symmetry, Axiom::UserIndependence, Axiom::LeaderMonotonicity}) {
      if (!report.passed(axiom)) {
        detail = std::string(mediator_name(kind)) + " failed fairness axiom " + axiom_name(axiom);
        return false;
      }
    }
    if (!enumerate_pne(impossibility_game(Rational(9, 10), Rational(1, 2)), kind).empty()) {
      detail = std::string(mediator_name(kind)) + " unexpectedly has an equilibrium on the cyclic instance";
      return false;
    }
  }
  for (MediatorKind kind : {MediatorKind::None, MediatorKind::Rand}) {
    const AxiomReport<Rational> report = check_axioms(kind, corpus, 4, rng);
    if (report.passed(Axiom::LeaderMonotonicity)) {
      detail = std::string(mediator_name(kind)) + " produced no leader-monotonicity counterexample";
      return false;
    }
  }
  detail = "verdict pattern reproduced over 1000 games (4000 sampled cases per mediator)";
  return true;
}

// --- criterion 13: the personalized-offers re-run of criteria 3-5, with
// budgets spanning [1, menu size].

bool c13(std::string& detail) {
  UniformRng rng(1013);
  bool saw_multi_item_budget = false;
  for (int g = 0; g < 50; ++g) {
    Game<Rational> game = random_game_of(rng, GameMode::Personalized);
    for (const auto& player : game.players) {
      if (player.budget < 1 || player.budget > static_cast<int>(player.menu.size())) {
        detail = "generated budget outside [1, menu size]";
        return false;
      }
      if (player.budget > 1) saw_multi_item_budget = true;
    }
  }
  if (!saw_multi_item_budget) {
    detail = "personalized corpus never exercised a budget above 1";
    return false;
  }
  std::string sub;
  if (!oracle_equivalence(GameMode::Personalized, 1303, sub)) {
    detail = "oracle re-run: " + sub;
    return false;
  }
  if (!potential_identity(GameMode::Personalized, 1304, sub)) {
    detail = "potential re-run: " + sub;
    return false;
  }
  if (!convergence(GameMode::Personalized, 1305, sub)) {
    detail = "convergence re-run: " + sub;
    return false;
  }
  detail = "criteria 3-5 re-passed on personalized games with budgets in [1, menu size]";
  return true;
}

struct Criterion {
  int id;
  const char* title;
  int budget_seconds;
  bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "example game: distributions, payoffs, unique equilibrium, utility", 1, c01},
    {2, "example game under the top mediator", 1, c02},
    {3, "closed form vs permutation-average oracle", 30, c03},
    {4, "unilateral payoff changes equal potential changes", 30, c04},
    {5, "better-response dynamics converge to verified equilibria", 60, c05},
    {6, "cyclic instances: equilibrium only under shapley", 5, c06},
    {7, "price of anarchy: tight family exact, random games bounded", 60, c07},
    {8, "user price of anarchy: lower bounds and the plain-content cap", 60, c08},
    {9, "minimum-utility curve, gradient, one-player stationary point", 120, c09},
    {10, "threshold sampler matches the closed form empirically", 120, c10},
    {11, "congestion reduction payoffs and permutation class counts", 30, c11},
    {12, "axiom verdict pattern across all five mediators", 60, c12},
    {13, "personalized offers: oracle, potential, convergence re-runs", 90, c13},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int a = 1; a < argc; ++a) {
    const int id = std::atoi(argv[a]);
    if (id < 1 || id > 13) {
      std::fprintf(stderr, "unknown criterion \"%s\" (expected 1..13)\n", argv[a]);
      return 2;
    }
    selected.push_back(id);
  }

  int failures = 0;
  for (const Criterion& criterion : kCriteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), criterion.id) == selected.end()) continue;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    const bool in_budget = elapsed.count() < criterion.budget_seconds;
    if (ok && !in_budget) detail = "over the " + std::to_string(criterion.budget_seconds) + "s budget; " + detail;
    const bool pass = ok && in_budget;
    failures += pass ? 0 : 1;
    std::printf("criterion %02d [%s] %s: %s (%.2fs, budget %ds)\n", criterion.id, pass ? "pass" : "FAIL",
                criterion.title, detail.c_str(), elapsed.count(), criterion.budget_seconds);
    std::fflush(stdout);
  }
  if (selected.empty() || selected.size() > 1)
    std::printf("acceptance: %d/%d criteria passed\n",
                static_cast<int>((selected.empty() ? 13 : selected.size())) - failures,
                static_cast<int>(selected.empty() ? 13 : selected.size()));
  return failures == 0 ? 0 : 1;
}
