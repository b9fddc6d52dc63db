// Benchmark: the parallel scan kernels against the serial reference that the
// tests use as ground truth. Both paths must agree bit-for-bit; this tool
// reports wall time and verifies the agreement on realistic workloads.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "recgame/dynamics.hpp"
#include "recgame/metrics.hpp"
#include "recgame/rng.hpp"
#include "recgame/utility_min.hpp"

using namespace recgame;

namespace {

Game<double> bench_game(int players, int items, int users, std::uint64_t seed) {
  UniformRng rng(seed);
  Game<double> g;
  g.mode = GameMode::Single;
  for (int u = 1; u <= users; ++u) g.users.push_back("u" + std::to_string(u));
  for (int l = 1; l <= items; ++l) g.items.push_back("l" + std::to_string(l));
  g.sat.assign(static_cast<std::size_t>(users), std::vector<double>(static_cast<std::size_t>(items)));
  for (auto& row : g.sat)
    for (double& v : row) v = rng.next_unit();
  std::vector<ItemIndex> menu(static_cast<std::size_t>(items));
  std::iota(menu.begin(), menu.end(), 0);
  for (int j = 1; j <= players; ++j) g.players.push_back({"p" + std::to_string(j), menu, 1});
  return g;
}

template <typename F>
double time_best_of(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto start = std::chrono::steady_clock::now();
    body();
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-34s %9.3fs %9.3fs %7.2fx   %s\n", name, serial, parallel, serial / parallel,
              agree ? "outputs identical" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
  std::printf("%-34s %10s %10s %8s   %s\n", "kernel", "serial", "parallel", "speedup", "agreement");

  {
    Game<double> g = bench_game(6, 6, 8, 42);
    ProfileSpace space = ProfileSpace::of(g);
    std::vector<std::uint64_t> serial_out, parallel_out;
    double ts = time_best_of(2, [&] { serial_out = enumerate_pne_indices(g, MediatorKind::Shapley, space, Execution::Serial); });
    double tp = time_best_of(2, [&] { parallel_out = enumerate_pne_indices(g, MediatorKind::Shapley, space, Execution::Parallel); });
    char label[64];
    std::snprintf(label, sizeof(label), "pne scan (%llu profiles)", static_cast<unsigned long long>(space.size()));
    report(label, ts, tp, serial_out == parallel_out);
  }

  {
    Game<double> g = bench_game(7, 7, 6, 7);
    PoAResult<double> serial_out = price_of_anarchy(g, MediatorKind::Top, kDefaultProfileCap, Execution::Serial);
    PoAResult<double> parallel_out;
    double ts = time_best_of(2, [&] {
      serial_out = price_of_anarchy(g, MediatorKind::Top, kDefaultProfileCap, Execution::Serial);
    });
    double tp = time_best_of(2, [&] {
      parallel_out = price_of_anarchy(g, MediatorKind::Top, kDefaultProfileCap, Execution::Parallel);
    });
    bool agree = serial_out.optimum == parallel_out.optimum &&
                 serial_out.optimum_witness == parallel_out.optimum_witness &&
                 serial_out.worst_equilibrium == parallel_out.worst_equilibrium;
    report("poa scan (823543 profiles)", ts, tp, agree);
  }

  {
    CurveOptions options;
    options.minimality_samples = 256;
    std::vector<CurvePoint> serial_out, parallel_out;
    double ts = time_best_of(2, [&] {
      options.execution = Execution::Serial;
      serial_out = min_utility_curve(900, options);
    });
    double tp = time_best_of(2, [&] {
      options.execution = Execution::Parallel;
      parallel_out = min_utility_curve(900, options);
    });
    bool agree = serial_out.size() == parallel_out.size();
    for (std::size_t i = 0; agree && i < serial_out.size(); ++i)
      agree = serial_out[i].u_star == parallel_out[i].u_star && serial_out[i].residual == parallel_out[i].residual;
    report("utility curve (n <= 900)", ts, tp, agree);
  }

  return 0;
}
