#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace recgame {

// Every scan below has a serial path and an OpenMP path that chunks the
// index range and merges partial results in chunk order. The two paths
// produce identical results (including tie-breaks) for pure `f`, so callers
// may switch freely; tests pin the equivalence. Callables must not throw.
enum class Execution { Serial, Parallel };

namespace detail {

inline int scan_chunks(std::uint64_t n) {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::uint64_t chunks = std::max<std::uint64_t>(static_cast<std::uint64_t>(threads) * 4, 1);
  return static_cast<int>(std::min<std::uint64_t>(chunks, std::max<std::uint64_t>(n, 1)));
}

template <typename T, typename Eval, typename Better>
std::pair<std::uint64_t, T> extreme_by(std::uint64_t n, Execution exec, Eval&& eval, Better&& better) {
  if (exec == Execution::Serial) {
    std::uint64_t best_i = 0;
    T best = eval(std::uint64_t{0});
    for (std::uint64_t i = 1; i < n; ++i) {
      T v = eval(i);
      if (better(v, best)) {
        best = std::move(v);
        best_i = i;
      }
    }
    return {best_i, std::move(best)};
  }
  const int chunks = scan_chunks(n);
  std::vector<std::pair<std::uint64_t, T>> parts(static_cast<std::size_t>(chunks), {0, T{}});
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t lo = n * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);
    const std::uint64_t hi = n * (static_cast<std::uint64_t>(c) + 1) / static_cast<std::uint64_t>(chunks);
    std::uint64_t best_i = lo;
    T best = eval(lo);
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
      T v = eval(i);
      if (better(v, best)) {
        best = std::move(v);
        best_i = i;
      }
    }
    parts[static_cast<std::size_t>(c)] = {best_i, std::move(best)};
  }
  std::pair<std::uint64_t, T> out = std::move(parts[0]);
  for (std::size_t c = 1; c < parts.size(); ++c)
    if (better(parts[c].second, out.second)) out = std::move(parts[c]);
  return out;
}

}  // namespace detail

// Ascending indices in [0, n) satisfying pred.
template <typename Pred>
std::vector<std::uint64_t> filter_indices(std::uint64_t n, Execution exec, Pred&& pred) {
  std::vector<std::uint64_t> out;
  if (exec == Execution::Serial) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (pred(i)) out.push_back(i);
    return out;
  }
  const int chunks = detail::scan_chunks(n);
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t lo = n * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);
    const std::uint64_t hi = n * (static_cast<std::uint64_t>(c) + 1) / static_cast<std::uint64_t>(chunks);
    for (std::uint64_t i = lo; i < hi; ++i)
      if (pred(i)) parts[static_cast<std::size_t>(c)].push_back(i);
  }
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Index in [0, n) maximizing eval, earliest index on exact ties; n >= 1.
template <typename T, typename Eval>
std::pair<std::uint64_t, T> max_by(std::uint64_t n, Execution exec, Eval&& eval) {
  return detail::extreme_by<T>(n, exec, eval, [](const T& a, const T& b) { return a > b; });
}

// Index in [0, n) minimizing eval, earliest index on exact ties; n >= 1.
template <typename T, typename Eval>
std::pair<std::uint64_t, T> min_by(std::uint64_t n, Execution exec, Eval&& eval) {
  return detail::extreme_by<T>(n, exec, eval, [](const T& a, const T& b) { return a < b; });
}

}  // namespace recgame
