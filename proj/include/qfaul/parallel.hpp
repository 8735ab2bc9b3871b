#pragma once

#include "qfaul/routes.hpp"

#include <exception>
#include <optional>
#include <vector>

#include <omp.h>

namespace qfaul {

enum class Execution { serial, parallel };

/// Worker-thread cap: QFAUL_THREADS when it holds a positive integer,
/// otherwise the OpenMP default.
int thread_cap();

/// out[i] = fn(i) for 0 <= i < count. The parallel path schedules indices
/// dynamically over thread_cap() threads; results keep index order either
/// way. The first exception thrown by any task is rethrown after the loop.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn, Execution exec)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<std::optional<T>> slots(count);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i)
      slots[i].emplace(fn(i));
  } else {
    std::exception_ptr error;
    auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
    for (long i = 0; i < n; ++i) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(
            fn(static_cast<std::size_t>(i)));
      } catch (...) {
#pragma omp critical(qfaul_parallel_map_error)
        if (!error)
          error = std::current_exception();
      }
    }
    if (error)
      std::rethrow_exception(error);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto &s : slots)
    out.push_back(std::move(*s));
  return out;
}

struct TableEntry {
  int m = 0;
  int k = 0;
  LaurentPoly value;
};

/// Every coefficient 0 <= k < m, 1 <= m <= max_m, ordered by (m, k).
std::vector<TableEntry> compute_table(Family f, int max_m, Route route,
                                      Execution exec);

/// Brute-force route with the per-family weights evaluated in parallel.
LaurentPoly coefficient_lgv_brute(Family f, int m, int k, Execution exec);

} // namespace qfaul
