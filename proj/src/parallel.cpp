#include "qfaul/parallel.hpp"

#include "qfaul/errors.hpp"
#include "qfaul/weights.hpp"

#include <cstdlib>
#include <string>

namespace qfaul {

int thread_cap() {
  if (const char *env = std::getenv("QFAUL_THREADS")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

std::vector<TableEntry> compute_table(Family f, int max_m, Route route,
                                      Execution exec) {
  if (max_m < 1)
    throw BadIndex("table needs max_m >= 1, got " + std::to_string(max_m));
  std::vector<TableEntry> cells;
  for (int m = 1; m <= max_m; ++m)
    for (int k = 0; k < m; ++k)
      cells.push_back({m, k, {}});
  auto values = parallel_map(
      cells.size(),
      [&](std::size_t i) { return compute(f, cells[i].m, cells[i].k, route); },
      exec);
  for (std::size_t i = 0; i < cells.size(); ++i)
    cells[i].value = std::move(values[i]);
  return cells;
}

LaurentPoly coefficient_lgv_brute(Family f, int m, int k, Execution exec) {
  Configuration config = family_config(f, m, k);
  auto families = enumerate_nonintersecting(config);
  auto weights = parallel_map(
      families.size(),
      [&](std::size_t i) { return family_weight(f, families[i], config); },
      exec);
  LaurentPoly total;
  for (const auto &w : weights)
    total += w;
  return total;
}

} // namespace qfaul
