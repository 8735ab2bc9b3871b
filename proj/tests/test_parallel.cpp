#include "qfaul/errors.hpp"
#include "qfaul/parallel.hpp"
#include "qfaul/suites.hpp"

#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

using namespace qfaul;

TEST_SUITE("parallel") {
  TEST_CASE("parallel_map keeps index order") {
    auto sq = [](std::size_t i) { return static_cast<long>(i * i); };
    auto serial = parallel_map(100, sq, Execution::serial);
    auto parallel = parallel_map(100, sq, Execution::parallel);
    CHECK(serial == parallel);
    CHECK(parallel[7] == 49);
    CHECK(parallel_map(0, sq, Execution::parallel).empty());
  }

  TEST_CASE("exceptions propagate out of the parallel loop") {
    auto boom = [](std::size_t i) -> int {
      if (i == 3)
        throw std::runtime_error("boom");
      return 0;
    };
    CHECK_THROWS_AS(parallel_map(10, boom, Execution::parallel), std::runtime_error);
    CHECK_THROWS_AS(parallel_map(10, boom, Execution::serial), std::runtime_error);
  }

  TEST_CASE("thread cap from the environment") {
    setenv("QFAUL_THREADS", "3", 1);
    CHECK(thread_cap() == 3);
    setenv("QFAUL_THREADS", "0", 1);
    CHECK(thread_cap() >= 1);
    setenv("QFAUL_THREADS", "x2", 1);
    CHECK(thread_cap() >= 1);
    unsetenv("QFAUL_THREADS");
    CHECK(thread_cap() >= 1);
  }

  TEST_CASE("tables agree between serial and parallel execution") {
    for (Family f : kAllFamilies) {
      auto s = compute_table(f, 6, Route::det, Execution::serial);
      auto p = compute_table(f, 6, Route::det, Execution::parallel);
      REQUIRE(s.size() == 21);
      REQUIRE(p.size() == s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].m == p[i].m);
        CHECK(s[i].k == p[i].k);
        CHECK(s[i].value == p[i].value);
      }
      CHECK(coefficient_lgv_brute(f, 6, 3, Execution::parallel) ==
            coefficient_lgv_brute(f, 6, 3, Execution::serial));
    }
    CHECK_THROWS_AS(compute_table(Family::P, 0, Route::det, Execution::serial),
                    BadIndex);
  }

  TEST_CASE("routes") {
    for (Route r : kAllRoutes) {
      CHECK(parse_route(route_name(r)) == r);
      CHECK(compute(Family::H, 4, 2, r) == compute(Family::H, 4, 2, Route::det));
      CHECK_THROWS_AS(compute(Family::G, 2, 2, r), BadIndex);
    }
    CHECK(parse_route("lgv") == Route::lgv_brute);
    CHECK_FALSE(parse_route("bogus").has_value());
  }

  TEST_CASE("suites are deterministic and sorted") {
    auto s = run_suite("symmetry", 5, Execution::serial);
    auto p = run_suite("symmetry", 5, Execution::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].key == p[i].key);
      CHECK(s[i].pass == p[i].pass);
      CHECK(s[i].pass);
      if (i)
        CHECK(s[i - 1].key < s[i].key);
    }
    CHECK(is_suite_name("all"));
    CHECK_FALSE(is_suite_name("nope"));
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  }
}
