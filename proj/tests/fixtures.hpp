#pragma once

#include "qfaul/coefficients.hpp"
#include "qfaul/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using qfaul::Family;
using qfaul::LaurentPoly;

// Coefficients listed from the highest power down, as printed.
inline LaurentPoly desc(std::vector<long> cs) {
  std::vector<qfaul::BigInt> asc;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    asc.emplace_back(*it);
  return LaurentPoly(0, std::move(asc));
}

inline LaurentPoly qp(int e) { return LaurentPoly::monomial(1, e); }
inline LaurentPoly c(long v) { return LaurentPoly(v); }

/// Tabulated coefficients with 1 <= k < m, keyed by (m, k).
inline std::map<std::pair<int, int>, LaurentPoly> table(Family f) {
  const LaurentPoly q1 = desc({1, 1}); // q + 1
  switch (f) {
  case Family::P:
    return {
        {{2, 1}, c(1)},
        {{3, 1}, c(2) * q1},
        {{3, 2}, c(2) * q1},
        {{4, 1}, desc({3, 4, 3})},
        {{4, 2}, q1 * desc({5, 8, 5})},
        {{4, 3}, q1 * desc({5, 8, 5})},
        {{5, 1}, c(2) * q1 * desc({2, 1, 2})},
        {{5, 2}, q1 * desc({9, 19, 29, 19, 9})},
        {{5, 3}, c(2) * q1 * q1 * desc({1, 1, 1}) * desc({7, 11, 7})},
        {{5, 4}, c(2) * q1 * q1 * desc({1, 1, 1}) * desc({7, 11, 7})},
    };
  case Family::Q:
    return {
        {{2, 1}, c(1)},
        {{3, 1}, desc({2, 1, 2})},
        {{3, 2}, desc({2, 1, 2})},
        {{4, 1}, desc({3, 2, 4, 2, 3})},
        {{4, 2}, desc({1, 1, 1}) * desc({5, 1, 9, 1, 5})},
        {{4, 3}, desc({1, 1, 1}) * desc({5, 1, 9, 1, 5})},
    };
  case Family::G:
    return {
        {{2, 1}, c(2)},
        {{3, 1}, c(3) * q1},
        {{3, 2}, c(6) * q1},
        {{4, 1}, c(4) * desc({1, 1, 1})},
        {{4, 2}, c(2) * q1 * desc({5, 7, 5})},
        {{4, 3}, c(4) * q1 * desc({5, 7, 5})},
        {{5, 1}, c(5) * q1 * desc({1, 0, 1})},
        {{5, 2}, c(5) * q1 * desc({3, 4, 8, 4, 3})},
        {{5, 3}, c(5) * q1 * q1 * desc({7, 14, 20, 14, 7})},
        {{5, 4}, c(10) * q1 * q1 * desc({7, 14, 20, 14, 7})},
    };
  case Family::H:
    return {
        {{2, 1}, c(2)},
        {{3, 1}, desc({3, 2, 3})},
        {{3, 2}, c(2) * desc({3, 2, 3})},
        {{4, 1}, desc({4, 3, 4, 3, 4})},
        {{4, 2}, desc({10, 15, 30, 26, 30, 15, 10})},
        {{4, 3}, c(2) * desc({10, 15, 30, 26, 30, 15, 10})},
    };
  }
  return {};
}

/// Per-family G weights for the 17 families of the (4,2) configuration.
inline std::vector<LaurentPoly> g42_panels() {
  return {desc({1, 1, 1, 1}), desc({2, 2, 0}),    desc({1, 2, 1}),
          desc({4, 0}),       desc({2, 0, 2}),    desc({1, 2, 1, 0}),
          desc({4, 0, 0}),    desc({2, 0, 2, 0}), desc({2, 2}),
          desc({2, 2}),       desc({2, 2}),       desc({2, 2, 0}),
          desc({2, 2, 0}),    desc({2, 2, 0}),    desc({2, 2, 0, 0}),
          desc({2, 2, 0, 0}), desc({2, 2, 0, 0})};
}

/// Per-family H weights for the same 17 families.
inline std::vector<LaurentPoly> h42_cells() {
  const LaurentPoly q1 = desc({1, 1});
  const LaurentPoly q2 = desc({1, 0, 1}); // 1 + q^2
  const LaurentPoly q3 = desc({1, 0, 0, 1}); // 1 + q^3
  auto pw = [](const LaurentPoly &p, unsigned e) { return qfaul::pow(p, e); };
  return {pw(q1, 3) * q3,         c(2) * qp(2) * pw(q1, 2),
          pw(q1, 4),              c(2) * qp(1) * pw(q1, 2),
          c(2) * q1 * q3,         qp(2) * pw(q1, 4),
          c(2) * qp(3) * pw(q1, 2), c(2) * qp(2) * q1 * q3,
          c(2) * pw(q1, 2),       c(2) * q2,
          c(2) * q2,              c(2) * qp(2) * pw(q1, 2),
          c(2) * qp(2) * q2,      c(2) * qp(2) * q2,
          c(2) * qp(4) * pw(q1, 2), c(2) * qp(4) * q2,
          c(2) * qp(4) * q2};
}

/// Sorted textual forms, for multiset comparison.
inline std::vector<std::string> as_multiset(const std::vector<LaurentPoly> &ps) {
  std::vector<std::string> out;
  for (const auto &p : ps)
    out.push_back(qfaul::to_string(p));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace fixtures
