#pragma once

#include "qfaul/parallel.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qfaul {

struct CaseResult {
  std::string key;
  bool pass = false;
  std::string detail;
};

/// Verification suites: theorem1, lemma1, lemma2, inverse, lgv, symmetry,
/// classical, and all (every suite, in that order).
inline constexpr std::array<std::string_view, 7> kSuiteNames = {
    "theorem1", "lemma1", "lemma2", "inverse", "lgv", "symmetry", "classical"};

bool is_suite_name(std::string_view name);

/// Runs a suite. `max_m`, when given, replaces the suite's main size bound:
///   theorem1   m <= 5, n <= 6
///   lemma1     l <= 5 (order 12, q0 in {2, 1/2, 3})
///   lemma2     m, l <= 8
///   inverse    pairs at n = 6, d-str m <= 6, det = invert for m <= 8
///   lgv        m <= 6
///   symmetry   m <= 8
///   classical  m <= 4, n <= 20
/// Cases are evaluated per `exec` and returned sorted by key. Throws
/// std::invalid_argument for an unknown suite.
std::vector<CaseResult> run_suite(std::string_view suite,
                                  std::optional<int> max_m = std::nullopt,
                                  Execution exec = Execution::parallel);

} // namespace qfaul
