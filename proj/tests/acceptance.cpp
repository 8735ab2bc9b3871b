// One line per acceptance criterion; exit status 1 if any fails.

#include "qfaul/identities.hpp"
#include "qfaul/inverse.hpp"
#include "qfaul/parallel.hpp"
#include "qfaul/shape.hpp"
#include "qfaul/suites.hpp"
#include "qfaul/weights.hpp"

#include "fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qfaul;

namespace {

struct Criterion {
  int id;
  const char *title;
  double budget_seconds; // 0 = no budget
  std::function<std::string()> check; // empty string = pass
};

std::string all_routes_agree() {
  for (Family f : kAllFamilies) {
    auto det = compute_table(f, 8, Route::det, Execution::parallel);
    auto inv = compute_table(f, 8, Route::invert, Execution::parallel);
    for (std::size_t i = 0; i < det.size(); ++i)
      if (det[i].value != inv[i].value)
        return std::string(family_name(f)) + " invert differs at m=" +
               std::to_string(det[i].m) + " k=" + std::to_string(det[i].k);
    for (int m = 2; m <= 6; ++m)
      for (int k = 1; k < m; ++k) {
        LaurentPoly d = coefficient_det(f, m, k);
        if (coefficient_lgv_brute(f, m, k, Execution::parallel) != d ||
            coefficient_lgv_det(f, m, k) != d)
          return std::string(family_name(f)) + " lattice route differs at m=" +
                 std::to_string(m) + " k=" + std::to_string(k);
      }
  }
  return {};
}

std::string tables() {
  int count = 0;
  for (Family f : kAllFamilies)
    for (const auto &[mk, expected] : fixtures::table(f)) {
      ++count;
      if (coefficient_det(f, mk.first, mk.second) != expected)
        return std::string(family_name(f)) + "(" + std::to_string(mk.first) +
               "," + std::to_string(mk.second) + ") mismatch";
    }
  return count == 32 ? std::string{} : "expected 32 entries";
}

std::string figure_panels() {
  Configuration c = gh_config(4, 2);
  auto fams = enumerate_nonintersecting(c);
  if (fams.size() != 17)
    return std::to_string(fams.size()) + " families instead of 17";
  std::vector<LaurentPoly> weights;
  LaurentPoly total;
  for (const auto &fam : fams) {
    weights.push_back(weight_G(fam, c));
    total += weights.back();
  }
  if (total != fixtures::desc({10, 24, 24, 10}))
    return "total " + to_string(total);
  if (fixtures::as_multiset(weights) != fixtures::as_multiset(fixtures::g42_panels()))
    return "panel multiset differs";
  return {};
}

std::string table5() {
  Configuration c = gh_config(4, 2);
  std::vector<LaurentPoly> weights;
  LaurentPoly total;
  for (const auto &fam : enumerate_nonintersecting(c)) {
    weights.push_back(weight_H(fam, c));
    total += weights.back();
  }
  if (fixtures::as_multiset(weights) != fixtures::as_multiset(fixtures::h42_cells()))
    return "cell multiset differs";
  if (total != fixtures::table(Family::H).at({4, 2}))
    return "total " + to_string(total);
  return {};
}

std::string inverse_pairs() {
  for (Family f : kAllFamilies)
    if (!verify_inverse_pair(f, 6))
      return std::string(family_name(f)) + " inverse pair fails at n=6";
  const BigRational pts[] = {2, make_rational(1, 2), 3};
  for (int m = 2; m <= 6; ++m)
    for (const auto &t0 : pts)
      if (!verify_dstr_vanishing(m, t0))
        return "boundary sum nonzero at m=" + std::to_string(m);
  return {};
}

std::string identity_suites() {
  for (auto name : {"theorem1", "lemma2", "lemma1"})
    for (const auto &r : run_suite(name, std::nullopt, Execution::parallel))
      if (!r.pass)
        return r.key + (r.detail.empty() ? "" : ": " + r.detail);
  return {};
}

std::string structure() {
  for (const auto &r : run_suite("symmetry", 8, Execution::parallel))
    if (!r.pass)
      return r.key + ": " + r.detail;
  return {};
}

std::string classical() {
  return classical_check(4, 20) ? std::string{} : "classical sums differ";
}

std::string shapes() {
  for (Family f : {Family::P, Family::G})
    for (const auto &e : compute_table(f, 8, Route::det, Execution::parallel))
      if (!shape_report(e.value).log_concave)
        return std::string(family_name(f)) + "(" + std::to_string(e.m) + "," +
               std::to_string(e.k) + ") not log-concave";
  if (shape_report(faulhaber_Q(4, 1)).unimodal)
    return "Q(4,1) reported unimodal";
  if (shape_report(salie_H(4, 2)).unimodal)
    return "H(4,2) reported unimodal";
  return {};
}

} // namespace

int main() {
  const Criterion criteria[] = {
      {1, "table reproduction (P, Q, G, H, 32 entries)", 1.0, tables},
      {2, "G(4,2) families: 17 panels and their weights", 1.0, figure_panels},
      {3, "H(4,2) per-family weights and total", 0, table5},
      {4, "route agreement: det = lgv = lgv-det (m<=6), det = invert (m<=8)",
       120.0, all_routes_agree},
      {5, "inverse pairs at n=6 and vanishing boundary sums", 0, inverse_pairs},
      {6, "power-sum expansions, X identities and series identity", 0,
       identity_suites},
      {7, "palindromic, nonnegative, boundary identities (m<=8)", 0, structure},
      {8, "classical specialisation (m<=4, n<=20)", 0, classical},
      {9, "shape: P, G log-concave; Q(4,1), H(4,2) not unimodal", 0, shapes},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception &e) {
      problem = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (problem.empty() && c.budget_seconds > 0 && secs > c.budget_seconds)
      problem = "over time budget";
    bool pass = problem.empty();
    failures += !pass;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL",
                c.id, c.title, secs, pass ? "" : " - ", problem.c_str());
  }
  return failures ? 1 : 0;
}
