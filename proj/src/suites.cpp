#include "qfaul/suites.hpp"

#include "qfaul/identities.hpp"
#include "qfaul/inverse.hpp"
#include "qfaul/power_sums.hpp"
#include "qfaul/shape.hpp"
#include "qfaul/weights.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qfaul {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Case {
  std::string key;
  std::function<Outcome()> run;
};

std::string two(int v) {
  std::string s = std::to_string(v);
  return s.size() < 2 ? "0" + s : s;
}

std::string key(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto &p : parts) {
    if (!out.empty())
      out += '/';
    out += p;
  }
  return out;
}

std::string mk(int m, int k) { return "m=" + two(m) + "/k=" + two(k); }

Outcome check(bool ok, const std::string &fail_detail = {}) {
  return {ok, ok ? std::string{} : fail_detail};
}

Outcome equal_polys(const LaurentPoly &a, const LaurentPoly &b) {
  return check(a == b, to_string(a) + " != " + to_string(b));
}

LaurentPoly reversed(const LaurentPoly &p) {
  auto c = p.coeffs();
  return LaurentPoly(0, std::vector<BigInt>(c.rbegin(), c.rend()));
}

const std::vector<BigRational> &lemma1_points() {
  static const std::vector<BigRational> pts = {2, make_rational(1, 2), 3};
  return pts;
}

void theorem1_cases(std::vector<Case> &out, int max_m) {
  for (auto which : {PowerSumIdentity::p, PowerSumIdentity::qmn,
                     PowerSumIdentity::t2mnq, PowerSumIdentity::t2m1})
    for (int m = which == PowerSumIdentity::p ? 0 : 1; m <= max_m; ++m)
      for (int n = 1; n <= 6; ++n)
        out.push_back({key({"theorem1", std::string(identity_name(which)),
                            "m=" + two(m), "n=" + two(n)}),
                       [=] { return check(verify_theorem1(which, m, n)); }});
}

void lemma1_cases(std::vector<Case> &out, int max_l) {
  const std::pair<int, int> ab[] = {{1, 1}, {1, 0}, {0, 1}};
  for (auto [a, b] : ab)
    for (const auto &q0 : lemma1_points())
      for (int l = 1; l <= max_l; ++l)
        out.push_back(
            {key({"lemma1", "ab=" + std::to_string(a) + std::to_string(b),
                  "q0=" + q0.get_str(), "l=" + two(l)}),
             [=] { return check(verify_lemma1(a, b, q0, l, 12)); }});
}

void lemma2_cases(std::vector<Case> &out, int max_m) {
  for (auto which : {XIdentity::diff1, XIdentity::inverseq, XIdentity::diff,
                     XIdentity::sumd})
    for (int m = 1; m <= max_m; ++m)
      for (int l = 1; l <= max_m; ++l)
        out.push_back({key({"lemma2", std::string(identity_name(which)),
                            "m=" + two(m), "l=" + two(l)}),
                       [=] { return check(verify_lemma2(which, m, l)); }});
}

void inverse_cases(std::vector<Case> &out, std::optional<int> max_m) {
  int pair_n = max_m.value_or(6);
  int dstr_m = max_m.value_or(6);
  int invert_m = max_m.value_or(8);
  for (Family f : kAllFamilies) {
    std::string fam(family_name(f));
    out.push_back({key({"inverse", "pair", fam, "n=" + two(pair_n)}),
                   [=] { return check(verify_inverse_pair(f, pair_n)); }});
    for (int m = 2; m <= invert_m; ++m)
      for (int k = 1; k < m; ++k) {
        out.push_back({key({"inverse", "invert", fam, mk(m, k)}), [=] {
                         return equal_polys(coefficient_invert(f, m, k),
                                            coefficient_det(f, m, k));
                       }});
        out.push_back({key({"inverse", "detinv", fam, mk(m, k)}), [=] {
                         return check(verify_detinv_consistency(f, m, k));
                       }});
      }
  }
  for (int m = 2; m <= dstr_m; ++m)
    for (const auto &t0 : lemma1_points())
      out.push_back({key({"inverse", "dstr", "m=" + two(m), "t=" + t0.get_str()}),
                     [=] { return check(verify_dstr_vanishing(m, t0)); }});
}

void lgv_cases(std::vector<Case> &out, int max_m) {
  for (Family f : kAllFamilies) {
    std::string fam(family_name(f));
    for (int m = 2; m <= max_m; ++m)
      for (int k = 1; k < m; ++k) {
        out.push_back({key({"lgv", "brute", fam, mk(m, k)}), [=] {
                         return equal_polys(coefficient_lgv_brute(f, m, k),
                                            coefficient_det(f, m, k));
                       }});
        out.push_back({key({"lgv", "det", fam, mk(m, k)}), [=] {
                         return equal_polys(coefficient_lgv_det(f, m, k),
                                            coefficient_det(f, m, k));
                       }});
      }
  }
  for (int m = 2; m <= max_m; ++m)
    for (int k = 1; k < m; ++k) {
      out.push_back({key({"lgv", "alt", "G", mk(m, k)}), [=] {
                       auto config = gh_config(m, k);
                       LaurentPoly total;
                       for (const auto &fam : enumerate_nonintersecting(config))
                         total += weight_alt(fam, config, AltScheme::G_alt);
                       return equal_polys(total, salie_G(m, k));
                     }});
      out.push_back({key({"lgv", "alt", "H", mk(m, k)}), [=] {
                       auto config = gh_config(m, k);
                       LaurentPoly total, subsets;
                       for (const auto &fam : enumerate_nonintersecting(config)) {
                         total += weight_alt(fam, config, AltScheme::H_alt);
                         subsets +=
                             weight_alt_subsets(fam, config, AltScheme::H_alt);
                       }
                       if (total != subsets)
                         return Outcome{false, "product and subset forms differ"};
                       return equal_polys(total, salie_H(m, k));
                     }});
      out.push_back({key({"lgv", "mirror", "P", mk(m, k)}), [=] {
                       auto config = pq_config(m, k);
                       LaurentPoly even, odd;
                       for (const auto &fam : enumerate_nonintersecting(config)) {
                         even += family_weight(fam, scheme_P(false));
                         odd += family_weight(fam, scheme_P(true));
                       }
                       return equal_polys(reversed(even), odd);
                     }});
    }
  for (auto [m, k] : {std::pair{4, 2}, std::pair{5, 2}})
    for (Family f : {Family::G, Family::H})
      out.push_back({key({"lgv", "subsets", std::string(family_name(f)), mk(m, k)}),
                     [=] {
                       auto config = gh_config(m, k);
                       int i = 0;
                       for (const auto &fam : enumerate_nonintersecting(config)) {
                         LaurentPoly product = f == Family::G
                                                   ? weight_G(fam, config)
                                                   : weight_H(fam, config);
                         LaurentPoly subset = f == Family::G
                                                  ? weight_G_subsets(fam, config)
                                                  : weight_H_subsets(fam, config);
                         if (product != subset)
                           return Outcome{false, "family " + std::to_string(i) +
                                                     ": " + to_string(product) +
                                                     " != " + to_string(subset)};
                         ++i;
                       }
                       return Outcome{true, {}};
                     }});
}

void symmetry_cases(std::vector<Case> &out, int max_m) {
  for (Family f : kAllFamilies) {
    std::string fam(family_name(f));
    for (int m = 1; m <= max_m; ++m)
      for (int k = 0; k < m; ++k)
        out.push_back({key({"symmetry", "shape", fam, mk(m, k)}), [=] {
                         LaurentPoly p = coefficient_det(f, m, k);
                         bool nonneg = std::all_of(
                             p.coeffs().begin(), p.coeffs().end(),
                             [](const BigInt &c) { return c >= 0; });
                         if (!nonneg)
                           return Outcome{false, "negative coefficient in " +
                                                     to_string(p)};
                         return check(is_palindromic(p),
                                      "not palindromic: " + to_string(p));
                       }});
    for (int m = 2; m <= max_m; ++m)
      out.push_back({key({"symmetry", "boundary", fam, "m=" + two(m)}), [=] {
                       LaurentPoly top = coefficient_det(f, m, m - 1);
                       LaurentPoly below = coefficient_det(f, m, m - 2);
                       if (f == Family::G || f == Family::H)
                         below *= LaurentPoly(2);
                       return equal_polys(top, below);
                     }});
  }
}

void classical_cases(std::vector<Case> &out, int max_m) {
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= 20; ++n)
      out.push_back({key({"classical", "m=" + two(m), "n=" + two(n)}), [=] {
                       BigRational nn = BigRational(n) * (n + 1);
                       BigRational odd = 0, even = 0, pw = 1;
                       for (int k = 1; k <= m; ++k) {
                         pw *= nn;
                         odd += faulhaber_f(m, k) * pw * nn;
                         even += salie_s(m, k) * pw;
                       }
                       odd /= 2;
                       even /= 2;
                       odd.canonicalize();
                       even.canonicalize();
                       std::ostringstream d;
                       d << "odd " << odd.get_str() << " vs "
                         << int_power_sum(2 * m + 1, n).get_str() << ", even "
                         << even.get_str() << " vs "
                         << int_alternating_sum(2 * m, n).get_str();
                       return check(
                           odd == BigRational(int_power_sum(2 * m + 1, n)) &&
                               even == BigRational(int_alternating_sum(2 * m, n)),
                           d.str());
                     }});
}

void collect(std::string_view suite, std::optional<int> max_m,
             std::vector<Case> &out) {
  if (suite == "theorem1")
    theorem1_cases(out, max_m.value_or(5));
  else if (suite == "lemma1")
    lemma1_cases(out, max_m.value_or(5));
  else if (suite == "lemma2")
    lemma2_cases(out, max_m.value_or(8));
  else if (suite == "inverse")
    inverse_cases(out, max_m);
  else if (suite == "lgv")
    lgv_cases(out, max_m.value_or(6));
  else if (suite == "symmetry")
    symmetry_cases(out, max_m.value_or(8));
  else if (suite == "classical")
    classical_cases(out, max_m.value_or(4));
  else if (suite == "all")
    for (auto name : kSuiteNames)
      collect(name, max_m, out);
  else
    throw std::invalid_argument("unknown suite: " + std::string(suite));
}

} // namespace

bool is_suite_name(std::string_view name) {
  return name == "all" ||
         std::find(kSuiteNames.begin(), kSuiteNames.end(), name) !=
             kSuiteNames.end();
}

std::vector<CaseResult> run_suite(std::string_view suite,
                                  std::optional<int> max_m, Execution exec) {
  std::vector<Case> cases;
  collect(suite, max_m, cases);
  auto outcomes = parallel_map(
      cases.size(),
      [&](std::size_t i) {
        try {
          return cases[i].run();
        } catch (const std::exception &e) {
          return Outcome{false, std::string("exception: ") + e.what()};
        }
      },
      exec);
  std::vector<CaseResult> results;
  results.reserve(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i)
    results.push_back({cases[i].key, outcomes[i].pass,
                       std::move(outcomes[i].detail)});
  std::sort(results.begin(), results.end(),
            [](const CaseResult &a, const CaseResult &b) { return a.key < b.key; });
  return results;
}

} // namespace qfaul
