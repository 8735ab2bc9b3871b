#include "qfaul/errors.hpp"
#include "qfaul/identities.hpp"
#include "qfaul/power_sums.hpp"
#include "qfaul/qnumbers.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace qfaul;

namespace {

// Ascending coefficients in t.
LaurentPoly t_asc(std::vector<long> cs, int min_exp = 0) {
  std::vector<BigInt> v(cs.begin(), cs.end());
  return LaurentPoly(min_exp, std::move(v));
}

} // namespace

TEST_SUITE("identities") {
  TEST_CASE("power sums") {
    CHECK(s_sum(1, 2) == t_asc({1, 0, 1, 0, 1}));
    for (int m = 1; m <= 6; ++m) {
      CHECK(s_sum(m, 1) == LaurentPoly(1));
      CHECK(t_sum(m, 1) == LaurentPoly(1));
    }
    LaurentPoly four_over_two = t_asc({1, 0, 0, 0, 1}) * pow(t_asc({1, 0, 1}), 2);
    CHECK(s_sum(3, 2) == four_over_two + LaurentPoly::monomial(1, 4));
    CHECK(t_sum(2, 2) == t_asc({1, 0, 1, 0, 1}));
    CHECK(t_sum(1, 2) == t_asc({1, -1, 1}));
    CHECK_THROWS_AS(s_sum(0, 2), BadIndex);
  }

  TEST_CASE("power sums at t = 1 are integer power sums") {
    for (int m = 1; m <= 7; ++m)
      for (int n = 1; n <= 8; ++n) {
        CHECK(eval(s_sum(m, n), 1) == BigRational(int_power_sum(m, n)));
        CHECK(eval(t_sum(m, n), 1) == BigRational(int_alternating_sum(m, n)));
      }
    CHECK(int_power_sum(3, 4) == 100);
    CHECK(int_alternating_sum(2, 3) == 6);
  }

  TEST_CASE("X symbol") {
    CHECK(x_poly(1, 1) == t_asc({1, 0, 1}, -2));
    for (int n = 0; n <= 4; ++n)
      CHECK(x_poly(n, 0) == LaurentPoly(1));
    CHECK(x_poly(2, 1) == (t_asc({1, 0, 1}) * t_asc({1, 0, 1, 0, 1})).shifted(-4));
    CHECK(x_poly(0, 3).is_zero());
  }

  TEST_CASE("power-sum expansions") {
    for (int n = 1; n <= 6; ++n)
      CHECK(verify_theorem1(PowerSumIdentity::p, 0, n));
    CHECK(verify_theorem1(PowerSumIdentity::t2mnq, 1, 2));
    CHECK(verify_theorem1(PowerSumIdentity::t2m1, 2, 3));
    for (auto which : {PowerSumIdentity::p, PowerSumIdentity::qmn,
                       PowerSumIdentity::t2mnq, PowerSumIdentity::t2m1})
      for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 5; ++n) {
          auto [lhs, rhs] = cleared_sides(which, m, n);
          CHECK(lhs.is_polynomial());
          CHECK(rhs.is_polynomial());
          CHECK(lhs == rhs);
        }
    CHECK_THROWS_AS(cleared_sides(PowerSumIdentity::qmn, 0, 2), BadIndex);
    CHECK_THROWS_AS(cleared_sides(PowerSumIdentity::p, 1, 0), BadIndex);
  }

  TEST_CASE("expansions detect a wrong coefficient") {
    // Both signs of the isolated boundary term matter.
    auto [lhs, rhs] = cleared_sides(PowerSumIdentity::t2m1, 2, 2);
    auto [lhs3, rhs3] = cleared_sides(PowerSumIdentity::t2m1, 2, 3);
    CHECK(lhs == rhs);
    CHECK(lhs3 == rhs3);
    CHECK(lhs != rhs + LaurentPoly::monomial(1, 3));
  }

  TEST_CASE("X identities") {
    CHECK(verify_lemma2(XIdentity::diff, 1, 1));
    CHECK(verify_lemma2(XIdentity::diff1, 1, 2));
    CHECK(verify_lemma2(XIdentity::sumd, 2, 1));
    for (auto which : {XIdentity::diff1, XIdentity::inverseq, XIdentity::diff,
                       XIdentity::sumd})
      for (int m = 1; m <= 5; ++m)
        for (int l = 1; l <= 5; ++l)
          CHECK(verify_lemma2(which, m, l));
    auto [lhs, rhs] = x_identity_sides(XIdentity::diff, 1, 1);
    CHECK(lhs == t_asc({1, 0, 1}, -2));
    CHECK_THROWS_AS(verify_lemma2(XIdentity::diff, 0, 1), BadIndex);
  }

  TEST_CASE("series identity") {
    CHECK(verify_lemma1(1, 1, 2, 1, 10));
    CHECK(verify_lemma1(1, 0, make_rational(1, 2), 3, 12));
    CHECK(verify_lemma1(0, 1, 3, 2, 0));
    for (auto q0 : {BigRational(2), make_rational(1, 2), BigRational(3),
                    make_rational(-2, 3)})
      for (int l = 1; l <= 4; ++l) {
        CHECK(verify_lemma1(1, 1, q0, l, 8));
        CHECK(verify_lemma1(1, 0, q0, l, 8));
        CHECK(verify_lemma1(0, 1, q0, l, 8));
      }
    CHECK_THROWS_AS(verify_lemma1(1, 1, 1, 2, 5), SingularSample);
    CHECK_THROWS_AS(verify_lemma1(1, 1, 0, 2, 5), SingularSample);
    CHECK_THROWS_AS(verify_lemma1(1, 1, -1, 2, 5), SingularSample);
    CHECK_THROWS_AS(verify_lemma1(0, 0, 2, 2, 5), std::invalid_argument);
  }

  TEST_CASE("classical specialisation") {
    CHECK(faulhaber_f(1, 1) == make_rational(1, 2));
    CHECK(salie_s(1, 1) == 1);
    CHECK(classical_check(4, 20));
    CHECK(classical_check(6, 10));
  }

  TEST_CASE("names round-trip") {
    for (auto w : {PowerSumIdentity::p, PowerSumIdentity::qmn,
                   PowerSumIdentity::t2mnq, PowerSumIdentity::t2m1})
      CHECK(parse_power_sum_identity(identity_name(w)) == w);
    for (auto w : {XIdentity::diff1, XIdentity::inverseq, XIdentity::diff,
                   XIdentity::sumd})
      CHECK(parse_x_identity(identity_name(w)) == w);
    CHECK_FALSE(parse_x_identity("nope").has_value());
  }
}
