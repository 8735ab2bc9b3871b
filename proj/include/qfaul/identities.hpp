#pragma once

#include "qfaul/laurent_poly.hpp"

#include <optional>
#include <string_view>
#include <utility>

namespace qfaul {

/// The four power-sum expansions:
///   p      S_{2m+1,n} in P         (m >= 0)
///   qmn    S_{2m,n}   in Q(t)      (m >= 1)
///   t2mnq  T_{2m,n}   in G         (m >= 1)
///   t2m1   T_{2m-1,n} in H(t)      (m >= 1)
enum class PowerSumIdentity { p, qmn, t2mnq, t2m1 };

/// Building blocks of the expansions: differences and sums of powers of X_l.
enum class XIdentity { diff1, inverseq, diff, sumd };

std::string_view identity_name(PowerSumIdentity which);
std::string_view identity_name(XIdentity which);
std::optional<PowerSumIdentity> parse_power_sum_identity(std::string_view name);
std::optional<XIdentity> parse_x_identity(std::string_view name);

/// Both sides of the expansion after multiplying through by its denominator
/// factors, as polynomials in t = q^(1/2):
///   p      [m+1]! [2]
///   qmn    [2] prod_{j=0}^{m} (1 - t^(2j+1))
///   t2mnq  prod_{j=1}^{m} (1 + t^(2j))
///   t2m1   (1+t)^m prod_{j=1}^{m} (1 + t^(2j-1))
/// Throws BadIndex for n < 1, m < 0, or m = 0 outside `p`.
std::pair<LaurentPoly, LaurentPoly> cleared_sides(PowerSumIdentity which,
                                                  int m, int n);

/// True iff the cleared sides are equal polynomials.
bool verify_theorem1(PowerSumIdentity which, int m, int n);

/// Both sides of an X identity in t (Laurent), for m, l >= 1.
std::pair<LaurentPoly, LaurentPoly> x_identity_sides(XIdentity which, int m,
                                                     int l);
bool verify_lemma2(XIdentity which, int m, int l);

/// Compares, coefficient by coefficient up to z^order, the series
///   sum_M z^M sum_k h_{M-2k}({1}^{k+a}, {q}^{k+b}) x^k,  x = q^l / [l]^2,
/// with its partial-fraction closed form, at q = q0 in exact rationals.
/// (a, b) must be (1,1), (1,0) or (0,1) (std::invalid_argument otherwise).
/// Throws SingularSample for q0 in {0, 1} or when a denominator vanishes.
bool verify_lemma1(int a, int b, const BigRational &q0, int l, int order);

/// At q = 1, P and G give the classical Faulhaber and Salie coefficients
///   f(m,k) = (-1)^(m-k) k!/(m+1)! P(m,m-k)(1)
///   s(m,k) = (-1)^(m-k) 2^(k-m) G(m,m-k)(1)
/// with sum_{j<=n} j^(2m+1) = 1/2 sum_k f(m,k) (n(n+1))^(k+1) and
/// sum_{j<=n} (-1)^(n-j) j^(2m) = 1/2 sum_k s(m,k) (n(n+1))^k.
BigRational faulhaber_f(int m, int k);
BigRational salie_s(int m, int k);
bool classical_check(int max_m, int max_n);

} // namespace qfaul
