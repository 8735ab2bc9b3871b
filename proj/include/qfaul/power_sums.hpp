#pragma once

#include "qfaul/laurent_poly.hpp"

namespace qfaul {

// q-power sums and the X symbol. Every result is a Laurent polynomial in
// t = q^(1/2), so q-integers enter with stride 2.

/// S_{m,n} = sum_{k=1}^n [2k]/[2] [k]^(m-1) q^((m+1)(n-k)/2). Requires m, n >= 1.
LaurentPoly s_sum(int m, int n);

/// T_{m,n} = sum_{k=1}^n (-1)^(n-k) [k]^m q^(m(n-k)/2). Requires m, n >= 1.
LaurentPoly t_sum(int m, int n);

/// X_n^power with X_n = [n][n+1] / q^n. X_0 = 0.
LaurentPoly x_poly(int n, unsigned power);

/// The integer sums sum_{k<=n} k^m and sum_{k<=n} (-1)^(n-k) k^m.
BigInt int_power_sum(int m, int n);
BigInt int_alternating_sum(int m, int n);

} // namespace qfaul
