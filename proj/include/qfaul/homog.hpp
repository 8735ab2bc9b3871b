#pragma once

#include "qfaul/laurent_poly.hpp"

namespace qfaul {

/// Complete homogeneous symmetric function h_n in r variables set to 1 and s
/// variables set to q^qexp, as a polynomial in q:
///
///   sum_j C(n-j+r-1, r-1) C(j+s-1, s-1) q^(qexp*j).
///
/// Returns 0 for n < 0, r < 0 or s < 0. With r = s = 0 the alphabet is empty,
/// so h_0 = 1 and h_n = 0 for n > 0.
LaurentPoly h_spec(int n, int r, int s, int qexp = 1);

/// h_n({1, q^qexp}^r), i.e. h_spec(n, r, r, qexp).
inline LaurentPoly h_pair(int n, int r, int qexp = 1) {
  return h_spec(n, r, r, qexp);
}

// Entries of the Q, G and H forward matrices. All three are polynomials in q.

/// c(k,m) = h_{2m-k}({1,q^2}^{k-m+1}) + q h_{2m-k-1}({1,q^2}^{k-m+1}).
LaurentPoly c_poly(int k, int m);

/// g(k,m) = h_{2m-k}({1}^{k-m+1},{q}^{k-m}) + h_{2m-k}({1}^{k-m},{q}^{k-m+1}).
LaurentPoly g_poly(int k, int m);

/// d(k,m) = g(k,m)(q^2) + q g(k-1,m-1)(q^2).
LaurentPoly d_poly(int k, int m);

} // namespace qfaul
