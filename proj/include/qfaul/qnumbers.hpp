#pragma once

#include "qfaul/laurent_poly.hpp"

namespace qfaul {

/// q-integer [k] = 1 + q + ... + q^(k-1) in the variable t with q = t^stride.
/// stride 1 gives a polynomial in q; stride 2 gives [k] in t = q^(1/2).
LaurentPoly q_int(int k, int stride = 1);

/// q-factorial [1][2]...[k], same stride convention as q_int.
LaurentPoly q_fact(int k, int stride = 1);

/// Ordinary binomial coefficient with C(n, k) = 0 outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Number of degree-n monomials in r variables (multisets of size n from r
/// items). multiset_count(0, 0) == 1 and multiset_count(n, 0) == 0 for n > 0.
BigInt multiset_count(long n, long r);

} // namespace qfaul
