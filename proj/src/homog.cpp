#include "qfaul/homog.hpp"

#include "qfaul/qnumbers.hpp"

namespace qfaul {

LaurentPoly h_spec(int n, int r, int s, int qexp) {
  if (n < 0 || r < 0 || s < 0)
    return {};
  std::vector<BigInt> c(static_cast<std::size_t>(n * qexp + 1));
  for (int j = 0; j <= n; ++j)
    c[static_cast<std::size_t>(j * qexp)] =
        multiset_count(n - j, r) * multiset_count(j, s);
  return LaurentPoly(0, std::move(c));
}

LaurentPoly c_poly(int k, int m) {
  int r = k - m + 1;
  return h_pair(2 * m - k, r, 2) + LaurentPoly::var() * h_pair(2 * m - k - 1, r, 2);
}

LaurentPoly g_poly(int k, int m) {
  int n = 2 * m - k;
  return h_spec(n, k - m + 1, k - m) + h_spec(n, k - m, k - m + 1);
}

LaurentPoly d_poly(int k, int m) {
  return stretch(g_poly(k, m), 2) +
         LaurentPoly::var() * stretch(g_poly(k - 1, m - 1), 2);
}

} // namespace qfaul
