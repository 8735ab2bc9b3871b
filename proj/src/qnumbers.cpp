#include "qfaul/qnumbers.hpp"

#include <stdexcept>

namespace qfaul {

LaurentPoly q_int(int k, int stride) {
  if (stride <= 0)
    throw std::invalid_argument("q_int stride must be positive");
  if (k <= 0)
    return {};
  std::vector<BigInt> c(static_cast<std::size_t>((k - 1) * stride + 1));
  for (int i = 0; i < k; ++i)
    c[static_cast<std::size_t>(i * stride)] = 1;
  return LaurentPoly(0, std::move(c));
}

LaurentPoly q_fact(int k, int stride) {
  LaurentPoly r = 1;
  for (int i = 1; i <= k; ++i)
    r *= q_int(i, stride);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt multiset_count(long n, long r) {
  if (n < 0 || r < 0)
    return 0;
  if (r == 0)
    return n == 0 ? 1 : 0;
  return binomial(n + r - 1, r - 1);
}

} // namespace qfaul
