#include "qfaul/power_sums.hpp"

#include "qfaul/errors.hpp"
#include "qfaul/qnumbers.hpp"

#include <string>

namespace qfaul {

namespace {

void require_positive(int m, int n) {
  if (m < 1 || n < 1)
    throw BadIndex("power sums need m, n >= 1, got m=" + std::to_string(m) +
                   " n=" + std::to_string(n));
}

} // namespace

LaurentPoly s_sum(int m, int n) {
  require_positive(m, n);
  const LaurentPoly two = q_int(2, 2);
  LaurentPoly total;
  for (int k = 1; k <= n; ++k)
    total += (divexact(q_int(2 * k, 2), two) *
              pow(q_int(k, 2), static_cast<unsigned>(m - 1)))
                 .shifted((m + 1) * (n - k));
  return total;
}

LaurentPoly t_sum(int m, int n) {
  require_positive(m, n);
  LaurentPoly total;
  for (int k = 1; k <= n; ++k) {
    LaurentPoly term =
        pow(q_int(k, 2), static_cast<unsigned>(m)).shifted(m * (n - k));
    if ((n - k) % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

LaurentPoly x_poly(int n, unsigned power) {
  if (n < 0)
    throw BadIndex("x_poly needs n >= 0, got " + std::to_string(n));
  return pow(q_int(n, 2) * q_int(n + 1, 2), power)
      .shifted(-2 * n * static_cast<int>(power));
}

BigInt int_power_sum(int m, int n) {
  BigInt total = 0;
  for (int k = 1; k <= n; ++k) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(m));
    total += term;
  }
  return total;
}

BigInt int_alternating_sum(int m, int n) {
  BigInt total = 0;
  for (int k = 1; k <= n; ++k) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(m));
    if ((n - k) % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

} // namespace qfaul
