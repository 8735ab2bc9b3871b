#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qfaul {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in canonical form. Throws DivideByZero when den == 0.
BigRational make_rational(const BigInt &num, const BigInt &den = 1);

/// Laurent polynomial in one variable t over arbitrary-precision integers.
///
/// Storage is dense: coeffs()[i] is the coefficient of t^(min_exp() + i).
/// Values are always normalized (no leading or trailing zero coefficients),
/// and the zero polynomial is the empty sequence with min_exp() == 0, so
/// structural equality is polynomial equality.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long value);
  LaurentPoly(const BigInt &value);
  LaurentPoly(int min_exp, std::vector<BigInt> coeffs);

  /// Ascending coefficients starting at t^0.
  static LaurentPoly from_ascending(std::initializer_list<long> coeffs);
  static LaurentPoly monomial(const BigInt &coeff, int exp);
  /// The variable t itself.
  static LaurentPoly var() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  /// Highest exponent present; equals min_exp() - 1 for the zero polynomial.
  int max_exp() const {
    return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
  }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  BigInt coeff(int exp) const;
  bool is_polynomial() const { return is_zero() || min_exp_ >= 0; }

  /// Multiplies by t^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly &operator+=(const LaurentPoly &rhs);
  LaurentPoly &operator-=(const LaurentPoly &rhs);
  LaurentPoly &operator*=(const LaurentPoly &rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly &rhs) {
    return lhs += rhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly &rhs) {
    return lhs -= rhs;
  }
  friend LaurentPoly operator*(const LaurentPoly &lhs, const LaurentPoly &rhs);
  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
  void normalize();

  int min_exp_ = 0;
  std::vector<BigInt> coeffs_;
};

LaurentPoly pow(const LaurentPoly &base, unsigned exponent);

/// Exact quotient a / b. Throws DivideByZero for b == 0 and NotDivisible when
/// b does not divide a in Z[t, 1/t].
LaurentPoly divexact(const LaurentPoly &a, const LaurentPoly &b);

/// Exact evaluation. Throws DivideByZero for x == 0 with negative exponents.
BigRational eval(const LaurentPoly &p, const BigRational &x);

/// Substitution t -> t^s.
LaurentPoly stretch(const LaurentPoly &p, int s);

/// Human-readable form in ascending powers, e.g. "10 + 24q + 24q^2 + 10q^3".
std::string to_string(const LaurentPoly &p, const std::string &var = "q");

} // namespace qfaul
