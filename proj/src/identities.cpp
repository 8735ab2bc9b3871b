#include "qfaul/identities.hpp"

#include "qfaul/coefficients.hpp"
#include "qfaul/errors.hpp"
#include "qfaul/homog.hpp"
#include "qfaul/power_sums.hpp"
#include "qfaul/qnumbers.hpp"

#include <string>

namespace qfaul {

namespace {

const LaurentPoly kOne = 1;

LaurentPoly t_pow(int e) { return LaurentPoly::monomial(1, e); }

// (-t^(2n))^e
LaurentPoly signed_shift(int n, int e) {
  return LaurentPoly::monomial(e % 2 ? -1 : 1, 2 * n * e);
}

// [n][n+1] in t.
LaurentPoly xn_num(int n) { return q_int(n, 2) * q_int(n + 1, 2); }

// A(l) = [2l+1]_{t} / t^l, the stride-1 q-integer in t.
LaurentPoly a_poly(int l) { return q_int(2 * l + 1, 1).shifted(-l); }

LaurentPoly product_range(int lo, int hi, LaurentPoly (*factor)(int)) {
  LaurentPoly p = 1;
  for (int j = lo; j <= hi; ++j)
    p *= factor(j);
  return p;
}

LaurentPoly one_minus_odd(int j) { return kOne - t_pow(2 * j + 1); }
LaurentPoly one_plus_even(int j) { return kOne + t_pow(2 * j); }
LaurentPoly one_plus_odd(int j) { return kOne + t_pow(2 * j - 1); }

void check_identity_index(PowerSumIdentity which, int m, int n) {
  int min_m = which == PowerSumIdentity::p ? 0 : 1;
  if (n < 1 || m < min_m)
    throw BadIndex("identity " + std::string(identity_name(which)) +
                   " needs m >= " + std::to_string(min_m) +
                   " and n >= 1, got m=" + std::to_string(m) +
                   " n=" + std::to_string(n));
}

std::pair<LaurentPoly, LaurentPoly> cleared_p(int m, int n) {
  LaurentPoly lhs = s_sum(2 * m + 1, n) * q_fact(m + 1, 2) * q_int(2, 2);
  LaurentPoly rhs;
  for (int k = 0; k <= m; ++k)
    rhs += signed_shift(n, m - k) * q_fact(k, 2) *
           stretch(coefficient_extended(Family::P, m, m - k), 2) *
           pow(xn_num(n), static_cast<unsigned>(k + 1));
  return {lhs, rhs};
}

std::pair<LaurentPoly, LaurentPoly> cleared_qmn(int m, int n) {
  LaurentPoly lhs =
      s_sum(2 * m, n) * q_int(2, 2) * product_range(0, m, one_minus_odd);
  const LaurentPoly one_minus_t = kOne - t_pow(1);
  LaurentPoly sum;
  for (int k = 0; k <= m; ++k)
    sum += signed_shift(n, m - k) *
           pow(one_minus_t, static_cast<unsigned>(m - k)) *
           coefficient_extended(Family::Q, m, m - k) *
           product_range(0, k - 1, one_minus_odd) *
           pow(xn_num(n), static_cast<unsigned>(k));
  return {lhs, (kOne - t_pow(2 * n + 1)) * sum};
}

std::pair<LaurentPoly, LaurentPoly> cleared_t2mnq(int m, int n) {
  LaurentPoly lhs = t_sum(2 * m, n) * product_range(1, m, one_plus_even);
  LaurentPoly rhs;
  for (int k = 1; k <= m; ++k)
    rhs += signed_shift(n, m - k) *
           stretch(coefficient_extended(Family::G, m, m - k), 2) *
           product_range(1, k - 1, one_plus_even) *
           pow(xn_num(n), static_cast<unsigned>(k));
  return {lhs, rhs};
}

std::pair<LaurentPoly, LaurentPoly> cleared_t2m1(int m, int n) {
  const LaurentPoly one_plus_t = kOne + t_pow(1);
  LaurentPoly lhs = t_sum(2 * m - 1, n) *
                    pow(one_plus_t, static_cast<unsigned>(m)) *
                    product_range(1, m, one_plus_odd);
  LaurentPoly boundary =
      coefficient_extended(Family::H, m, m - 1).shifted((2 * m - 1) * n);
  if ((m + n) % 2)
    boundary = -boundary;
  LaurentPoly sum;
  for (int k = 1; k <= m; ++k)
    sum += signed_shift(n, m - k) * coefficient_extended(Family::H, m, m - k) *
           pow(xn_num(n), static_cast<unsigned>(k - 1)) *
           pow(one_plus_t, static_cast<unsigned>(k - 1)) *
           product_range(1, k - 1, one_plus_odd);
  return {lhs, boundary + q_int(2 * n + 1, 1) * sum};
}

} // namespace

std::string_view identity_name(PowerSumIdentity which) {
  switch (which) {
  case PowerSumIdentity::p:
    return "p";
  case PowerSumIdentity::qmn:
    return "qmn";
  case PowerSumIdentity::t2mnq:
    return "t2mnq";
  case PowerSumIdentity::t2m1:
    return "t2m1";
  }
  return "?";
}

std::string_view identity_name(XIdentity which) {
  switch (which) {
  case XIdentity::diff1:
    return "diff1";
  case XIdentity::inverseq:
    return "inverseq";
  case XIdentity::diff:
    return "diff";
  case XIdentity::sumd:
    return "sumd";
  }
  return "?";
}

std::optional<PowerSumIdentity> parse_power_sum_identity(std::string_view name) {
  for (auto w : {PowerSumIdentity::p, PowerSumIdentity::qmn,
                 PowerSumIdentity::t2mnq, PowerSumIdentity::t2m1})
    if (identity_name(w) == name)
      return w;
  return std::nullopt;
}

std::optional<XIdentity> parse_x_identity(std::string_view name) {
  for (auto w : {XIdentity::diff1, XIdentity::inverseq, XIdentity::diff,
                 XIdentity::sumd})
    if (identity_name(w) == name)
      return w;
  return std::nullopt;
}

std::pair<LaurentPoly, LaurentPoly> cleared_sides(PowerSumIdentity which,
                                                  int m, int n) {
  check_identity_index(which, m, n);
  switch (which) {
  case PowerSumIdentity::p:
    return cleared_p(m, n);
  case PowerSumIdentity::qmn:
    return cleared_qmn(m, n);
  case PowerSumIdentity::t2mnq:
    return cleared_t2mnq(m, n);
  case PowerSumIdentity::t2m1:
    return cleared_t2m1(m, n);
  }
  return {};
}

bool verify_theorem1(PowerSumIdentity which, int m, int n) {
  auto [lhs, rhs] = cleared_sides(which, m, n);
  return lhs.is_polynomial() && rhs.is_polynomial() && lhs == rhs;
}

std::pair<LaurentPoly, LaurentPoly> x_identity_sides(XIdentity which, int m,
                                                     int l) {
  if (m < 1 || l < 1)
    throw BadIndex("X identities need m, l >= 1, got m=" + std::to_string(m) +
                   " l=" + std::to_string(l));
  auto um = static_cast<unsigned>(m);
  const LaurentPoly ql = q_int(l, 2);
  LaurentPoly lhs, rhs;
  switch (which) {
  case XIdentity::diff1:
    lhs = x_poly(l, um + 1) - x_poly(l - 1, um + 1);
    for (int k = 0; 2 * k <= m; ++k)
      rhs += h_pair(m - 2 * k, k + 1, 2) * q_int(2 * l, 2) *
             pow(ql, static_cast<unsigned>(2 * (m - k)))
                 .shifted(-2 * l * (m - k + 1));
    break;
  case XIdentity::inverseq:
    lhs = a_poly(l) * x_poly(l, um) - a_poly(l - 1) * x_poly(l - 1, um);
    for (int k = 0; 2 * k <= m; ++k)
      rhs += c_poly(m, m - k) * q_int(2 * l, 2) *
             pow(ql, static_cast<unsigned>(2 * (m - k) - 1))
                 .shifted(-l * (2 * m - 2 * k + 1));
    break;
  case XIdentity::diff:
    lhs = x_poly(l, um) + x_poly(l - 1, um);
    for (int k = 0; k < m; ++k)
      rhs += stretch(g_poly(m, m - k), 2) *
             pow(ql, static_cast<unsigned>(2 * (m - k)))
                 .shifted(-2 * l * (m - k));
    break;
  case XIdentity::sumd:
    lhs = a_poly(l) * x_poly(l, um - 1) + a_poly(l - 1) * x_poly(l - 1, um - 1);
    for (int k = 0; k < m; ++k)
      rhs += d_poly(m, m - k) *
             pow(ql, static_cast<unsigned>(2 * (m - k) - 1))
                 .shifted(-l * (2 * m - 2 * k - 1));
    break;
  }
  return {lhs, rhs};
}

bool verify_lemma2(XIdentity which, int m, int l) {
  auto [lhs, rhs] = x_identity_sides(which, m, l);
  return lhs == rhs;
}

bool verify_lemma1(int a, int b, const BigRational &q0, int l, int order) {
  bool valid = (a == 1 && b == 1) || (a == 1 && b == 0) || (a == 0 && b == 1);
  if (!valid)
    throw std::invalid_argument("(a, b) must be (1,1), (1,0) or (0,1)");
  if (l < 1 || order < 0)
    throw std::invalid_argument("need l >= 1 and order >= 0");
  if (q0 == 0 || q0 == 1)
    throw SingularSample("q0 must avoid 0 and 1");

  BigRational L = eval(q_int(l), q0);
  BigRational L1 = eval(q_int(l + 1), q0);
  BigRational Lm = eval(q_int(l - 1), q0);
  BigRational L2 = eval(q_int(2 * l), q0);
  if (L == 0 || L2 == 0)
    throw SingularSample("[l] or [2l] vanishes at the sample point");
  BigRational ql = eval(LaurentPoly::monomial(1, l), q0);
  BigRational x = ql / (L * L);

  std::vector<BigRational> lhs, rhs;
  for (int M = 0; M <= order; ++M) {
    BigRational s = 0;
    BigRational xk = 1;
    for (int k = 0; 2 * k <= M; ++k) {
      s += eval(h_spec(M - 2 * k, k + a, k + b), q0) * xk;
      xk *= x;
    }
    lhs.push_back(s);

    // Geometric series 1 / ([l] - r z) = (1/[l]) sum_M (r/[l])^M z^M.
    BigRational ga = 1 / L, gb = 1 / L;
    for (int i = 0; i < M; ++i) {
      ga *= L1 / L;
      gb *= q0 * Lm / L;
    }
    BigRational pre = L * L / L2;
    BigRational r;
    if (a == 1 && b == 1)
      r = pre * (L1 * ga - q0 * Lm * gb);
    else if (a == 1)
      r = pre * (ga + ql * gb);
    else
      r = pre * (ql * ga + gb);
    r.canonicalize();
    rhs.push_back(r);
  }
  for (auto &v : lhs)
    v.canonicalize();
  return lhs == rhs;
}

BigRational faulhaber_f(int m, int k) {
  BigInt kf, mf;
  mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(m + 1));
  BigRational v = eval(coefficient_extended(Family::P, m, m - k), 1) *
                  make_rational(kf, mf);
  return (m - k) % 2 ? BigRational(-v) : v;
}

BigRational salie_s(int m, int k) {
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m - k));
  BigRational v =
      eval(coefficient_extended(Family::G, m, m - k), 1) / BigRational(two_pow);
  v.canonicalize();
  return (m - k) % 2 ? BigRational(-v) : v;
}

bool classical_check(int max_m, int max_n) {
  for (int m = 1; m <= max_m; ++m) {
    std::vector<BigRational> f, s;
    for (int k = 1; k <= m; ++k) {
      f.push_back(faulhaber_f(m, k));
      s.push_back(salie_s(m, k));
    }
    for (int n = 1; n <= max_n; ++n) {
      BigRational nn = BigRational(n) * (n + 1);
      BigRational odd = 0, even = 0, pw = 1;
      for (int k = 1; k <= m; ++k) {
        pw *= nn;
        even += s[static_cast<std::size_t>(k - 1)] * pw;
        odd += f[static_cast<std::size_t>(k - 1)] * pw * nn;
      }
      odd /= 2;
      even /= 2;
      odd.canonicalize();
      even.canonicalize();
      if (odd != BigRational(int_power_sum(2 * m + 1, n)) ||
          even != BigRational(int_alternating_sum(2 * m, n)))
        return false;
    }
  }
  return true;
}

} // namespace qfaul
