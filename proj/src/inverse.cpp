#include "qfaul/inverse.hpp"

#include "qfaul/errors.hpp"
#include "qfaul/homog.hpp"
#include "qfaul/qnumbers.hpp"
#include "qfaul/rational_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qfaul {

namespace {

int degree(const LaurentPoly &p) { return p.is_zero() ? 0 : p.max_exp(); }

LaurentPoly sign_poly(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

BigRational eval_nonzero(const LaurentPoly &p, const BigRational &x,
                         const char *what) {
  BigRational v = eval(p, x);
  if (v == 0)
    throw SingularSample(std::string(what) + " vanishes at " + x.get_str());
  return v;
}

std::size_t to_index(int i) { return static_cast<std::size_t>(i); }

} // namespace

int index_base(Family f) { return f == Family::P ? 0 : 1; }

LaurentPoly forward_entry(Family f, int k, int m) {
  switch (f) {
  case Family::P:
    return h_pair(2 * m - k, k - m + 1);
  case Family::Q:
    return c_poly(k, m);
  case Family::G:
    return g_poly(k, m);
  case Family::H:
    return d_poly(k, m);
  }
  return {};
}

PolyMatrix build_forward_matrix(Family f, int n) {
  if (n < 1)
    throw std::invalid_argument("build_forward_matrix needs n >= 1");
  int base = index_base(f);
  int dim = n - base + 1;
  PolyMatrix a(to_index(dim));
  for (int k = base; k <= n; ++k)
    for (int m = base; m <= n; ++m)
      a(to_index(k - base), to_index(m - base)) = forward_entry(f, k, m);
  return a;
}

InverseEntry claimed_inverse_entry(Family f, int k, int m) {
  if (m > k)
    return {0, 1};
  int span = k - m;
  LaurentPoly num = sign_poly(span) * coefficient_extended(f, k, span);
  LaurentPoly den = 1;
  const LaurentPoly one = 1;
  auto q_pow = [](int e) { return LaurentPoly::monomial(1, e); };
  switch (f) {
  case Family::P:
    num *= q_fact(m);
    den = q_fact(k + 1);
    break;
  case Family::Q:
    num *= pow(one - q_pow(1), static_cast<unsigned>(span + 1));
    for (int i = 0; i <= span; ++i)
      den *= one - q_pow(2 * k - 2 * i + 1);
    break;
  case Family::G:
    for (int i = 0; i <= span; ++i)
      den *= one + q_pow(k - i);
    break;
  case Family::H:
    den = pow(one + q_pow(1), static_cast<unsigned>(span + 1));
    for (int i = 0; i <= span; ++i)
      den *= one + q_pow(2 * k - 2 * i - 1);
    break;
  }
  return {std::move(num), std::move(den)};
}

std::vector<BigRational> default_sample_points(std::size_t count) {
  std::vector<BigRational> pts = {BigRational(2), BigRational(3),
                                  make_rational(5, 2), make_rational(7, 3)};
  auto seen = [&](const BigRational &x) {
    return std::find(pts.begin(), pts.end(), x) != pts.end();
  };
  for (long h = 2; pts.size() < count; ++h)
    for (long a = 1; a < h && pts.size() < count; ++a) {
      if (std::gcd(a, h) != 1)
        continue;
      for (const BigRational &x : {make_rational(h, a), make_rational(a, h)})
        if (!seen(x) && pts.size() < count)
          pts.push_back(x);
    }
  pts.resize(count);
  return pts;
}

std::size_t inverse_pair_points_needed(Family f, int n) {
  int base = index_base(f);
  int bound = 0;
  for (int j = base; j <= n; ++j) {
    std::vector<int> num_deg, den_deg;
    for (int l = j; l <= n; ++l) {
      auto e = claimed_inverse_entry(f, l, j);
      num_deg.push_back(degree(e.numerator));
      den_deg.push_back(degree(e.denominator));
    }
    for (int i = j; i <= n; ++i) {
      // Column j, row i cleared by prod_{l=j..i} den(l, j).
      int den_total = 0;
      for (int l = j; l <= i; ++l)
        den_total += den_deg[to_index(l - j)];
      int row_bound = i == j ? den_total : 0;
      for (int l = j; l <= i; ++l) {
        int term = degree(forward_entry(f, i, l)) + num_deg[to_index(l - j)] +
                   den_total - den_deg[to_index(l - j)];
        row_bound = std::max(row_bound, term);
      }
      bound = std::max(bound, row_bound);
    }
  }
  return to_index(bound) + 1;
}

bool verify_inverse_pair(Family f, int n,
                         std::span<const BigRational> sample_points) {
  std::size_t needed = inverse_pair_points_needed(f, n);
  if (sample_points.size() < needed)
    throw std::invalid_argument("verify_inverse_pair needs at least " +
                                std::to_string(needed) + " sample points");
  int base = index_base(f);
  PolyMatrix forward = build_forward_matrix(f, n);
  std::size_t dim = forward.dim();
  std::vector<InverseEntry> claimed;
  claimed.reserve(dim * dim);
  for (int k = base; k <= n; ++k)
    for (int m = base; m <= n; ++m)
      claimed.push_back(claimed_inverse_entry(f, k, m));

  auto distinct = std::vector<BigRational>(sample_points.begin(),
                                           sample_points.end());
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
    throw std::invalid_argument("verify_inverse_pair: repeated sample point");

  bool ok = true;
  for (const BigRational &x : sample_points) {
    RationalMatrix a = evaluate(forward, x);
    RationalMatrix b(dim, BigRational(0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const auto &e = claimed[i * dim + j];
        b(i, j) = eval(e.numerator, x) /
                  eval_nonzero(e.denominator, x, "inverse denominator");
      }
    if (a * b != RationalMatrix::identity(dim))
      ok = false;
  }
  return ok;
}

bool verify_inverse_pair(Family f, int n) {
  auto pts = default_sample_points(inverse_pair_points_needed(f, n));
  return verify_inverse_pair(f, n, pts);
}

bool verify_detinv_consistency(Family f, int m, int k,
                               std::span<const BigRational> sample_points) {
  check_index(f, m, k);
  int base = index_base(f);
  int lo = m - k;
  if (lo < base)
    throw BadIndex("detinv: column index below the matrix base");
  PolyMatrix forward = build_forward_matrix(f, std::max(m, 1));
  bool ok = true;
  for (const BigRational &x : sample_points) {
    RationalMatrix a = evaluate(forward, x);
    RationalMatrix inv = invert_lower_triangular(a);
    BigRational entry = inv(to_index(m - base), to_index(lo - base));

    RationalMatrix minor(to_index(k), BigRational(0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        minor(to_index(i), to_index(j)) =
            a(to_index(lo + i + 1 - base), to_index(lo + j - base));
    BigRational diag = 1;
    for (int j = lo; j <= m; ++j)
      diag *= a(to_index(j - base), to_index(j - base));
    BigRational ratio = det(minor) / diag;
    if (k % 2 == 1)
      ratio = -ratio;
    if (entry != ratio)
      ok = false;
  }
  return ok;
}

bool verify_detinv_consistency(Family f, int m, int k) {
  auto pts = default_sample_points(3);
  return verify_detinv_consistency(f, m, k, pts);
}

int coefficient_degree_bound(Family f, int m, int k) {
  check_index(f, m, k);
  PolyMatrix minor = coefficient_matrix(f, m, k);
  int bound = 0;
  for (std::size_t i = 0; i < minor.dim(); ++i) {
    int row = 0;
    for (std::size_t j = 0; j < minor.dim(); ++j)
      row = std::max(row, degree(minor(i, j)));
    bound += row;
  }
  return bound;
}

LaurentPoly coefficient_invert(Family f, int m, int k) {
  check_index(f, m, k);
  if (k == 0)
    return 1;
  int base = index_base(f);
  int lo = m - k;
  auto pts = default_sample_points(to_index(coefficient_degree_bound(f, m, k)) + 1);
  PolyMatrix forward = build_forward_matrix(f, m);
  std::vector<BigRational> values;
  values.reserve(pts.size());
  for (const BigRational &x : pts) {
    RationalMatrix a = evaluate(forward, x);
    RationalMatrix inv = invert_lower_triangular(a);
    BigRational v = inv(to_index(m - base), to_index(lo - base));
    for (int j = lo; j <= m; ++j)
      v *= a(to_index(j - base), to_index(j - base));
    if (k % 2 == 1)
      v = -v;
    values.push_back(v);
  }
  auto coeffs = interpolate(pts, values);
  std::vector<BigInt> ints;
  ints.reserve(coeffs.size());
  for (auto &c : coeffs) {
    c.canonicalize();
    if (c.get_den() != 1)
      throw std::logic_error("inverse route produced a non-integral coefficient");
    ints.push_back(c.get_num());
  }
  return LaurentPoly(0, std::move(ints));
}

BigRational dstr_boundary_sum(int m, const BigRational &t0) {
  if (m < 2)
    throw BadIndex("dstr boundary sum needs m >= 2");
  BigRational total = 0;
  for (int j = 1; j <= m; ++j) { // j = m - k
    BigRational term = eval(d_poly(m, j), t0) * eval(salie_H(j, j - 1), t0);
    BigRational den = 1;
    for (int r = 0; r < j; ++r)
      den *= 1 + t0;
    for (int i = 0; i < j; ++i)
      den *= eval(LaurentPoly(1) + LaurentPoly::monomial(1, 2 * (j - i) - 1), t0);
    if (den == 0)
      throw SingularSample("dstr denominator vanishes at " + t0.get_str());
    term /= den;
    if (j % 2 == 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

bool verify_dstr_vanishing(int m, const BigRational &t0) {
  return dstr_boundary_sum(m, t0) == 0;
}

} // namespace qfaul
