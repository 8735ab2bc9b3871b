#include "qfaul/rational_matrix.hpp"

#include "qfaul/errors.hpp"

#include <stdexcept>
#include <utility>

namespace qfaul {

RationalMatrix evaluate(const PolyMatrix &m, const BigRational &x) {
  RationalMatrix r(m.dim(), BigRational(0));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      r(i, j) = eval(m(i, j), x);
  return r;
}

RationalMatrix invert_lower_triangular(const RationalMatrix &a) {
  std::size_t n = a.dim();
  RationalMatrix b(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) == 0)
      throw SingularSample("zero diagonal entry in triangular inverse");
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != 0)
        throw std::invalid_argument("matrix is not lower triangular");
  }
  for (std::size_t j = 0; j < n; ++j) {
    b(j, j) = 1 / a(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      BigRational acc = 0;
      for (std::size_t l = j; l < i; ++l)
        acc += a(i, l) * b(l, j);
      b(i, j) = -acc / a(i, i);
    }
  }
  return b;
}

BigRational det(const RationalMatrix &m) {
  RationalMatrix a = m;
  std::size_t n = a.dim();
  BigRational result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0)
      ++pivot;
    if (pivot == n)
      return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(pivot, j), a(col, j));
      result = -result;
    }
    result *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0)
        continue;
      BigRational factor = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j)
        a(i, j) -= factor * a(col, j);
    }
  }
  return result;
}

std::vector<BigRational> interpolate(std::span<const BigRational> points,
                                     std::span<const BigRational> values) {
  if (points.size() != values.size())
    throw DimensionMismatch("interpolate: points and values differ in length");
  std::size_t n = points.size();
  // Newton divided differences, then expand the Newton basis.
  std::vector<BigRational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      BigRational gap = points[i] - points[i - level];
      if (gap == 0)
        throw std::invalid_argument("interpolate: repeated point");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  std::vector<BigRational> coeffs(n, BigRational(0));
  for (std::size_t i = n; i-- > 0;) {
    // coeffs <- coeffs * (x - points[i]) + dd[i]
    for (std::size_t j = n - 1; j > 0; --j)
      coeffs[j] = coeffs[j - 1] - points[i] * coeffs[j];
    coeffs[0] = dd[i] - points[i] * coeffs[0];
  }
  return coeffs;
}

} // namespace qfaul
