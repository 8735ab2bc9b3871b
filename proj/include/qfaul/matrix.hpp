#pragma once

#include "qfaul/errors.hpp"

#include <cstddef>
#include <vector>

namespace qfaul {

/// Dense square matrix, row-major.
template <class T> class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim, const T &fill = T())
      : dim_(dim), entries_(dim * dim, fill) {}

  std::size_t dim() const { return dim_; }
  T &operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim, T(0));
    for (std::size_t i = 0; i < dim; ++i)
      m(i, i) = T(1);
    return m;
  }

  friend bool operator==(const SquareMatrix &, const SquareMatrix &) = default;

private:
  std::size_t dim_ = 0;
  std::vector<T> entries_;
};

template <class T>
SquareMatrix<T> operator*(const SquareMatrix<T> &a, const SquareMatrix<T> &b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("matrix product of different sizes");
  SquareMatrix<T> c(a.dim(), T(0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t l = 0; l < a.dim(); ++l)
      for (std::size_t j = 0; j < a.dim(); ++j)
        c(i, j) += a(i, l) * b(l, j);
  return c;
}

template <class T>
SquareMatrix<T> operator+(const SquareMatrix<T> &a, const SquareMatrix<T> &b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("matrix sum of different sizes");
  SquareMatrix<T> c = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      c(i, j) += b(i, j);
  return c;
}

} // namespace qfaul
