#pragma once

#include "qfaul/laurent_poly.hpp"
#include "qfaul/matrix.hpp"
#include "qfaul/poly_matrix.hpp"

#include <span>
#include <vector>

namespace qfaul {

using RationalMatrix = SquareMatrix<BigRational>;

RationalMatrix evaluate(const PolyMatrix &m, const BigRational &x);

/// Inverse of a lower-triangular matrix by forward substitution. Throws
/// SingularSample when a diagonal entry is zero.
RationalMatrix invert_lower_triangular(const RationalMatrix &a);

/// Determinant by fraction-exact Gaussian elimination.
BigRational det(const RationalMatrix &m);

/// Coefficients (ascending) of the unique polynomial of degree < points.size()
/// through (points[i], values[i]). Points must be distinct.
std::vector<BigRational> interpolate(std::span<const BigRational> points,
                                     std::span<const BigRational> values);

} // namespace qfaul
