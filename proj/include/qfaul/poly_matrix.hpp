#pragma once

#include "qfaul/laurent_poly.hpp"
#include "qfaul/matrix.hpp"

namespace qfaul {

using PolyMatrix = SquareMatrix<LaurentPoly>;

/// Exact determinant by cofactor expansion along rows, memoizing minors by
/// their column subset. The 0x0 determinant is 1. Dimension is limited to 24.
LaurentPoly det(const PolyMatrix &m);

/// det(A + B) computed as the sum over column subsets I of det(D^(I)), where
/// column j of D^(I) is taken from A when j is in I and from B otherwise.
LaurentPoly detsum_expansion(const PolyMatrix &a, const PolyMatrix &b);

/// Same expansion, but rows are chosen from A or B instead of columns.
LaurentPoly detsum_expansion_rows(const PolyMatrix &a, const PolyMatrix &b);

} // namespace qfaul
