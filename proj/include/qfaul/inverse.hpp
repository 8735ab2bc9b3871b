#pragma once

#include "qfaul/coefficients.hpp"
#include "qfaul/laurent_poly.hpp"
#include "qfaul/poly_matrix.hpp"

#include <span>
#include <vector>

namespace qfaul {

/// First row/column index of a family's forward matrix: 0 for P, 1 otherwise.
int index_base(Family f);

/// Entry (k, m) of the forward matrix, in the family's own indexing:
///   P: h_{2m-k}({1,q}^{k-m+1})   Q: c(k,m)   G: g(k,m)   H: d(k,m)
LaurentPoly forward_entry(Family f, int k, int m);

/// Lower-triangular forward matrix with indices base..n (P: dimension n+1,
/// others: dimension n). Row/column 0 of the result is index base.
PolyMatrix build_forward_matrix(Family f, int n);

/// The closed-form inverse entry (k, m), held as numerator / denominator
/// polynomials in q. Entries with m > k are 0/1.
struct InverseEntry {
  LaurentPoly numerator;
  LaurentPoly denominator;
};
InverseEntry claimed_inverse_entry(Family f, int k, int m);

/// Distinct positive rationals other than 1: 2, 3, 5/2, 7/3, 4, ... followed
/// by small-height fractions.
std::vector<BigRational> default_sample_points(std::size_t count);

/// Number of points above which agreement of forward * claimed-inverse with
/// the identity proves the polynomial identity (column-wise denominator
/// clearing, conservative degree bound).
std::size_t inverse_pair_points_needed(Family f, int n);

/// Multiplies the forward matrix by the closed-form inverse at each sample
/// point over the rationals and checks for the identity matrix. Throws
/// SingularSample when a denominator vanishes at a point and
/// std::invalid_argument when fewer than inverse_pair_points_needed points
/// are supplied.
bool verify_inverse_pair(Family f, int n,
                         std::span<const BigRational> sample_points);
bool verify_inverse_pair(Family f, int n);

/// Checks, at each point, that the (m, m-k) entry of the forward matrix's
/// inverse (from rational forward substitution) equals the signed minor ratio
/// (-1)^k det(minor) / (product of the diagonal entries m-k..m).
bool verify_detinv_consistency(Family f, int m, int k,
                               std::span<const BigRational> sample_points);
bool verify_detinv_consistency(Family f, int m, int k);

/// Degree bound for the (m, k) coefficient: sum over the rows of its minor of
/// the largest entry degree.
int coefficient_degree_bound(Family f, int m, int k);

/// Recovers the (m, k) coefficient without any polynomial determinant: invert
/// the forward matrix at degree_bound + 1 rational points, scale the inverse
/// entry by the diagonal product, and interpolate. Throws std::logic_error if
/// the interpolant is not an integer polynomial.
LaurentPoly coefficient_invert(Family f, int m, int k);

/// Evaluates the boundary sum that must vanish in the H inverse-pair
/// argument, at t = t0 (t = q^(1/2)):
///   sum_k (-1)^(m-k) d(m,m-k)(t) H(m-k,m-k-1)(t)
///         / ((1+t)^(m-k) prod_{i<m-k} (1 + t^(2(m-k-i)-1)))
BigRational dstr_boundary_sum(int m, const BigRational &t0);
bool verify_dstr_vanishing(int m, const BigRational &t0);

} // namespace qfaul
