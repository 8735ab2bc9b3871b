#pragma once

#include "qfaul/laurent_poly.hpp"
#include "qfaul/poly_matrix.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace qfaul {

/// q-Faulhaber (P, Q) and q-Salie (G, H) coefficient families.
enum class Family { P, Q, G, H };

inline constexpr std::array<Family, 4> kAllFamilies = {Family::P, Family::Q,
                                                       Family::G, Family::H};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Throws BadIndex unless k == 0 (any m >= 0) or 1 <= k < m.
void check_index(Family f, int m, int k);

/// The k x k matrix whose determinant is the (m, k) coefficient. Entry (i, j),
/// 0 <= i, j < k, is
///   P: h_{m-k-i+2j-1}({1,q}^{i-j+2})     Q: c(m-k+i+1, m-k+j)
///   G: g(m-k+i+1, m-k+j)                 H: d(m-k+i+1, m-k+j)
PolyMatrix coefficient_matrix(Family f, int m, int k);

// Determinant route. Polynomials in q.
LaurentPoly faulhaber_P(int m, int k);
LaurentPoly faulhaber_Q(int m, int k);
LaurentPoly salie_G(int m, int k);
LaurentPoly salie_H(int m, int k);
LaurentPoly coefficient_det(Family f, int m, int k);

/// Determinant formula on 0 <= k <= m without the table-range check. At k = m
/// (m >= 1) the first column vanishes and the value is 0; the power-sum
/// identities need those boundary terms.
LaurentPoly coefficient_extended(Family f, int m, int k);

} // namespace qfaul
