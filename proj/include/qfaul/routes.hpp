#pragma once

#include "qfaul/coefficients.hpp"

#include <optional>
#include <string_view>

namespace qfaul {

/// Independent ways of computing a coefficient polynomial.
///   det        determinant of the coefficient matrix
///   invert     rational inversion of the forward matrix plus interpolation
///   lgv_brute  enumeration of non-intersecting path families
///   lgv_det    LGV determinants of single-path weight sums
enum class Route { det, invert, lgv_brute, lgv_det };

inline constexpr std::array<Route, 4> kAllRoutes = {
    Route::det, Route::invert, Route::lgv_brute, Route::lgv_det};

/// CLI spellings: det, invert, lgv, lgv-det.
std::string_view route_name(Route r);
std::optional<Route> parse_route(std::string_view name);

/// The (m, k) coefficient by the chosen route. Throws BadIndex unless k == 0
/// or 1 <= k < m.
LaurentPoly compute(Family f, int m, int k, Route route);

} // namespace qfaul
