#include "qfaul/routes.hpp"

#include "qfaul/inverse.hpp"
#include "qfaul/weights.hpp"

namespace qfaul {

std::string_view route_name(Route r) {
  switch (r) {
  case Route::det:
    return "det";
  case Route::invert:
    return "invert";
  case Route::lgv_brute:
    return "lgv";
  case Route::lgv_det:
    return "lgv-det";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view name) {
  for (Route r : kAllRoutes)
    if (route_name(r) == name)
      return r;
  return std::nullopt;
}

LaurentPoly compute(Family f, int m, int k, Route route) {
  check_index(f, m, k);
  switch (route) {
  case Route::det:
    return coefficient_det(f, m, k);
  case Route::invert:
    return coefficient_invert(f, m, k);
  case Route::lgv_brute:
    return coefficient_lgv_brute(f, m, k);
  case Route::lgv_det:
    return coefficient_lgv_det(f, m, k);
  }
  return {};
}

} // namespace qfaul
