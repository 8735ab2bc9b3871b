#include "qfaul/coefficients.hpp"

#include "qfaul/errors.hpp"
#include "qfaul/homog.hpp"

#include <string>

namespace qfaul {

std::string_view family_name(Family f) {
  switch (f) {
  case Family::P:
    return "P";
  case Family::Q:
    return "Q";
  case Family::G:
    return "G";
  case Family::H:
    return "H";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name)
      return f;
  return std::nullopt;
}

void check_index(Family f, int m, int k) {
  if (m < 0 || k < 0 || (k > 0 && k >= m))
    throw BadIndex(std::string(family_name(f)) + "(" + std::to_string(m) +
                   "," + std::to_string(k) +
                   ") is outside 0 <= k < m (or k = 0)");
}

PolyMatrix coefficient_matrix(Family f, int m, int k) {
  if (k < 0)
    throw BadIndex("negative matrix order");
  auto n = static_cast<std::size_t>(k);
  PolyMatrix mat(n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      auto &e = mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      switch (f) {
      case Family::P:
        e = h_pair(m - k - i + 2 * j - 1, i - j + 2);
        break;
      case Family::Q:
        e = c_poly(m - k + i + 1, m - k + j);
        break;
      case Family::G:
        e = g_poly(m - k + i + 1, m - k + j);
        break;
      case Family::H:
        e = d_poly(m - k + i + 1, m - k + j);
        break;
      }
    }
  }
  return mat;
}

LaurentPoly coefficient_extended(Family f, int m, int k) {
  if (m < 0 || k < 0 || k > m)
    throw BadIndex("coefficient_extended needs 0 <= k <= m");
  return det(coefficient_matrix(f, m, k));
}

LaurentPoly coefficient_det(Family f, int m, int k) {
  check_index(f, m, k);
  return det(coefficient_matrix(f, m, k));
}

LaurentPoly faulhaber_P(int m, int k) { return coefficient_det(Family::P, m, k); }
LaurentPoly faulhaber_Q(int m, int k) { return coefficient_det(Family::Q, m, k); }
LaurentPoly salie_G(int m, int k) { return coefficient_det(Family::G, m, k); }
LaurentPoly salie_H(int m, int k) { return coefficient_det(Family::H, m, k); }

} // namespace qfaul
