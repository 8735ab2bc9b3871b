#include "qfaul/poly_matrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace qfaul {

namespace {

// Rows are consumed in order, so a minor is determined by its column set.
class MinorCache {
public:
  explicit MinorCache(const PolyMatrix &m) : m_(m) {}

  LaurentPoly det(std::uint32_t cols) {
    if (cols == 0)
      return 1;
    if (auto it = cache_.find(cols); it != cache_.end())
      return it->second;
    std::size_t n = m_.dim();
    std::size_t row = n - static_cast<std::size_t>(std::popcount(cols));
    LaurentPoly total;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      if (!(cols & bit))
        continue;
      const LaurentPoly &entry = m_(row, j);
      if (!entry.is_zero()) {
        LaurentPoly term = entry * det(cols & ~bit);
        if (sign > 0)
          total += term;
        else
          total -= term;
      }
      sign = -sign;
    }
    cache_.emplace(cols, total);
    return total;
  }

private:
  const PolyMatrix &m_;
  std::unordered_map<std::uint32_t, LaurentPoly> cache_;
};

} // namespace

LaurentPoly det(const PolyMatrix &m) {
  if (m.dim() > 24)
    throw std::invalid_argument("det: dimension too large for expansion");
  MinorCache cache(m);
  return cache.det((std::uint32_t{1} << m.dim()) - 1);
}

LaurentPoly detsum_expansion(const PolyMatrix &a, const PolyMatrix &b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("detsum_expansion: matrices differ in size");
  std::size_t n = a.dim();
  LaurentPoly total;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    PolyMatrix d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d(i, j) = (subset >> j) & 1u ? a(i, j) : b(i, j);
    total += det(d);
  }
  return total;
}

LaurentPoly detsum_expansion_rows(const PolyMatrix &a, const PolyMatrix &b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("detsum_expansion_rows: matrices differ in size");
  std::size_t n = a.dim();
  LaurentPoly total;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    PolyMatrix d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d(i, j) = (subset >> i) & 1u ? a(i, j) : b(i, j);
    total += det(d);
  }
  return total;
}

} // namespace qfaul
