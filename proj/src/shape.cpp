#include "qfaul/shape.hpp"

#include "qfaul/errors.hpp"

#include <algorithm>

namespace qfaul {

bool is_palindromic(const LaurentPoly &p) {
  auto c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2),
                    c.rbegin());
}

ShapeReport shape_report(const LaurentPoly &p) {
  auto c = p.coeffs();
  if (std::any_of(c.begin(), c.end(), [](const BigInt &v) { return v < 0; }))
    throw NegativeCoefficient("shape_report needs nonnegative coefficients");
  ShapeReport r;
  bool falling = false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] > c[i - 1]) {
      if (falling)
        r.unimodal = false;
    } else if (c[i] < c[i - 1]) {
      falling = true;
    }
  }
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1])
      r.log_concave = false;
  return r;
}

} // namespace qfaul
