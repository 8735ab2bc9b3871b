#pragma once

#include "qfaul/laurent_poly.hpp"

namespace qfaul {

/// True iff the coefficient sequence reads the same reversed. The zero
/// polynomial is palindromic.
bool is_palindromic(const LaurentPoly &p);

struct ShapeReport {
  bool unimodal = true;
  bool log_concave = true;
};

/// Unimodality and log-concavity of the coefficient sequence between the
/// lowest and highest exponent, internal zeros included. Throws
/// NegativeCoefficient when any coefficient is negative.
ShapeReport shape_report(const LaurentPoly &p);

} // namespace qfaul
