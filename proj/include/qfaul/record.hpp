#pragma once

#include "qfaul/routes.hpp"

#include <string>
#include <vector>

namespace qfaul {

/// One computed coefficient, ready for output.
struct CoeffRecord {
  Family family = Family::P;
  int m = 0;
  int k = 0;
  Route route = Route::det;
  LaurentPoly value;

  friend bool operator==(const CoeffRecord &, const CoeffRecord &) = default;
};

/// {"family","m","k","variable":"q","route","min_exp","coefficients"} with
/// coefficients as ascending decimal strings. One line, no trailing newline.
std::string to_json(const CoeffRecord &r);
/// A JSON array of records, one per line.
std::string to_json(const std::vector<CoeffRecord> &rs);
/// Inverse of to_json for a single record. Throws std::invalid_argument on
/// malformed input.
CoeffRecord record_from_json(const std::string &text);

/// "family,m,k,exp,coefficient" rows (header first), one row per nonzero
/// coefficient.
std::string csv_header();
std::string to_csv_rows(const CoeffRecord &r);

/// "G(4,2) = 10 + 24q + 24q^2 + 10q^3".
std::string to_pretty(const CoeffRecord &r);

} // namespace qfaul
