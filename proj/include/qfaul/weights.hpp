#pragma once

#include "qfaul/coefficients.hpp"
#include "qfaul/lattice.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qfaul {

/// Step-count statistics of a family in a configuration.
struct PathStats {
  /// sigma[x] = number of vertical steps in column x.
  std::map<int, int> sigma;
  /// f_start[i] = 1 iff path i leaves u_i with a vertical step.
  std::vector<int> f_start;
  /// f_end[i] = 1 iff path i reaches v_i with a vertical step.
  std::vector<int> f_end;

  int sigma_at(int x) const;
  int f() const;
  int f_bar() const;
};

PathStats path_stats(const PathFamily &family, const Configuration &config);

// Step-level schemes. Subset schemes take I as a bitmask over {0, ..., k-1}.

/// q on vertical steps in even columns (odd columns with `odd_columns`).
StepWeight scheme_P(bool odd_columns = false);
/// q^2 in even columns, q^2 + q for a vertical step leaving a start point.
StepWeight scheme_Q(const Configuration &config);
/// Mirror scheme: q^2 in odd columns, 1 + q for a vertical step leaving a
/// start point.
StepWeight scheme_Q_mirror(const Configuration &config);
/// w_I: q in column 2i-1 for i in I, q in column 2i for every integer i not
/// in I.
StepWeight scheme_G_subset(std::uint32_t subset, int k);
/// w_I with q -> q^2, plus q on a vertical step leaving a start point.
StepWeight scheme_H_subset(std::uint32_t subset, int k,
                           const Configuration &config);
/// Alternative w_I: q in column 2i+3 for i in I, q in column 2i+2 for every
/// integer i not in I.
StepWeight scheme_G_alt_subset(std::uint32_t subset, int k);
/// Alternative w_I for H: q^2 in place of q, plus q on a vertical step
/// ending at an end point.
StepWeight scheme_H_alt_subset(std::uint32_t subset, int k,
                               const Configuration &config);

// Per-family weights.

LaurentPoly weight_P(const PathFamily &family);
LaurentPoly weight_Q(const PathFamily &family, const Configuration &config);

/// q^sigma_{2k} * prod_{i<k} (q^sigma_{2i-1} + q^sigma_{2i}).
LaurentPoly weight_G(const PathFamily &family, const Configuration &config);
/// Sum over all subsets I of w_I(family), step by step.
LaurentPoly weight_G_subsets(const PathFamily &family,
                             const Configuration &config);

/// (1+q)^f q^(2 sigma_{2k}) prod_{i<k} (q^(2 sigma_{2i-1}) + q^(2 sigma_{2i} - f_i)).
LaurentPoly weight_H(const PathFamily &family, const Configuration &config);
LaurentPoly weight_H_subsets(const PathFamily &family,
                             const Configuration &config);

enum class AltScheme { G_alt, H_alt };

/// Product forms of the alternative weights:
///   G_alt: q^sigma_0 prod_{i<k} (q^sigma_{2i+2} + q^sigma_{2i+3})
///   H_alt: (1+q)^fbar q^(2 sigma_0)
///          prod_{i<k} (q^(2 sigma_{2i+2} - fbar_i) + q^(2 sigma_{2i+3}))
LaurentPoly weight_alt(const PathFamily &family, const Configuration &config,
                       AltScheme scheme);
LaurentPoly weight_alt_subsets(const PathFamily &family,
                               const Configuration &config, AltScheme scheme);

/// The u/v configuration a family's coefficients live on.
Configuration family_config(Family f, int m, int k);

/// Per-family weight used by the brute-force route (product forms for G, H).
LaurentPoly family_weight(Family f, const PathFamily &family,
                          const Configuration &config);

/// Brute force: enumerate non-intersecting families and add their weights.
LaurentPoly coefficient_lgv_brute(Family f, int m, int k);

/// Determinant route: one LGV determinant for P and Q; for G and H the sum
/// over subsets I of the LGV determinant under w_I.
LaurentPoly coefficient_lgv_det(Family f, int m, int k);

} // namespace qfaul
