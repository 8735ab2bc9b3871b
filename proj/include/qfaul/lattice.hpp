#pragma once

#include "qfaul/laurent_poly.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qfaul {

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const LatticePoint &, const LatticePoint &) = default;
};

/// Monotone lattice path stored as a start point and a string of unit steps,
/// 'E' = (1,0) and 'N' = (0,1).
struct LatticePath {
  LatticePoint start;
  std::string steps;

  std::vector<LatticePoint> points() const;
  LatticePoint end() const;
};

/// One path per start/end pair, path i running from starts[i] to ends[i].
struct PathFamily {
  std::vector<LatticePath> paths;

  /// Step strings, one path per line ("NEE\nNNEE\n").
  std::string dump() const;
};

struct Configuration {
  std::vector<LatticePoint> starts;
  std::vector<LatticePoint> ends;

  std::size_t size() const { return starts.size(); }
};

/// u_i = (2i, -2i), v_i = (2i+3, m-k-i-1), 0 <= i < k. Empty for k = 0;
/// BadIndex unless 1 <= k < m otherwise.
Configuration pq_config(int m, int k);

/// u_i = (2i, -2i), v_i = (2i+2, m-k-1-i), 0 <= i < k.
Configuration gh_config(int m, int k);

/// A vertical step from `from` to `from + (0,1)`. Horizontal steps always
/// weigh 1.
struct VerticalStep {
  LatticePoint from;
  LatticePoint to() const { return {from.x, from.y + 1}; }
};

using StepWeight = std::function<LaurentPoly(const VerticalStep &)>;

/// Weight of vertical steps by column; columns not present weigh 1.
using ColumnWeights = std::map<int, LaurentPoly>;

StepWeight column_scheme(ColumnWeights weights);

/// Sum over all monotone paths a -> b of the product of column weights,
/// evaluated as h_{b.y-a.y}(x_{a.x}, ..., x_{b.x}). Zero when b is not
/// reachable from a.
LaurentPoly single_path_weight_sum(LatticePoint a, LatticePoint b,
                                   const ColumnWeights &weights);

/// Same sum for an arbitrary vertical-step weight, by dynamic programming
/// over the rectangle between a and b.
LaurentPoly path_weight_sum(LatticePoint a, LatticePoint b,
                            const StepWeight &weight);

/// Every family of pairwise vertex-disjoint paths starts[i] -> ends[i].
/// Families come out in lexicographic order of their step strings ('E' < 'N').
std::vector<PathFamily> enumerate_nonintersecting(const Configuration &config);

/// Product of step weights over all vertical steps of the family.
LaurentPoly family_weight(const PathFamily &family, const StepWeight &weight);

/// det over (i, j) of path_weight_sum(starts[j] -> ends[i]). Equals the
/// weighted count of non-intersecting families when the configuration is
/// nonpermutable (every path u_i -> v_l meets every path u_j -> v_k for
/// i < j, k < l); this is not checked.
LaurentPoly lgv_determinant(const Configuration &config,
                            const StepWeight &weight);
LaurentPoly lgv_determinant(const Configuration &config,
                            const ColumnWeights &weights);

} // namespace qfaul
