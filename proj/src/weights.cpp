#include "qfaul/weights.hpp"

#include "qfaul/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qfaul {

namespace {

const LaurentPoly kOne = 1;

LaurentPoly q_pow(int e) { return LaurentPoly::monomial(1, e); }

bool in_subset(std::uint32_t subset, int i, int k) {
  return i >= 0 && i < k && ((subset >> i) & 1u);
}

bool is_even(int x) { return x % 2 == 0; }

bool is_start(const Configuration &c, LatticePoint p) {
  return std::find(c.starts.begin(), c.starts.end(), p) != c.starts.end();
}

bool is_end(const Configuration &c, LatticePoint p) {
  return std::find(c.ends.begin(), c.ends.end(), p) != c.ends.end();
}

// Whether column x carries q (or q^2) under w_I, and under the alternative
// placement.
bool g_column_marked(int x, std::uint32_t subset, int k) {
  return is_even(x) ? !in_subset(subset, x / 2, k)
                    : in_subset(subset, (x + 1) / 2, k);
}

bool g_alt_column_marked(int x, std::uint32_t subset, int k) {
  return is_even(x) ? !in_subset(subset, (x - 2) / 2, k)
                    : in_subset(subset, (x - 3) / 2, k);
}

int path_count(const Configuration &c) { return static_cast<int>(c.size()); }

LaurentPoly sum_over_subsets(const PathFamily &family, int k,
                             const std::function<StepWeight(std::uint32_t)> &make) {
  LaurentPoly total;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << k); ++subset)
    total += family_weight(family, make(subset));
  return total;
}

} // namespace

int PathStats::sigma_at(int x) const {
  auto it = sigma.find(x);
  return it == sigma.end() ? 0 : it->second;
}

int PathStats::f() const {
  return std::accumulate(f_start.begin(), f_start.end(), 0);
}

int PathStats::f_bar() const {
  return std::accumulate(f_end.begin(), f_end.end(), 0);
}

PathStats path_stats(const PathFamily &family, const Configuration &config) {
  if (family.paths.size() != config.size())
    throw DimensionMismatch("family and configuration differ in size");
  PathStats st;
  st.f_start.assign(config.size(), 0);
  st.f_end.assign(config.size(), 0);
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    const auto &path = family.paths[i];
    LatticePoint p = path.start;
    for (std::size_t s = 0; s < path.steps.size(); ++s) {
      if (path.steps[s] == 'N') {
        ++st.sigma[p.x];
        if (s == 0 && p == config.starts[i])
          st.f_start[i] = 1;
        if (s + 1 == path.steps.size() &&
            LatticePoint{p.x, p.y + 1} == config.ends[i])
          st.f_end[i] = 1;
        ++p.y;
      } else {
        ++p.x;
      }
    }
  }
  return st;
}

StepWeight scheme_P(bool odd_columns) {
  return [odd_columns](const VerticalStep &s) -> LaurentPoly {
    return is_even(s.from.x) != odd_columns ? q_pow(1) : kOne;
  };
}

StepWeight scheme_Q(const Configuration &config) {
  return [config](const VerticalStep &s) -> LaurentPoly {
    LaurentPoly w = is_even(s.from.x) ? q_pow(2) : kOne;
    if (is_start(config, s.from))
      w += q_pow(1);
    return w;
  };
}

StepWeight scheme_Q_mirror(const Configuration &config) {
  return [config](const VerticalStep &s) -> LaurentPoly {
    if (is_start(config, s.from))
      return kOne + q_pow(1);
    return is_even(s.from.x) ? kOne : q_pow(2);
  };
}

StepWeight scheme_G_subset(std::uint32_t subset, int k) {
  return [subset, k](const VerticalStep &s) -> LaurentPoly {
    return g_column_marked(s.from.x, subset, k) ? q_pow(1) : kOne;
  };
}

StepWeight scheme_H_subset(std::uint32_t subset, int k,
                           const Configuration &config) {
  return [subset, k, config](const VerticalStep &s) -> LaurentPoly {
    LaurentPoly w = g_column_marked(s.from.x, subset, k) ? q_pow(2) : kOne;
    if (is_start(config, s.from))
      w += q_pow(1);
    return w;
  };
}

StepWeight scheme_G_alt_subset(std::uint32_t subset, int k) {
  return [subset, k](const VerticalStep &s) -> LaurentPoly {
    return g_alt_column_marked(s.from.x, subset, k) ? q_pow(1) : kOne;
  };
}

StepWeight scheme_H_alt_subset(std::uint32_t subset, int k,
                               const Configuration &config) {
  return [subset, k, config](const VerticalStep &s) -> LaurentPoly {
    LaurentPoly w = g_alt_column_marked(s.from.x, subset, k) ? q_pow(2) : kOne;
    if (is_end(config, s.to()))
      w += q_pow(1);
    return w;
  };
}

LaurentPoly weight_P(const PathFamily &family) {
  return family_weight(family, scheme_P());
}

LaurentPoly weight_Q(const PathFamily &family, const Configuration &config) {
  return family_weight(family, scheme_Q(config));
}

LaurentPoly weight_G(const PathFamily &family, const Configuration &config) {
  PathStats st = path_stats(family, config);
  int k = path_count(config);
  LaurentPoly w = q_pow(st.sigma_at(2 * k));
  for (int i = 0; i < k; ++i)
    w *= q_pow(st.sigma_at(2 * i - 1)) + q_pow(st.sigma_at(2 * i));
  return w;
}

LaurentPoly weight_G_subsets(const PathFamily &family,
                             const Configuration &config) {
  int k = path_count(config);
  return sum_over_subsets(family, k, [k](std::uint32_t subset) {
    return scheme_G_subset(subset, k);
  });
}

LaurentPoly weight_H(const PathFamily &family, const Configuration &config) {
  PathStats st = path_stats(family, config);
  int k = path_count(config);
  LaurentPoly w = pow(kOne + q_pow(1), static_cast<unsigned>(st.f())) *
                  q_pow(2 * st.sigma_at(2 * k));
  for (int i = 0; i < k; ++i) {
    auto fi = st.f_start[static_cast<std::size_t>(i)];
    w *= q_pow(2 * st.sigma_at(2 * i - 1)) + q_pow(2 * st.sigma_at(2 * i) - fi);
  }
  return w;
}

LaurentPoly weight_H_subsets(const PathFamily &family,
                             const Configuration &config) {
  int k = path_count(config);
  return sum_over_subsets(family, k, [k, &config](std::uint32_t subset) {
    return scheme_H_subset(subset, k, config);
  });
}

LaurentPoly weight_alt(const PathFamily &family, const Configuration &config,
                       AltScheme scheme) {
  PathStats st = path_stats(family, config);
  int k = path_count(config);
  if (scheme == AltScheme::G_alt) {
    LaurentPoly w = q_pow(st.sigma_at(0));
    for (int i = 0; i < k; ++i)
      w *= q_pow(st.sigma_at(2 * i + 2)) + q_pow(st.sigma_at(2 * i + 3));
    return w;
  }
  LaurentPoly w = pow(kOne + q_pow(1), static_cast<unsigned>(st.f_bar())) *
                  q_pow(2 * st.sigma_at(0));
  for (int i = 0; i < k; ++i) {
    auto fb = st.f_end[static_cast<std::size_t>(i)];
    w *= q_pow(2 * st.sigma_at(2 * i + 2) - fb) +
         q_pow(2 * st.sigma_at(2 * i + 3));
  }
  return w;
}

LaurentPoly weight_alt_subsets(const PathFamily &family,
                               const Configuration &config, AltScheme scheme) {
  int k = path_count(config);
  if (scheme == AltScheme::G_alt)
    return sum_over_subsets(family, k, [k](std::uint32_t subset) {
      return scheme_G_alt_subset(subset, k);
    });
  return sum_over_subsets(family, k, [k, &config](std::uint32_t subset) {
    return scheme_H_alt_subset(subset, k, config);
  });
}

Configuration family_config(Family f, int m, int k) {
  check_index(f, m, k);
  return f == Family::P || f == Family::Q ? pq_config(m, k) : gh_config(m, k);
}

LaurentPoly family_weight(Family f, const PathFamily &family,
                          const Configuration &config) {
  switch (f) {
  case Family::P:
    return weight_P(family);
  case Family::Q:
    return weight_Q(family, config);
  case Family::G:
    return weight_G(family, config);
  case Family::H:
    return weight_H(family, config);
  }
  return {};
}

LaurentPoly coefficient_lgv_brute(Family f, int m, int k) {
  Configuration config = family_config(f, m, k);
  LaurentPoly total;
  for (const auto &family : enumerate_nonintersecting(config))
    total += family_weight(f, family, config);
  return total;
}

LaurentPoly coefficient_lgv_det(Family f, int m, int k) {
  Configuration config = family_config(f, m, k);
  int n = path_count(config);
  switch (f) {
  case Family::P:
    return lgv_determinant(config, scheme_P());
  case Family::Q:
    return lgv_determinant(config, scheme_Q(config));
  case Family::G:
  case Family::H: {
    LaurentPoly total;
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset)
      total += lgv_determinant(config, f == Family::G
                                           ? scheme_G_subset(subset, n)
                                           : scheme_H_subset(subset, n, config));
    return total;
  }
  }
  return {};
}

} // namespace qfaul
