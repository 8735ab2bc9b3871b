#include "qfaul/lattice.hpp"

#include "qfaul/errors.hpp"
#include "qfaul/poly_matrix.hpp"

#include <algorithm>
#include <string>

namespace qfaul {

std::vector<LatticePoint> LatticePath::points() const {
  std::vector<LatticePoint> pts;
  pts.reserve(steps.size() + 1);
  LatticePoint p = start;
  pts.push_back(p);
  for (char s : steps) {
    if (s == 'E')
      ++p.x;
    else
      ++p.y;
    pts.push_back(p);
  }
  return pts;
}

LatticePoint LatticePath::end() const {
  auto east = std::count(steps.begin(), steps.end(), 'E');
  auto north = static_cast<long>(steps.size()) - east;
  return {start.x + static_cast<int>(east), start.y + static_cast<int>(north)};
}

std::string PathFamily::dump() const {
  std::string out;
  for (const auto &p : paths) {
    out += p.steps;
    out += '\n';
  }
  return out;
}

namespace {

void check_config_index(int m, int k) {
  if (k < 0 || (k > 0 && k >= m))
    throw BadIndex("configuration needs 1 <= k < m (or k = 0), got m=" +
                   std::to_string(m) + " k=" + std::to_string(k));
}

} // namespace

Configuration pq_config(int m, int k) {
  check_config_index(m, k);
  Configuration c;
  for (int i = 0; i < k; ++i) {
    c.starts.push_back({2 * i, -2 * i});
    c.ends.push_back({2 * i + 3, m - k - i - 1});
  }
  return c;
}

Configuration gh_config(int m, int k) {
  check_config_index(m, k);
  Configuration c;
  for (int i = 0; i < k; ++i) {
    c.starts.push_back({2 * i, -2 * i});
    c.ends.push_back({2 * i + 2, m - k - 1 - i});
  }
  return c;
}

StepWeight column_scheme(ColumnWeights weights) {
  return [w = std::move(weights)](const VerticalStep &s) -> LaurentPoly {
    auto it = w.find(s.from.x);
    return it == w.end() ? LaurentPoly(1) : it->second;
  };
}

LaurentPoly single_path_weight_sum(LatticePoint a, LatticePoint b,
                                   const ColumnWeights &weights) {
  if (b.x < a.x || b.y < a.y)
    return {};
  int n = b.y - a.y;
  // h[j] = h_j over the columns processed so far; adding a column x uses
  // h_j(A + x) = h_j(A) + x h_{j-1}(A + x).
  std::vector<LaurentPoly> h(static_cast<std::size_t>(n + 1));
  h[0] = 1;
  for (int x = a.x; x <= b.x; ++x) {
    auto it = weights.find(x);
    LaurentPoly wx = it == weights.end() ? LaurentPoly(1) : it->second;
    for (std::size_t j = 1; j < h.size(); ++j)
      h[j] += wx * h[j - 1];
  }
  return h.back();
}

LaurentPoly path_weight_sum(LatticePoint a, LatticePoint b,
                            const StepWeight &weight) {
  if (b.x < a.x || b.y < a.y)
    return {};
  auto width = static_cast<std::size_t>(b.x - a.x + 1);
  auto height = static_cast<std::size_t>(b.y - a.y + 1);
  std::vector<LaurentPoly> w(width * height);
  for (std::size_t yi = 0; yi < height; ++yi)
    for (std::size_t xi = 0; xi < width; ++xi) {
      LaurentPoly &cell = w[yi * width + xi];
      if (xi == 0 && yi == 0) {
        cell = 1;
        continue;
      }
      if (xi > 0)
        cell += w[yi * width + xi - 1];
      if (yi > 0) {
        VerticalStep step{{a.x + static_cast<int>(xi),
                           a.y + static_cast<int>(yi) - 1}};
        cell += w[(yi - 1) * width + xi] * weight(step);
      }
    }
  return w.back();
}

namespace {

class FamilyEnumerator {
public:
  explicit FamilyEnumerator(const Configuration &config) : config_(config) {
    lo_ = hi_ = config.starts.front();
    for (const auto &pts : {config.starts, config.ends})
      for (const auto &p : pts) {
        lo_.x = std::min(lo_.x, p.x);
        lo_.y = std::min(lo_.y, p.y);
        hi_.x = std::max(hi_.x, p.x);
        hi_.y = std::max(hi_.y, p.y);
      }
    width_ = static_cast<std::size_t>(hi_.x - lo_.x + 1);
    used_.assign(width_ * static_cast<std::size_t>(hi_.y - lo_.y + 1), 0);
    current_.paths.resize(config.size());
  }

  std::vector<PathFamily> run() {
    place(0);
    return std::move(out_);
  }

private:
  char &cell(LatticePoint p) {
    return used_[static_cast<std::size_t>(p.y - lo_.y) * width_ +
                 static_cast<std::size_t>(p.x - lo_.x)];
  }

  void place(std::size_t i) {
    if (i == config_.size()) {
      out_.push_back(current_);
      return;
    }
    LatticePoint s = config_.starts[i];
    LatticePoint e = config_.ends[i];
    if (e.x < s.x || e.y < s.y || cell(s))
      return;
    current_.paths[i] = {s, {}};
    cell(s) = 1;
    walk(i, s, e);
    cell(s) = 0;
  }

  void walk(std::size_t i, LatticePoint p, LatticePoint e) {
    if (p == e) {
      place(i + 1);
      return;
    }
    std::string &steps = current_.paths[i].steps;
    auto step = [&](char dir, LatticePoint next) {
      if (cell(next))
        return;
      cell(next) = 1;
      steps.push_back(dir);
      walk(i, next, e);
      steps.pop_back();
      cell(next) = 0;
    };
    if (p.x < e.x)
      step('E', {p.x + 1, p.y});
    if (p.y < e.y)
      step('N', {p.x, p.y + 1});
  }

  const Configuration &config_;
  LatticePoint lo_, hi_;
  std::size_t width_ = 0;
  std::vector<char> used_;
  PathFamily current_;
  std::vector<PathFamily> out_;
};

} // namespace

std::vector<PathFamily> enumerate_nonintersecting(const Configuration &config) {
  if (config.starts.size() != config.ends.size())
    throw DimensionMismatch("configuration has unequal start and end counts");
  if (config.size() == 0)
    return {PathFamily{}};
  return FamilyEnumerator(config).run();
}

LaurentPoly family_weight(const PathFamily &family, const StepWeight &weight) {
  LaurentPoly w = 1;
  for (const auto &path : family.paths) {
    LatticePoint p = path.start;
    for (char s : path.steps) {
      if (s == 'N') {
        w *= weight(VerticalStep{p});
        ++p.y;
      } else {
        ++p.x;
      }
    }
  }
  return w;
}

LaurentPoly lgv_determinant(const Configuration &config,
                            const StepWeight &weight) {
  if (config.starts.size() != config.ends.size())
    throw DimensionMismatch("configuration has unequal start and end counts");
  PolyMatrix m(config.size());
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = 0; j < config.size(); ++j)
      m(i, j) = path_weight_sum(config.starts[j], config.ends[i], weight);
  return det(m);
}

LaurentPoly lgv_determinant(const Configuration &config,
                            const ColumnWeights &weights) {
  PolyMatrix m(config.size());
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = 0; j < config.size(); ++j)
      m(i, j) = single_path_weight_sum(config.starts[j], config.ends[i], weights);
  return det(m);
}

} // namespace qfaul
