#include "disclab/grids.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace disclab {

CircleGrid::CircleGrid(int points) : points_(points) {
  if (points < 1) throw std::invalid_argument("CircleGrid: need at least one angle");
}

double CircleGrid::angle(int j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(points_);
}

bool CircleGrid::pow2() const { return points_ > 0 && (points_ & (points_ - 1)) == 0; }

namespace {

void check_geometry(int levels, int cells_per_level) {
  if (levels < 1 || levels > 50) throw std::invalid_argument("RadialGrid: levels out of range [1,50]");
  if (cells_per_level < 1) throw std::invalid_argument("RadialGrid: need cells_per_level >= 1");
}

// abscissas/weights on (-1,1); enough orders for every caller here
struct GaussRule {
  std::vector<double> x, w;
};

GaussRule gauss_rule(int n) {
  // Newton iteration on Legendre polynomials; deterministic and accurate to ~1e-15
  GaussRule g;
  g.x.resize(static_cast<std::size_t>(n));
  g.w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    g.x[static_cast<std::size_t>(i)] = x;
    g.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  // cos() above walks from +1 side down; sort ascending for reproducible order
  std::vector<std::size_t> idx(g.x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return g.x[a] < g.x[b]; });
  GaussRule out;
  for (std::size_t i : idx) {
    out.x.push_back(g.x[i]);
    out.w.push_back(g.w[i]);
  }
  return out;
}

}  // namespace

RadialGrid RadialGrid::geometric_midpoint(int levels, int cells_per_level) {
  check_geometry(levels, cells_per_level);
  RadialGrid g;
  g.levels_ = levels;
  g.scheme_ = Scheme::midpoint;
  for (int j = 0; j < levels; ++j) {
    const double lo = 1.0 - std::ldexp(1.0, -j);
    const double hi = 1.0 - std::ldexp(1.0, -(j + 1));
    const double h = (hi - lo) / cells_per_level;
    for (int c = 0; c < cells_per_level; ++c) {
      g.nodes_.push_back(lo + (c + 0.5) * h);
      g.weights_.push_back(h);
    }
  }
  g.r_max_ = 1.0 - std::ldexp(1.0, -levels);
  return g;
}

RadialGrid RadialGrid::geometric_gauss(int levels, int cells_per_level, int points_per_cell) {
  check_geometry(levels, cells_per_level);
  if (points_per_cell < 1 || points_per_cell > 16) {
    throw std::invalid_argument("RadialGrid: points_per_cell out of range [1,16]");
  }
  const GaussRule rule = gauss_rule(points_per_cell);
  RadialGrid g;
  g.levels_ = levels;
  g.scheme_ = Scheme::gauss;
  for (int j = 0; j < levels; ++j) {
    const double lo = 1.0 - std::ldexp(1.0, -j);
    const double hi = 1.0 - std::ldexp(1.0, -(j + 1));
    const double h = (hi - lo) / cells_per_level;
    for (int c = 0; c < cells_per_level; ++c) {
      const double a = lo + c * h;
      for (int q = 0; q < points_per_cell; ++q) {
        g.nodes_.push_back(a + 0.5 * h * (1.0 + rule.x[static_cast<std::size_t>(q)]));
        g.weights_.push_back(0.5 * h * rule.w[static_cast<std::size_t>(q)]);
      }
    }
  }
  g.r_max_ = 1.0 - std::ldexp(1.0, -levels);
  return g;
}

std::size_t RadialGrid::first_node_at_or_above(double boundary) const {
  return static_cast<std::size_t>(std::lower_bound(nodes_.begin(), nodes_.end(), boundary) - nodes_.begin());
}

}  // namespace disclab
