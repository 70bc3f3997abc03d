#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace disclab {

/// M equally spaced angles theta_j = 2*pi*j/M, j = 0..M-1.
///
/// Circle means use the normalized measure dt/2pi, so the mean of |1|^p is 1
/// and the p=2 mean of a polynomial is an exact Parseval sum once M exceeds
/// twice the degree.
class CircleGrid {
 public:
  explicit CircleGrid(int points);  // throws std::invalid_argument unless points >= 1

  int points() const { return points_; }
  double angle(int j) const;
  bool pow2() const;  // power-of-two grids get the FFT evaluation path

 private:
  int points_ = 0;
};

/// Radial quadrature nodes on [0, r_max], geometrically refined toward 1.
///
/// The partition is the dyadic one: segments [1-2^-j, 1-2^-(j+1)] for
/// j = 0..levels-1, each split into `cells_per_level` equal cells, so
/// r_max = 1 - 2^-levels and no node ever touches 1.  Two schemes:
///   midpoint  - one midpoint node per cell (the default reading everywhere);
///   gauss     - Gauss-Legendre nodes per cell, for the few places that need
///               quadrature error far below the dyadic tail.
/// Weights always sum to r_max (the measure of [0, r_max]).
class RadialGrid {
 public:
  enum class Scheme { midpoint, gauss };

  static RadialGrid geometric_midpoint(int levels, int cells_per_level);
  static RadialGrid geometric_gauss(int levels, int cells_per_level, int points_per_cell = 4);

  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  double r_max() const { return r_max_; }
  int levels() const { return levels_; }
  Scheme scheme() const { return scheme_; }
  std::size_t size() const { return nodes_.size(); }

  /// Index of the first node with r >= boundary (nodes are sorted; cells
  /// never straddle dyadic segment boundaries, so this slices exactly).
  std::size_t first_node_at_or_above(double boundary) const;

 private:
  RadialGrid() = default;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double r_max_ = 0.0;
  int levels_ = 0;
  Scheme scheme_ = Scheme::midpoint;
};

}  // namespace disclab
