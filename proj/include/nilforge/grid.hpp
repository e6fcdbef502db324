#pragma once

#include <cstddef>
#include <vector>

#include "nilforge/algebra.hpp"

namespace nilforge {

/// Uniform conformal grid; node (j, k) sits at z = (x0 + j dx) + i (y0 + k dy).
/// Storage is row-major with x fastest: index = k * nx + j.
struct DomainGrid {
  double x0 = 0.0, y0 = 0.0;
  double dx = 1.0, dy = 1.0;
  int nx = 5, ny = 5;

  /// Throws InvalidArgument unless dx, dy > 0 and nx, ny >= 5.
  void validate() const;

  std::size_t size() const noexcept { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int j, int k) const noexcept {
    return static_cast<std::size_t>(k) * nx + j;
  }
  double x(int j) const noexcept { return x0 + j * dx; }
  double y(int k) const noexcept { return y0 + k * dy; }
  cplx z(int j, int k) const noexcept { return {x(j), y(k)}; }

  /// Square grid with n nodes per side on [lo, hi]^2.
  static DomainGrid square(double lo, double hi, int n);

  /// Perimeter nodes in the order: bottom row, top row, left column
  /// (k = 1..ny-2), right column (k = 1..ny-2).
  std::vector<std::size_t> perimeter() const;

  friend bool operator==(const DomainGrid&, const DomainGrid&) = default;
};

struct GridNode {
  int j = 0, k = 0;
  friend bool operator==(const GridNode&, const GridNode&) = default;
};

}  // namespace nilforge
