#include "ftsreg/grid.hpp"

#include <cmath>
#include <numbers>

namespace ftsreg {

Complex inner(const GridFunc& f, const GridFunc& g) {
  if (f.grid() != g.grid()) throw DimensionError("inner product across different grids");
  // Eigen's dot conjugates its first argument: g.dot(f) = sum conj(g_k) f_k
  return g.values().dot(f.values()) * f.grid().weight();
}

GridFunc fourier_basis(const GridContext& grid, int j) {
  if (j < 1) throw ParameterError("Fourier basis index must be >= 1");
  const int m = grid.m();
  Eigen::VectorXcd v(m);
  const double sqrt2 = std::numbers::sqrt2;
  if (j == 1) {
    v.setOnes();
  } else if (j % 2 == 0) {
    const int k = j / 2;
    for (int i = 0; i < m; ++i) v[i] = sqrt2 * std::cos(2.0 * std::numbers::pi * k * grid.point(i));
  } else {
    const int k = (j - 1) / 2;
    for (int i = 0; i < m; ++i) v[i] = sqrt2 * std::sin(2.0 * std::numbers::pi * k * grid.point(i));
  }
  return GridFunc(grid, std::move(v));
}

} // namespace ftsreg
