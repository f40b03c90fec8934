#pragma once

#include <complex>

#include <Eigen/Core>

#include "ftsreg/errors.hpp"

namespace ftsreg {

using Complex = std::complex<double>;

//! Uniform midpoint discretization of the unit interval.
//!
//! Functions are represented by their values at tau_k = (k + 1/2) / m and
//! integrals by the quadrature weight 1/m. On this grid the real Fourier
//! basis is orthonormal to machine precision, which every oracle test in
//! this library leans on.
class GridContext {
public:
  explicit GridContext(int m) : m_(m) {
    if (m < 1) throw ParameterError("grid resolution must be at least 1");
  }

  int m() const { return m_; }
  double weight() const { return 1.0 / m_; }
  double point(int k) const { return (k + 0.5) / m_; }

  Eigen::VectorXd points() const {
    Eigen::VectorXd p(m_);
    for (int k = 0; k < m_; ++k) p[k] = point(k);
    return p;
  }

  friend bool operator==(const GridContext& a, const GridContext& b) { return a.m_ == b.m_; }
  friend bool operator!=(const GridContext& a, const GridContext& b) { return a.m_ != b.m_; }

private:
  int m_;
};

//! A (possibly complex valued) function sampled on a GridContext.
class GridFunc {
public:
  GridFunc(GridContext grid, Eigen::VectorXcd values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.m())
      throw DimensionError("grid function length does not match grid resolution");
  }

  static GridFunc zero(const GridContext& grid) {
    return GridFunc(grid, Eigen::VectorXcd::Zero(grid.m()));
  }

  const GridContext& grid() const { return grid_; }
  const Eigen::VectorXcd& values() const { return values_; }

  //! L2[0,1] norm under the quadrature weight.
  double l2_norm() const { return values_.norm() / std::sqrt(static_cast<double>(grid_.m())); }

private:
  GridContext grid_;
  Eigen::VectorXcd values_;
};

//! Inner product <f,g> = (1/m) sum_k f_k conj(g_k); conjugate symmetric.
Complex inner(const GridFunc& f, const GridFunc& g);

//! Real Fourier basis element e_j, j >= 1:
//! e_1 = 1, e_{2k} = sqrt(2) cos(2 pi k tau), e_{2k+1} = sqrt(2) sin(2 pi k tau).
GridFunc fourier_basis(const GridContext& grid, int j);

} // namespace ftsreg
