#pragma once

#include <vector>

#include <Eigen/Core>

#include "ftsreg/grid.hpp"

namespace ftsreg {

//! A linear operator on grid functions, stored through its action matrix A:
//! (Af)(tau_i) = sum_j A(i,j) f(tau_j).
//!
//! The action matrix equals kernel/m for an integral operator with kernel
//! k(tau, sigma), so Schatten norms of the operator coincide with matrix
//! Schatten norms of `action` with no extra scaling, and the identity
//! operator (which has no L2 kernel) is representable. Kernel values are
//! recoverable as m * action when exporting.
class LinOp {
public:
  LinOp(GridContext grid, Eigen::MatrixXcd action) : grid_(grid), action_(std::move(action)) {
    if (action_.rows() != grid_.m() || action_.cols() != grid_.m())
      throw DimensionError("operator action matrix does not match grid resolution");
  }

  static LinOp identity(const GridContext& grid) {
    return LinOp(grid, Eigen::MatrixXcd::Identity(grid.m(), grid.m()));
  }
  static LinOp zero(const GridContext& grid) {
    return LinOp(grid, Eigen::MatrixXcd::Zero(grid.m(), grid.m()));
  }

  const GridContext& grid() const { return grid_; }
  const Eigen::MatrixXcd& action() const { return action_; }

  GridFunc apply(const GridFunc& f) const {
    if (f.grid() != grid_) throw DimensionError("operator and argument live on different grids");
    return GridFunc(grid_, action_ * f.values());
  }

  LinOp adjoint() const { return LinOp(grid_, action_.adjoint()); }

  //! ||A - A*||_F <= rel_tol * ||A||_F (a zero operator is self-adjoint).
  bool is_self_adjoint(double rel_tol = 1e-8) const;

  Complex trace() const { return action_.trace(); }

  friend LinOp operator+(const LinOp& a, const LinOp& b) {
    if (a.grid_ != b.grid_) throw DimensionError("operator sum across different grids");
    return LinOp(a.grid_, a.action_ + b.action_);
  }
  friend LinOp operator-(const LinOp& a, const LinOp& b) {
    if (a.grid_ != b.grid_) throw DimensionError("operator difference across different grids");
    return LinOp(a.grid_, a.action_ - b.action_);
  }
  friend LinOp operator*(Complex c, const LinOp& a) { return LinOp(a.grid_, c * a.action_); }
  friend LinOp operator*(double c, const LinOp& a) { return LinOp(a.grid_, c * a.action_); }

private:
  GridContext grid_;
  Eigen::MatrixXcd action_;
};

enum class SchattenOrder { One, Two, Inf };

//! Schatten norm of the operator: 1 = nuclear, 2 = Hilbert-Schmidt
//! (Frobenius of the action matrix), Inf = operator norm.
double schatten_norm(const LinOp& a, SchattenOrder order);

//! Hilbert-Schmidt norm shorthand.
inline double hs_norm(const LinOp& a) { return a.action().norm(); }

//! Rank-one tensor product: tensor(f,g) u = <u,g> f. Action f g^H / m.
LinOp tensor(const GridFunc& f, const GridFunc& g);

//! Operator composition (A then applying to the image of B): action A*B.
LinOp compose(const LinOp& a, const LinOp& b);

//! Ridge-regularized inverse (A + zeta I)^{-1}.
//!
//! A is symmetrized to (A + A*)/2 before solving so the spectrum is real;
//! if the minimum eigenvalue of the symmetrized matrix plus zeta is not
//! strictly positive, RidgeNotPositiveError is raised.
LinOp tikhonov_inverse(const LinOp& a, double zeta);

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;          //!< sorted descending
  std::vector<GridFunc> eigenfunctions; //!< orthonormal under inner()
};

//! Spectral decomposition of a self-adjoint operator.
//! Reconstruction sum_n lambda_n tensor(phi_n, phi_n) recovers the input.
EigenDecomposition eigh(const LinOp& a);

} // namespace ftsreg
