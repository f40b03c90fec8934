#include "ftsreg/operators.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ftsreg {

bool LinOp::is_self_adjoint(double rel_tol) const {
  const double scale = action_.norm();
  const double asym = (action_ - action_.adjoint()).norm();
  return asym <= rel_tol * scale;
}

double schatten_norm(const LinOp& a, SchattenOrder order) {
  if (!a.action().allFinite()) throw NumericError("operator has non-finite entries");
  if (order == SchattenOrder::Two) return a.action().norm();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.action());
  const auto& sv = svd.singularValues();
  if (order == SchattenOrder::One) return sv.sum();
  return sv.size() == 0 ? 0.0 : sv[0];
}

LinOp tensor(const GridFunc& f, const GridFunc& g) {
  if (f.grid() != g.grid()) throw DimensionError("tensor product across different grids");
  const double w = f.grid().weight();
  return LinOp(f.grid(), w * (f.values() * g.values().adjoint()));
}

LinOp compose(const LinOp& a, const LinOp& b) {
  if (a.grid() != b.grid()) throw DimensionError("composition across different grids");
  return LinOp(a.grid(), a.action() * b.action());
}

LinOp tikhonov_inverse(const LinOp& a, double zeta) {
  if (!(zeta > 0.0)) throw ParameterError("ridge parameter zeta must be positive");
  const Eigen::MatrixXcd sym = 0.5 * (a.action() + a.action().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  if (es.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
  const Eigen::VectorXd& lam = es.eigenvalues();
  if (!(lam[0] + zeta > 0.0))
    throw RidgeNotPositiveError("ridge-shifted operator is not strictly positive definite");
  Eigen::VectorXd inv = (lam.array() + zeta).inverse();
  Eigen::MatrixXcd r =
      es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
  return LinOp(a.grid(), std::move(r));
}

EigenDecomposition eigh(const LinOp& a) {
  if (!a.is_self_adjoint())
    throw StructureError("operator is not self-adjoint within tolerance");
  const Eigen::MatrixXcd sym = 0.5 * (a.action() + a.action().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  if (es.info() != Eigen::Success) throw NumericError("eigendecomposition failed");

  const int m = a.grid().m();
  const double scale = std::sqrt(static_cast<double>(m));
  EigenDecomposition out;
  out.eigenvalues.resize(m);
  out.eigenfunctions.reserve(m);
  // Eigen sorts ascending; flip to descending and rescale eigenvectors so
  // they are orthonormal under the quadrature inner product.
  for (int n = 0; n < m; ++n) {
    const int src = m - 1 - n;
    out.eigenvalues[n] = es.eigenvalues()[src];
    out.eigenfunctions.emplace_back(a.grid(), scale * es.eigenvectors().col(src));
  }
  return out;
}

} // namespace ftsreg
