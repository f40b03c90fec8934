#pragma once

#include <map>
#include <vector>

#include "ftsreg/operators.hpp"

namespace ftsreg {

//! Finitely supported lag -> operator map {B_l, |l| <= L}, the coefficients
//! of the temporal convolution coupling the response to the covariate.
//! Estimated banks may carry complex entries; ground-truth banks are real.
class FilterBank {
public:
  FilterBank(GridContext grid, int radius);

  const GridContext& grid() const { return grid_; }
  int radius() const { return radius_; }

  //! Lags with a stored operator, sorted ascending.
  std::vector<int> lags() const;
  bool has(int lag) const { return ops_.count(lag) != 0; }
  //! Operator at a lag; absent lags read as the zero operator.
  LinOp op(int lag) const;

  void set(int lag, LinOp op);

  //! sum_l ||B_l||_2 (finite by construction; reported as a diagnostic).
  double hs_summability() const;

  //! Relative Hilbert-Schmidt mass of the imaginary parts (0 for a zero bank).
  double imag_mass() const;

private:
  GridContext grid_;
  int radius_;
  std::map<int, LinOp> ops_;
};

//! Transfer function of the bank: Q(omega) = sum_l e^{-i omega l} B_l;
//! 2-pi periodic in omega.
LinOp transfer_function(const FilterBank& bank, double omega);

//! Evaluates the transfer function on the T-point Fourier grid, inverts with
//! the same convention the estimator uses, and returns the largest
//! Hilbert-Schmidt discrepancy against the original operators. Exact
//! discrete Fourier inversion makes this <= 1e-10 whenever 2L < T.
double roundtrip_check(const FilterBank& bank, int T);

} // namespace ftsreg
