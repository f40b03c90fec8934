#pragma once

#include <filesystem>

#include <Eigen/Core>

#include "ftsreg/grid.hpp"

namespace ftsreg {

//! A finite stretch of a real functional time series: row t holds the grid
//! values of X_t, for t = 0..T-1.
class FuncSeries {
public:
  FuncSeries(GridContext grid, Eigen::MatrixXd data);

  const GridContext& grid() const { return grid_; }
  const Eigen::MatrixXd& data() const { return data_; }
  int length() const { return static_cast<int>(data_.rows()); }

  //! CSV with a first header row `m=<int>,T=<int>`, then T rows of m values.
  static FuncSeries read_csv(const std::filesystem::path& path);
  void write_csv(const std::filesystem::path& path) const;

private:
  GridContext grid_;
  Eigen::MatrixXd data_;
};

//! Functional discrete Fourier transform of a series, one row per Fourier
//! frequency nu_s = 2 pi s / T:
//!   coeffs(s, .) = T^{-1/2} sum_t data(t, .) e^{-i nu_s t}.
//! This normalization makes the transform unitary, so the stack satisfies
//! the discrete Parseval identity exactly.
class DftStack {
public:
  DftStack(GridContext grid, Eigen::MatrixXcd coeffs);

  const GridContext& grid() const { return grid_; }
  const Eigen::MatrixXcd& coeffs() const { return coeffs_; }
  int length() const { return static_cast<int>(coeffs_.rows()); }
  double freq(int s) const;

  Eigen::VectorXcd coeff(int s) const;

private:
  GridContext grid_;
  Eigen::MatrixXcd coeffs_;
};

//! FFT of the series along the time axis, per grid column.
DftStack fdft(const FuncSeries& series);

} // namespace ftsreg
