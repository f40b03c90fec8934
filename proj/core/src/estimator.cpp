#include "ftsreg/estimator.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "ftsreg/parallel.hpp"

namespace ftsreg {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

//! Builds the Q curve from the two smoothed curves by applying a
//! per-frequency regularized inversion for s <= T/2 and reflecting the rest.
SpectralCurve q_curve_from(const SpectralCurve& fyx, const SpectralCurve& fxx,
                           const std::function<LinOp(const LinOp&, const LinOp&)>& invert) {
  const int T = fxx.length();
  const int half = T / 2;
  std::vector<Eigen::MatrixXcd> actions(T);
  parallel_for(half + 1, [&](int s) {
    actions[s] = invert(fyx.op(s), fxx.op(s)).action();
  });
  for (int s = half + 1; s < T; ++s) actions[s] = actions[T - s].conjugate();

  std::vector<LinOp> ops;
  ops.reserve(T);
  for (int s = 0; s < T; ++s) ops.emplace_back(fxx.op(0).grid(), std::move(actions[s]));
  return SpectralCurve(CurveKind::Cross, fxx.bandwidth(), std::move(ops));
}

FilterBank recover_bank(const SpectralCurve& q, int lag_radius) {
  const int T = q.length();
  const int m = q.op(0).grid().m();
  FilterBank bank(q.op(0).grid(), lag_radius);
  for (int lag = -lag_radius; lag <= lag_radius; ++lag) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(m, m);
    for (int s = 0; s < T; ++s) {
      const double ang = two_pi * s * lag / T;
      acc += std::exp(Complex(0.0, ang)) * q.op(s).action();
    }
    acc /= static_cast<double>(T);
    bank.set(lag, LinOp(q.op(0).grid(), std::move(acc)));
  }
  return bank;
}

FilterEstimate estimate_with(const FuncSeries& x, const FuncSeries& y,
                             const SmoothingKernel& w, double bandwidth, int lag_radius,
                             const std::function<LinOp(const LinOp&, const LinOp&)>& invert) {
  if (x.grid() != y.grid()) throw DimensionError("covariate and response live on different grids");
  if (x.length() != y.length())
    throw DimensionError("covariate and response series have different lengths");
  if (lag_radius < 0) throw ParameterError("lag radius must be nonnegative");
  if (2 * lag_radius >= x.length())
    throw AliasingError("lag radius aliases on the frequency grid (need 2L < T)");

  const DftStack sx = fdft(x);
  const DftStack sy = fdft(y);
  const SpectralCurve fxx = smooth_spectrum(sx, w, bandwidth);
  const SpectralCurve fyx = smooth_spectrum(sy, sx, w, bandwidth);
  SpectralCurve q = q_curve_from(fyx, fxx, invert);
  FilterBank bank = recover_bank(q, lag_radius);
  return FilterEstimate{std::move(bank), std::move(q)};
}

} // namespace

LinOp estimate_q(const LinOp& fyx, const LinOp& fxx, double zeta) {
  if (fyx.grid() != fxx.grid()) throw DimensionError("spectral operators on different grids");
  return compose(fyx, tikhonov_inverse(fxx, zeta));
}

LinOp estimate_q_truncated(const LinOp& fyx, const LinOp& fxx, int K) {
  if (fyx.grid() != fxx.grid()) throw DimensionError("spectral operators on different grids");
  const int m = fxx.grid().m();
  if (K < 1 || K > m) throw ParameterError("truncation rank must lie in [1, m]");
  const EigenDecomposition dec = eigh(fxx);
  if (!(dec.eigenvalues[K - 1] > 0.0))
    throw RankError("truncation rank reaches a non-positive eigenvalue");
  Eigen::MatrixXcd inv = Eigen::MatrixXcd::Zero(m, m);
  for (int n = 0; n < K; ++n) {
    const Eigen::VectorXcd& phi = dec.eigenfunctions[n].values();
    inv.noalias() += (phi * phi.adjoint()) / (dec.eigenvalues[n] * m);
  }
  return compose(fyx, LinOp(fxx.grid(), std::move(inv)));
}

FilterEstimate estimate_filter(const FuncSeries& x, const FuncSeries& y,
                               const SmoothingKernel& w, double bandwidth, double zeta,
                               int lag_radius) {
  return estimate_with(x, y, w, bandwidth, lag_radius,
                       [zeta](const LinOp& fyx, const LinOp& fxx) {
                         return estimate_q(fyx, fxx, zeta);
                       });
}

FilterEstimate estimate_filter(const FuncSeries& x, const FuncSeries& y,
                               const SmoothingKernel& w, const TuningSchedule& sched,
                               int lag_radius) {
  if (sched.T != x.length())
    throw ParameterError("tuning schedule was computed for a different sample size");
  return estimate_filter(x, y, w, sched.B_T, sched.zeta_T, lag_radius);
}

FilterEstimate estimate_filter_truncated(const FuncSeries& x, const FuncSeries& y,
                                         const SmoothingKernel& w, double bandwidth, int K,
                                         int lag_radius) {
  return estimate_with(x, y, w, bandwidth, lag_radius,
                       [K](const LinOp& fyx, const LinOp& fxx) {
                         return estimate_q_truncated(fyx, fxx, K);
                       });
}

} // namespace ftsreg
