#include "ftsreg/spectral.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "ftsreg/parallel.hpp"

namespace ftsreg {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// one FFT object per thread; it caches plans per length
thread_local Eigen::FFT<double> tl_fft;

// Periodized kernel weights on the Fourier grid, w[d] = W^{(T)}(nu_d).
std::vector<double> grid_weights(const SmoothingKernel& kern, double bandwidth, int T) {
  std::vector<double> w(T);
  for (int d = 0; d < T; ++d) w[d] = periodized_weight(kern, bandwidth, two_pi * d / T);
  return w;
}

void check_compatible(const DftStack& a, const DftStack& b) {
  if (a.grid() != b.grid()) throw DimensionError("DFT stacks live on different grids");
  if (a.length() != b.length()) throw DimensionError("DFT stacks have different lengths");
}

// Shared driver for the all-frequencies estimator. On the Fourier grid the
// weight depends only on (s' - s) mod T, so the smoothing sum is a circular
// convolution along the frequency axis; it is evaluated exactly by FFT per
// matrix entry. Frequencies above T/2 are then overwritten by conjugate
// reflection, which the even weights make exact, and the auto case is
// symmetrized to Hermitian.
std::vector<LinOp> smooth_curve(const DftStack& sy, const DftStack& sx,
                                const SmoothingKernel& kern, double bandwidth,
                                bool hermitian) {
  const int T = sx.length();
  const int m = sx.grid().m();
  const std::vector<double> wts = grid_weights(kern, bandwidth, T);
  const double scale = 1.0 / (static_cast<double>(T) * m);
  const int half = T / 2;

  // per-frequency outer products, vectorized as columns of an m^2 x T block
  const Eigen::MatrixXcd xs = sx.coeffs().transpose();
  const Eigen::MatrixXcd ys = hermitian ? Eigen::MatrixXcd() : sy.coeffs().transpose();
  Eigen::MatrixXcd block(m * m, T);
  for (int s = 0; s < T; ++s) {
    Eigen::Map<Eigen::MatrixXcd> col(block.col(s).data(), m, m);
    if (hermitian)
      col.noalias() = xs.col(s) * xs.col(s).adjoint();
    else
      col.noalias() = ys.col(s) * xs.col(s).adjoint();
  }

  Eigen::VectorXcd weight_hat(T);
  {
    Eigen::VectorXcd w(T);
    for (int d = 0; d < T; ++d) w[d] = Complex(wts[d], 0.0);
    tl_fft.fwd(weight_hat, w);
  }

  // entry sequences along frequency, contiguous for the FFT pass
  Eigen::MatrixXcd seqs = block.transpose();
  parallel_for(m * m, [&](int e) {
    Eigen::VectorXcd seq = seqs.col(e);
    Eigen::VectorXcd hat(T);
    tl_fft.fwd(hat, seq);
    hat.array() *= weight_hat.array();
    tl_fft.inv(seq, hat);
    seqs.col(e) = seq;
  });

  std::vector<Eigen::MatrixXcd> actions(T);
  for (int sp = 0; sp <= half; ++sp) {
    Eigen::MatrixXcd acc(m, m);
    Eigen::Map<Eigen::VectorXcd>(acc.data(), m * m) = scale * seqs.row(sp).transpose();
    if (hermitian) acc = 0.5 * (acc + acc.adjoint()).eval();
    // self-paired frequencies (s' = 0 and s' = T/2) are real for real series
    if (sp == 0 || 2 * sp == T) acc = acc.real().cast<Complex>();
    actions[sp] = std::move(acc);
  }
  for (int sp = half + 1; sp < T; ++sp) actions[sp] = actions[T - sp].conjugate();

  std::vector<LinOp> ops;
  ops.reserve(T);
  for (int s = 0; s < T; ++s) ops.emplace_back(sx.grid(), std::move(actions[s]));
  return ops;
}

Eigen::MatrixXcd smooth_at(const DftStack& sy, const DftStack& sx,
                           const SmoothingKernel& kern, double bandwidth, double omega,
                           bool hermitian) {
  const int T = sx.length();
  const int m = sx.grid().m();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(m, m);
  for (int s = 0; s < T; ++s) {
    const double w = periodized_weight(kern, bandwidth, omega - two_pi * s / T);
    if (w == 0.0) continue;
    if (hermitian)
      acc.selfadjointView<Eigen::Lower>().rankUpdate(sx.coeffs().row(s).transpose(), w);
    else
      acc.noalias() += w * (sy.coeffs().row(s).transpose() * sx.coeffs().row(s).conjugate());
  }
  if (hermitian) acc = acc.selfadjointView<Eigen::Lower>();
  acc *= 1.0 / (static_cast<double>(T) * m);
  return acc;
}

} // namespace

SpectralCurve::SpectralCurve(CurveKind kind, double bandwidth, std::vector<LinOp> ops)
    : kind_(kind), bandwidth_(bandwidth), ops_(std::move(ops)) {
  if (ops_.empty()) throw ParameterError("spectral curve needs at least one frequency");
  for (const auto& op : ops_)
    if (op.grid() != ops_.front().grid())
      throw DimensionError("spectral curve operators live on different grids");
}

double SpectralCurve::freq(int s) const {
  if (s < 0 || s >= length()) throw ParameterError("frequency index out of range");
  return two_pi * s / length();
}

const LinOp& SpectralCurve::op(int s) const {
  if (s < 0 || s >= length()) throw ParameterError("frequency index out of range");
  return ops_[static_cast<std::size_t>(s)];
}

LinOp periodogram(const DftStack& stack, int s) {
  const Eigen::VectorXcd v = stack.coeff(s); // bounds-checked
  const double scale = 1.0 / (two_pi * stack.grid().m());
  return LinOp(stack.grid(), scale * (v * v.adjoint()));
}

LinOp cross_periodogram(const DftStack& stack_y, const DftStack& stack_x, int s) {
  check_compatible(stack_y, stack_x);
  const Eigen::VectorXcd y = stack_y.coeff(s);
  const Eigen::VectorXcd x = stack_x.coeff(s);
  const double scale = 1.0 / (two_pi * stack_x.grid().m());
  return LinOp(stack_x.grid(), scale * (y * x.adjoint()));
}

SpectralCurve smooth_spectrum(const DftStack& stack_y, const DftStack& stack_x,
                              const SmoothingKernel& w, double bandwidth) {
  check_compatible(stack_y, stack_x);
  return SpectralCurve(CurveKind::Cross, bandwidth,
                       smooth_curve(stack_y, stack_x, w, bandwidth, false));
}

SpectralCurve smooth_spectrum(const DftStack& stack_x, const SmoothingKernel& w,
                              double bandwidth) {
  return SpectralCurve(CurveKind::Auto, bandwidth,
                       smooth_curve(stack_x, stack_x, w, bandwidth, true));
}

LinOp smooth_spectrum_at(const DftStack& stack_y, const DftStack& stack_x,
                         const SmoothingKernel& w, double bandwidth, double omega) {
  check_compatible(stack_y, stack_x);
  return LinOp(stack_x.grid(), smooth_at(stack_y, stack_x, w, bandwidth, omega, false));
}

LinOp smooth_spectrum_at(const DftStack& stack_x, const SmoothingKernel& w,
                         double bandwidth, double omega) {
  return LinOp(stack_x.grid(), smooth_at(stack_x, stack_x, w, bandwidth, omega, true));
}

} // namespace ftsreg
