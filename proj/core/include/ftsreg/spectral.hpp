#pragma once

#include <vector>

#include "ftsreg/kernels.hpp"
#include "ftsreg/operators.hpp"
#include "ftsreg/series.hpp"

namespace ftsreg {

enum class CurveKind { Auto, Cross };

//! A spectral density (or cross-spectral density, or transfer function)
//! estimate sampled at every Fourier frequency nu_s = 2 pi s / T.
//!
//! For real input series the curve is conjugate symmetric,
//! ops[(T-s) mod T] = conj(ops[s]); auto curves are Hermitian at every s.
class SpectralCurve {
public:
  SpectralCurve(CurveKind kind, double bandwidth, std::vector<LinOp> ops);

  CurveKind kind() const { return kind_; }
  double bandwidth() const { return bandwidth_; }
  int length() const { return static_cast<int>(ops_.size()); }
  double freq(int s) const;
  const LinOp& op(int s) const;
  const std::vector<LinOp>& ops() const { return ops_; }

private:
  CurveKind kind_;
  double bandwidth_;
  std::vector<LinOp> ops_;
};

//! Periodogram operator at frequency index s: rank one, self-adjoint,
//! positive semidefinite, with E[P] equal to the spectral density operator
//! up to O(1/T).
LinOp periodogram(const DftStack& stack, int s);

//! Cross-periodogram of (Y, X) at frequency index s.
//! cross_periodogram(X, X, s) == periodogram(X, s).
LinOp cross_periodogram(const DftStack& stack_y, const DftStack& stack_x, int s);

//! Kernel-smoothed cross-spectral density estimator over all Fourier
//! frequencies: ops[s'] = (2 pi / T) sum_s W^{(T)}(nu_s' - nu_s) P^{YX}_s.
//! Frequencies s' <= T/2 are computed and the rest filled by conjugate
//! reflection, which the symmetry of the weights makes exact.
SpectralCurve smooth_spectrum(const DftStack& stack_y, const DftStack& stack_x,
                              const SmoothingKernel& w, double bandwidth);

//! Smoothed (auto) spectral density estimator; Hermitian at every frequency.
SpectralCurve smooth_spectrum(const DftStack& stack_x, const SmoothingKernel& w,
                              double bandwidth);

//! Single-frequency variants, for evaluating the estimator off the stored
//! curve (any omega in radians).
LinOp smooth_spectrum_at(const DftStack& stack_y, const DftStack& stack_x,
                         const SmoothingKernel& w, double bandwidth, double omega);
LinOp smooth_spectrum_at(const DftStack& stack_x, const SmoothingKernel& w,
                         double bandwidth, double omega);

} // namespace ftsreg
