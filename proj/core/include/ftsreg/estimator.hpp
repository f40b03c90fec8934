#pragma once

#include "ftsreg/filter.hpp"
#include "ftsreg/schedule.hpp"
#include "ftsreg/spectral.hpp"

namespace ftsreg {

//! Ridge-regularized transfer function estimate at one frequency:
//! Q = F^{YX} [F^{XX} + zeta I]^{-1}.
LinOp estimate_q(const LinOp& fyx, const LinOp& fxx, double zeta);

//! Spectral-truncation baseline: invert F^{XX} on the span of its leading K
//! empirical eigenfunctions. Requires the K-th eigenvalue to be positive.
LinOp estimate_q_truncated(const LinOp& fyx, const LinOp& fxx, int K);

struct FilterEstimate {
  FilterBank bank;       //!< recovered lag operators, |l| <= L
  SpectralCurve q_curve; //!< full transfer-function curve, retained so the
                         //!< frequency/lag Parseval diagnostic is exact
};

//! The smoothed Fourier-Tikhonov filter estimator: smooths both spectral
//! curves, applies estimate_q at every Fourier frequency, and recovers
//! B_l = (1/T) sum_s Q(nu_s) e^{+i nu_s l} for |l| <= L.
FilterEstimate estimate_filter(const FuncSeries& x, const FuncSeries& y,
                               const SmoothingKernel& w, double bandwidth, double zeta,
                               int lag_radius);

//! Same, with bandwidth and ridge taken from a tuning schedule.
FilterEstimate estimate_filter(const FuncSeries& x, const FuncSeries& y,
                               const SmoothingKernel& w, const TuningSchedule& sched,
                               int lag_radius);

//! Truncation-regularized variant of the filter estimator (rank K inverse).
FilterEstimate estimate_filter_truncated(const FuncSeries& x, const FuncSeries& y,
                                         const SmoothingKernel& w, double bandwidth, int K,
                                         int lag_radius);

} // namespace ftsreg
