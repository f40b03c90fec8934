#pragma once

namespace ftsreg {

//! Tuning schedule for the smoothed Fourier-Tikhonov estimator at sample
//! size T under polynomial eigenvalue decay alpha and filter decay beta:
//! ridge zeta_T = T^{-alpha/(alpha+2beta)}, bandwidth B_T = T^{-gamma}.
//! The admissible bandwidth exponents form the open window
//! (alpha-1)/(alpha+2beta) < gamma < (2beta-alpha)/(alpha+2beta).
struct TuningSchedule {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  long T = 0;
  double zeta_T = 0.0;
  double B_T = 0.0;
  //! Predicted log-MSE slope in T: gamma - (2beta-1)/(alpha+2beta).
  double rate_exponent = 0.0;
};

//! Validates the decay constraints and computes the schedule; a violated
//! constraint raises ScheduleError naming the inequality.
TuningSchedule schedule(double alpha, double beta, double gamma, long T);

} // namespace ftsreg
