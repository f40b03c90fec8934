#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftsreg/estimator.hpp"
#include "ftsreg/simulate.hpp"

namespace ftsreg {

enum class EstimatorKind { Tikhonov, Truncation };

//! Monte Carlo convergence-study configuration.
struct StudyConfig {
  ProcessSpec process;
  int m = 32;                     //!< grid resolution
  std::vector<long> T_list;      //!< strictly increasing powers of two
  int replicates = 2;
  double alpha = 2.0;            //!< schedule decay exponents
  double beta = 2.0;
  double gamma = 0.25;           //!< bandwidth exponent
  int lag_radius = 3;            //!< L for the recovered banks
  std::uint64_t master_seed = 1;
  EstimatorKind estimator = EstimatorKind::Tikhonov;
  std::string kernel = "epanechnikov";
  double truncation_coeff = 1.0; //!< K(T) = clamp(round(c T^{1/(alpha+2beta)}), 1, m)

  void validate() const;
};

struct StudyRow {
  long T = 0;
  double B_T = 0.0;
  double zeta_T = 0.0;
  double mse_freq_mean = 0.0;
  double mse_freq_se = 0.0;
  double mse_lag_mean = 0.0;
  long guard_failures = 0;
};

struct StudyResult {
  std::vector<StudyRow> rows;
  double fitted_slope = 0.0;     //!< OLS slope of log(mse_freq_mean) on log(T)
  double slope_se = 0.0;
  double predicted_exponent = 0.0;
};

//! Frequency-domain squared error (2 pi / T) sum_s ||Qhat_s - Q(nu_s)||_2^2.
double mse_frequency(const SpectralCurve& qhat, const GroundTruth& truth);

//! Lag-domain squared error sum over the full T-lag set of the inverse DFT
//! of the curve difference. Equals mse_frequency / (2 pi) by Parseval, but
//! is computed through the lag domain so the identity is a genuine check.
double mse_lag(const SpectralCurve& qhat, const GroundTruth& truth);

struct MseMetrics {
  double freq = 0.0;
  double lag = 0.0;
};

//! Both metrics against a precomputed truth curve (one action per nu_s).
MseMetrics mse_metrics(const SpectralCurve& qhat,
                       const std::vector<Eigen::MatrixXcd>& truth_actions);

//! Truth transfer actions on the T-point Fourier grid.
std::vector<Eigen::MatrixXcd> truth_transfer_actions(const GroundTruth& truth, int T);

//! Runs the full study: per (T, replicate) simulate, estimate, and measure;
//! replicates whose ridge guard fires are counted and excluded from means.
//! Deterministic in the master seed for any thread count.
StudyResult run_study(const StudyConfig& cfg);

//! Serializes the result; format is one of "csv", "json", "svg".
std::string emit(const StudyResult& result, const std::string& format);

//! Parses the CSV produced by emit(.., "csv"); emit of the parse is
//! byte-identical to the input.
StudyResult parse_study_csv(const std::string& text);

struct SlopeFit {
  double slope = 0.0;
  double se = 0.0;
  double intercept = 0.0;
};

//! Ordinary least squares of y on x with plain standard errors.
SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

//! Spearman rank correlation.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

} // namespace ftsreg
