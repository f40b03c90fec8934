#pragma once

#include <array>
#include <cstdint>

#include "ftsreg/filter.hpp"
#include "ftsreg/series.hpp"

namespace ftsreg {

//! Configuration of the coupled simulation model.
//!
//! The covariate is X_t = sum_j sigma_j xi_{j,t} e_j over the first `modes`
//! real Fourier basis elements, with sigma_j^2 = j^{-alpha} and each xi_{j,.}
//! an independent stationary AR(1) with coefficient rho and unit Gaussian
//! innovations. The response is Y_t = sum_l B_l X_{t-l} + eps_t with the
//! diagonal filter B_l = w_l sum_j j^{-beta} e_j (x) e_j over lags
//! {-1, 0, +1} and eps_t independent Gaussian noise with mode variances
//! noise_scale * j^{-noise_alpha} on the same basis.
struct ProcessSpec {
  int modes = 8;          //!< J, must satisfy J <= m/4 on the target grid
  double alpha = 2.0;     //!< covariate eigenvalue decay, > 1
  double rho = 0.5;       //!< AR(1) coefficient, |rho| < 1
  double beta = 2.0;      //!< filter decay, > 1/2 and > alpha - 1/2
  std::array<double, 3> filter_weights{0.4, 1.0, 0.4}; //!< w_{-1}, w_0, w_{+1}
  double noise_alpha = 2.0; //!< noise eigenvalue decay, > 1
  double noise_scale = 1.0; //!< multiplier on the noise variances

  void validate(const GridContext& grid) const;
};

//! Closed-form population quantities of a ProcessSpec: spectral density,
//! cross-spectral density, transfer function, and the filter bank itself.
class GroundTruth {
public:
  GroundTruth(ProcessSpec spec, GridContext grid);

  const ProcessSpec& spec() const { return spec_; }
  const GridContext& grid() const { return grid_; }

  //! F^{XX}(omega) = sum_j sigma_j^2 f_AR(omega) e_j (x) e_j with
  //! f_AR(omega) = (2 pi)^{-1} / |1 - rho e^{-i omega}|^2.
  LinOp spectral_density(double omega) const;

  //! F^{YX}(omega), assembled from its own per-mode closed form.
  LinOp cross_spectral_density(double omega) const;

  //! Q(omega) = (sum_l w_l e^{-i omega l}) sum_j j^{-beta} e_j (x) e_j.
  LinOp transfer(double omega) const;

  const FilterBank& filter() const { return filter_; }

  //! Scalar AR(1) spectral density factor.
  double ar_spectrum(double omega) const;
  //! Scalar transfer multiplier sum_l w_l e^{-i omega l}.
  Complex filter_symbol(double omega) const;

private:
  ProcessSpec spec_;
  GridContext grid_;
  Eigen::MatrixXd basis_;        // m x J, columns e_j
  Eigen::VectorXd sigma2_;       // j^{-alpha}
  Eigen::VectorXd filter_gain_;  // j^{-beta}
  FilterBank filter_;
};

struct SimulatedPair {
  FuncSeries x;
  FuncSeries y;
  GroundTruth truth;
};

//! Draws one stretch of the coupled pair, deterministically in the seed.
//!
//! The AR(1) factors start from their exact stationary law and the two extra
//! covariate values needed at t = -1 and t = T are simulated with the same
//! recursion (no circular wraparound). Draws are produced by a counter-based
//! generator keyed by (seed, stream, mode, t), so distinct replicates are
//! reproducible independent of scheduling; fold replicate identity into the
//! seed.
SimulatedPair simulate_pair(const ProcessSpec& spec, const GridContext& grid, int T,
                            std::uint64_t seed);

//! Counter-based standard normal draw for the keyed streams.
double keyed_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t mode,
                    std::uint64_t t);

//! Deterministic seed derivation for replicate r of a study cell.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

} // namespace ftsreg
