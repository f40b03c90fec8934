#include "ftsreg/simulate.hpp"

#include <cmath>
#include <numbers>

namespace ftsreg {

namespace {

constexpr std::uint64_t kStreamInit = 0x11;
constexpr std::uint64_t kStreamInnov = 0x22;
constexpr std::uint64_t kStreamNoise = 0x33;

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t absorb(std::uint64_t h, std::uint64_t w) { return splitmix(h ^ splitmix(w)); }

double uniform_open(std::uint64_t h) {
  // 53 bits, shifted into (0,1)
  return (static_cast<double>(h >> 11) + 0.5) * 0x1p-53;
}

Eigen::MatrixXd basis_matrix(const GridContext& grid, int modes) {
  Eigen::MatrixXd basis(grid.m(), modes);
  for (int j = 1; j <= modes; ++j) basis.col(j - 1) = fourier_basis(grid, j).values().real();
  return basis;
}

LinOp diagonal_in_basis(const GridContext& grid, const Eigen::MatrixXd& basis,
                        const Eigen::VectorXcd& coef) {
  Eigen::MatrixXcd action =
      (basis * coef.asDiagonal() * basis.transpose()) / static_cast<double>(grid.m());
  return LinOp(grid, std::move(action));
}

} // namespace

double keyed_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t mode,
                    std::uint64_t t) {
  std::uint64_t h = absorb(absorb(absorb(splitmix(seed), stream), mode), t);
  const double u1 = uniform_open(absorb(h, 0));
  const double u2 = uniform_open(absorb(h, 1));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return absorb(absorb(splitmix(master), a), b);
}

void ProcessSpec::validate(const GridContext& grid) const {
  if (modes < 1) throw ConfigError("process needs at least one basis mode");
  if (4 * modes > grid.m())
    throw ConfigError("basis modes must satisfy J <= m/4 for the target grid");
  if (!(std::abs(rho) < 1.0)) throw ConfigError("AR coefficient must satisfy |rho| < 1");
  if (!(alpha > 1.0)) throw ConfigError("eigenvalue decay must satisfy alpha > 1");
  if (!(beta > 0.5)) throw ConfigError("filter decay must satisfy beta > 1/2");
  if (!(alpha < beta + 0.5)) throw ConfigError("decays must satisfy alpha < beta + 1/2");
  if (!(noise_alpha > 1.0)) throw ConfigError("noise decay must satisfy noise_alpha > 1");
  if (noise_scale < 0.0) throw ConfigError("noise scale must be nonnegative");
}

GroundTruth::GroundTruth(ProcessSpec spec, GridContext grid)
    : spec_(spec),
      grid_(grid),
      basis_(basis_matrix(grid, spec.modes)),
      sigma2_(spec.modes),
      filter_gain_(spec.modes),
      filter_(grid, 1) {
  spec_.validate(grid_);
  for (int j = 1; j <= spec_.modes; ++j) {
    sigma2_[j - 1] = std::pow(j, -spec_.alpha);
    filter_gain_[j - 1] = std::pow(j, -spec_.beta);
  }
  const LinOp gain = diagonal_in_basis(grid_, basis_, filter_gain_.cast<Complex>());
  filter_.set(-1, spec_.filter_weights[0] * gain);
  filter_.set(0, spec_.filter_weights[1] * gain);
  filter_.set(1, spec_.filter_weights[2] * gain);
}

double GroundTruth::ar_spectrum(double omega) const {
  const Complex den = 1.0 - spec_.rho * std::exp(Complex(0.0, -omega));
  return 1.0 / (2.0 * std::numbers::pi * std::norm(den));
}

Complex GroundTruth::filter_symbol(double omega) const {
  return spec_.filter_weights[0] * std::exp(Complex(0.0, omega)) +
         spec_.filter_weights[1] +
         spec_.filter_weights[2] * std::exp(Complex(0.0, -omega));
}

LinOp GroundTruth::spectral_density(double omega) const {
  const Eigen::VectorXcd coef = (ar_spectrum(omega) * sigma2_).cast<Complex>();
  return diagonal_in_basis(grid_, basis_, coef);
}

LinOp GroundTruth::cross_spectral_density(double omega) const {
  // per-mode closed form q(omega) j^{-beta} sigma_j^2 f_AR(omega)
  const Complex q = filter_symbol(omega);
  const double f = ar_spectrum(omega);
  Eigen::VectorXcd coef(spec_.modes);
  for (int j = 0; j < spec_.modes; ++j) coef[j] = q * filter_gain_[j] * sigma2_[j] * f;
  return diagonal_in_basis(grid_, basis_, coef);
}

LinOp GroundTruth::transfer(double omega) const {
  const Complex q = filter_symbol(omega);
  Eigen::VectorXcd coef = q * filter_gain_.cast<Complex>();
  return diagonal_in_basis(grid_, basis_, coef);
}

SimulatedPair simulate_pair(const ProcessSpec& spec, const GridContext& grid, int T,
                            std::uint64_t seed) {
  spec.validate(grid);
  if (T < 4) throw ConfigError("simulation needs T >= 4");

  const int J = spec.modes;
  const Eigen::MatrixXd basis = basis_matrix(grid, J);
  Eigen::VectorXd sigma(J), gain(J), noise_sd(J);
  for (int j = 1; j <= J; ++j) {
    sigma[j - 1] = std::pow(j, -spec.alpha / 2.0);
    gain[j - 1] = std::pow(j, -spec.beta);
    noise_sd[j - 1] = std::sqrt(spec.noise_scale * std::pow(j, -spec.noise_alpha));
  }

  // AR(1) factors for t = -1..T (column u = t + 1), stationary start
  Eigen::MatrixXd xi(J, T + 2);
  const double stat_sd = 1.0 / std::sqrt(1.0 - spec.rho * spec.rho);
  for (int j = 0; j < J; ++j) {
    xi(j, 0) = stat_sd * keyed_normal(seed, kStreamInit, j, 0);
    for (int t = 0; t <= T; ++t)
      xi(j, t + 1) = spec.rho * xi(j, t) + keyed_normal(seed, kStreamInnov, j, t);
  }

  Eigen::MatrixXd coef_x(T, J), coef_y(T, J);
  const double wm1 = spec.filter_weights[0], w0 = spec.filter_weights[1],
               wp1 = spec.filter_weights[2];
  for (int t = 0; t < T; ++t) {
    for (int j = 0; j < J; ++j) {
      coef_x(t, j) = sigma[j] * xi(j, t + 1);
      const double conv = w0 * xi(j, t + 1) + wp1 * xi(j, t) + wm1 * xi(j, t + 2);
      coef_y(t, j) = gain[j] * sigma[j] * conv +
                     noise_sd[j] * keyed_normal(seed, kStreamNoise, j, t);
    }
  }

  FuncSeries x(grid, coef_x * basis.transpose());
  FuncSeries y(grid, coef_y * basis.transpose());
  return SimulatedPair{std::move(x), std::move(y), GroundTruth(spec, grid)};
}

} // namespace ftsreg
