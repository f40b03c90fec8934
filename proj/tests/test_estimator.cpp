#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

using namespace ftsreg;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

LinOp coordinate_diagonal(const GridContext& grid, const Eigen::VectorXd& diag) {
  return LinOp(grid, Eigen::MatrixXcd(diag.cast<Complex>().asDiagonal()));
}
} // namespace

TEST_CASE("estimate_q closed forms") {
  GridContext grid(8);
  const LinOp id = LinOp::identity(grid);
  CHECK(hs_norm(estimate_q(LinOp::zero(grid), id, 0.3)) == 0.0);
  CHECK(hs_norm(estimate_q(id, id, 1.0) - 0.5 * id) < 1e-13);
  CHECK_THROWS_AS(estimate_q(id, -1.0 * id, 0.5), RidgeNotPositiveError);
}

TEST_CASE("estimate_q on a diagonal pair matches the scalar-division oracle") {
  // lambda_j = j^{-2}, a_j = j^{-3} on the first J Fourier modes
  const int m = 64, J = 8;
  GridContext grid(m);
  const double zeta = 0.1;
  Eigen::MatrixXcd fxx = Eigen::MatrixXcd::Zero(m, m);
  Eigen::MatrixXcd fyx = Eigen::MatrixXcd::Zero(m, m);
  for (int j = 1; j <= J; ++j) {
    const Eigen::MatrixXcd e = tensor(fourier_basis(grid, j), fourier_basis(grid, j)).action();
    fxx += std::pow(j, -2.0) * e;
    fyx += std::pow(j, -3.0) * e;
  }
  const LinOp qhat = estimate_q(LinOp(grid, fyx), LinOp(grid, fxx), zeta);
  for (int j = 1; j <= J; ++j) {
    const GridFunc ej = fourier_basis(grid, j);
    const Complex got = inner(qhat.apply(ej), ej);
    const double expected = std::pow(j, -3.0) / (std::pow(j, -2.0) + zeta);
    CHECK(std::abs(got - expected) < 1e-10);
  }
  // off the spanned modes the inverse contributes 1/zeta but fyx annihilates it
  const GridFunc e9 = fourier_basis(grid, J + 1);
  CHECK(qhat.apply(e9).l2_norm() < 1e-10);
}

TEST_CASE("estimate_q_truncated closed forms and rank errors") {
  const int m = 16;
  GridContext grid(m);
  std::mt19937_64 rng(41);
  const LinOp fyx = test::random_linop(grid, rng);
  CHECK(hs_norm(estimate_q_truncated(fyx, LinOp::identity(grid), m) - fyx) < 1e-10);
  CHECK_THROWS_AS(estimate_q_truncated(fyx, LinOp::identity(grid), 0), ParameterError);
  CHECK_THROWS_AS(estimate_q_truncated(fyx, LinOp::identity(grid), m + 1), ParameterError);

  // rank-deficient fxx: reaching past the positive spectrum is an error
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  diag.head(4) << 1.0, 0.5, 0.25, 0.125;
  const LinOp fxx = coordinate_diagonal(grid, diag);
  CHECK_NOTHROW(estimate_q_truncated(fyx, fxx, 4));
  CHECK_THROWS_AS(estimate_q_truncated(fyx, fxx, 5), RankError);
}

TEST_CASE("truncated estimator divides only the leading modes") {
  const int m = 16, K = 4;
  GridContext grid(m);
  Eigen::VectorXd lam(m), a(m);
  for (int j = 1; j <= m; ++j) {
    lam[j - 1] = std::pow(j, -2.0);
    a[j - 1] = std::pow(j, -3.0);
  }
  const LinOp qhat =
      estimate_q_truncated(coordinate_diagonal(grid, a), coordinate_diagonal(grid, lam), K);
  for (int j = 1; j <= m; ++j) {
    const double expected = j <= K ? a[j - 1] / lam[j - 1] : 0.0;
    CHECK(std::abs(qhat.action()(j - 1, j - 1) - expected) < 1e-10);
  }
}

TEST_CASE("tikhonov and truncation agree in the small-ridge full-rank limit") {
  const int m = 16;
  GridContext grid(m);
  Eigen::VectorXd lam(m), a(m);
  for (int j = 1; j <= m; ++j) {
    lam[j - 1] = std::pow(j, -2.0);
    a[j - 1] = std::pow(j, -3.0);
  }
  const LinOp fyx = coordinate_diagonal(grid, a);
  const LinOp fxx = coordinate_diagonal(grid, lam);
  const LinOp ridge = estimate_q(fyx, fxx, 1e-12);
  const LinOp trunc = estimate_q_truncated(fyx, fxx, m);
  CHECK(hs_norm(ridge - trunc) < 1e-6);
}

TEST_CASE("estimate_filter of a zero response is the zero bank") {
  std::mt19937_64 rng(42);
  GridContext grid(8);
  const int T = 64;
  const FuncSeries x = test::random_series(grid, T, rng);
  const FuncSeries y(grid, Eigen::MatrixXd::Zero(T, 8));
  const FilterEstimate est =
      estimate_filter(x, y, SmoothingKernel::epanechnikov(), 0.3, 0.1, 3);
  for (int lag : est.bank.lags()) CHECK(hs_norm(est.bank.op(lag)) == 0.0);
  for (int s = 0; s < T; ++s) CHECK(hs_norm(est.q_curve.op(s)) == 0.0);
}

TEST_CASE("noiseless identity pipeline: error decreases monotonically in zeta") {
  // Y = X on a well-conditioned white-noise covariate whose spectral level
  // is calibrated to one, so B0 estimates the identity
  std::mt19937_64 rng(43);
  const int T = 512, m = 8;
  GridContext grid(m);
  const FuncSeries x = test::random_series(grid, T, rng, std::sqrt(two_pi * m));
  const SmoothingKernel w = SmoothingKernel::epanechnikov();
  const double bandwidth = std::pow(static_cast<double>(T), -0.25);

  double previous = std::numeric_limits<double>::infinity();
  for (double zeta : {1e-1, 1e-2, 1e-3}) {
    const FilterEstimate est = estimate_filter(x, x, w, bandwidth, zeta, 0);
    const double err = hs_norm(est.bank.op(0) - LinOp::identity(grid));
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 0.1);
}

TEST_CASE("estimate_filter is deterministic") {
  GridContext grid(16);
  ProcessSpec spec;
  spec.modes = 4;
  const SimulatedPair pair = simulate_pair(spec, grid, 128, 77);
  const TuningSchedule sched = schedule(2.0, 2.0, 0.25, 128);
  const SmoothingKernel w = SmoothingKernel::epanechnikov();

  const FilterEstimate a = estimate_filter(pair.x, pair.y, w, sched, 3);
  const FilterEstimate b = estimate_filter(pair.x, pair.y, w, sched, 3);
  const double mse_a = mse_frequency(a.q_curve, pair.truth);
  const double mse_b = mse_frequency(b.q_curve, pair.truth);
  CHECK(mse_a == mse_b);
  for (int lag = -3; lag <= 3; ++lag)
    CHECK((a.bank.op(lag).action() - b.bank.op(lag).action()).norm() == 0.0);
}

TEST_CASE("output is identical for any thread count") {
  GridContext grid(16);
  ProcessSpec spec;
  spec.modes = 4;
  const SimulatedPair pair = simulate_pair(spec, grid, 128, 78);
  const SmoothingKernel w = SmoothingKernel::epanechnikov();

  set_max_threads(1);
  const FilterEstimate serial = estimate_filter(pair.x, pair.y, w, 0.3, 0.05, 2);
  set_max_threads(4);
  const FilterEstimate parallel = estimate_filter(pair.x, pair.y, w, 0.3, 0.05, 2);
  set_max_threads(0);
  for (int s = 0; s < 128; ++s)
    CHECK((serial.q_curve.op(s).action() - parallel.q_curve.op(s).action()).norm() == 0.0);
}

TEST_CASE("conjugate-symmetric curves recover essentially real banks") {
  GridContext grid(16);
  ProcessSpec spec;
  spec.modes = 4;
  const SimulatedPair pair = simulate_pair(spec, grid, 256, 79);
  const TuningSchedule sched = schedule(2.0, 2.0, 0.25, 256);
  const FilterEstimate est =
      estimate_filter(pair.x, pair.y, SmoothingKernel::epanechnikov(), sched, 3);
  CHECK(est.bank.imag_mass() <= 1e-10);
}

TEST_CASE("delaying the response shifts the estimated transfer and bank") {
  // with a degenerate kernel (single contributing frequency) the circular
  // delay Y'_t = Y_{t-1} maps the transfer estimate to e^{-i omega} Qhat
  // exactly, hence shifts the bank by one lag
  GridContext grid(16);
  ProcessSpec spec;
  spec.modes = 4;
  const int T = 64, L = 3;
  const SimulatedPair pair = simulate_pair(spec, grid, T, 80);
  Eigen::MatrixXd delayed(T, grid.m());
  for (int t = 0; t < T; ++t) delayed.row(t) = pair.y.data().row(((t - 1) % T + T) % T);
  const FuncSeries y_delayed(grid, delayed);

  const SmoothingKernel w = SmoothingKernel::epanechnikov();
  const double bandwidth = 0.5 * two_pi / T; // only s' = s contributes
  const double zeta = 0.05;
  const FilterEstimate base = estimate_filter(pair.x, pair.y, w, bandwidth, zeta, L);
  const FilterEstimate shifted = estimate_filter(pair.x, y_delayed, w, bandwidth, zeta, L);

  for (int s = 0; s < T; ++s) {
    const Complex phase = std::exp(Complex(0.0, -two_pi * s / T));
    const double scale = 1.0 + hs_norm(base.q_curve.op(s));
    CHECK(hs_norm(shifted.q_curve.op(s) - phase * base.q_curve.op(s)) <= 1e-12 * scale);
  }
  for (int lag = -L + 1; lag <= L; ++lag) {
    const double scale = 1.0 + hs_norm(base.bank.op(lag - 1));
    CHECK(hs_norm(shifted.bank.op(lag) - base.bank.op(lag - 1)) <= 1e-12 * scale);
  }
}

TEST_CASE("estimate_filter validates its inputs") {
  std::mt19937_64 rng(44);
  GridContext grid(8);
  const FuncSeries x = test::random_series(grid, 32, rng);
  const FuncSeries y16 = test::random_series(grid, 16, rng);
  const FuncSeries ybad = test::random_series(GridContext(4), 32, rng);
  const SmoothingKernel w = SmoothingKernel::epanechnikov();
  CHECK_THROWS_AS(estimate_filter(x, y16, w, 0.3, 0.1, 3), DimensionError);
  CHECK_THROWS_AS(estimate_filter(x, ybad, w, 0.3, 0.1, 3), DimensionError);
  CHECK_THROWS_AS(estimate_filter(x, x, w, 0.3, 0.1, 16), AliasingError);
  CHECK_THROWS_AS(estimate_filter(x, x, w, 0.3, 0.1, -1), ParameterError);

  const TuningSchedule sched = schedule(2.0, 2.0, 0.25, 64);
  CHECK_THROWS_AS(estimate_filter(x, x, w, sched, 3), ParameterError); // T mismatch
}

TEST_CASE("scalar ridge fixtures scale with the predicted exponents") {
  // sums (A), (B), (C) with lambda_j = j^{-alpha}, b_j = j^{-beta},
  // zeta = T^{-alpha/(alpha+2beta)}; log-log slopes across T = 2^8..2^16
  const double alpha = 2.0, beta = 2.0;
  const double denom = alpha + 2.0 * beta;
  const int jmax = 2000000;

  std::vector<double> lt, la, lb, lc;
  for (int k = 8; k <= 16; ++k) {
    const double T = std::pow(2.0, k);
    const double zeta = std::pow(T, -alpha / denom);
    double sa = 0.0, sb = 0.0, sc = 0.0;
    for (int j = 1; j <= jmax; ++j) {
      const double lam = std::pow(j, -alpha);
      const double bj = std::pow(j, -beta);
      const double den = (lam + zeta) * (lam + zeta);
      sa += zeta * zeta * bj * bj / den;
      sb += lam / den / T;
      sc += lam * lam / den;
    }
    lt.push_back(std::log(T));
    la.push_back(std::log(sa));
    lb.push_back(std::log(sb));
    lc.push_back(std::log(sc));
  }
  const double target_ab = -(2.0 * beta - 1.0) / denom; // -1/2
  const double target_c = 1.0 / denom;                  // 1/6
  CHECK(std::abs(fit_line(lt, la).slope - target_ab) <= 0.1);
  CHECK(std::abs(fit_line(lt, lb).slope - target_ab) <= 0.1);
  CHECK(std::abs(fit_line(lt, lc).slope - target_c) <= 0.1);
}
