#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "test_support.hpp"

using namespace ftsreg;
namespace fs = std::filesystem;

namespace {
fs::path temp_file(const char* name) {
  return fs::temp_directory_path() / (std::string("ftsreg_series_") + name);
}
} // namespace

TEST_CASE("series validation") {
  GridContext grid(4);
  CHECK_THROWS_AS(FuncSeries(grid, Eigen::MatrixXd::Zero(1, 4)), ParameterError);
  CHECK_THROWS_AS(FuncSeries(grid, Eigen::MatrixXd::Zero(4, 3)), DimensionError);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(4, 4);
  bad(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(FuncSeries(grid, bad), NumericError);
}

TEST_CASE("fdft of a constant series concentrates at frequency zero") {
  const int T = 16, m = 8;
  GridContext grid(m);
  const double c = 2.5;
  FuncSeries series(grid, Eigen::MatrixXd::Constant(T, m, c));
  const DftStack stack = fdft(series);
  for (int k = 0; k < m; ++k) {
    CHECK(std::abs(stack.coeffs()(0, k) - std::sqrt(double(T)) * c) < 1e-12);
    for (int s = 1; s < T; ++s) CHECK(std::abs(stack.coeffs()(s, k)) < 1e-12);
  }
}

TEST_CASE("fdft of the zero series is zero") {
  GridContext grid(4);
  FuncSeries series(grid, Eigen::MatrixXd::Zero(8, 4));
  CHECK(fdft(series).coeffs().norm() == 0.0);
}

TEST_CASE("fdft of a single-frequency series matches the direct DFT oracle") {
  const int T = 8, m = 8;
  GridContext grid(m);
  const GridFunc g = fourier_basis(grid, 2);
  Eigen::MatrixXd data(T, m);
  const double nu1 = 2.0 * std::numbers::pi / T;
  for (int t = 0; t < T; ++t) data.row(t) = std::cos(nu1 * t) * g.values().real().transpose();
  const FuncSeries series(grid, data);
  const DftStack stack = fdft(series);

  // direct O(T^2) oracle
  Eigen::MatrixXcd oracle = Eigen::MatrixXcd::Zero(T, m);
  for (int s = 0; s < T; ++s)
    for (int t = 0; t < T; ++t)
      oracle.row(s) += data.row(t) * std::exp(Complex(0.0, -2.0 * std::numbers::pi * s * t / T)) /
                       std::sqrt(double(T));
  CHECK((stack.coeffs() - oracle).norm() < 1e-12);

  // concentration at s = 1 and s = T-1 with value (sqrt(T)/2) g
  const double half_mass = std::sqrt(double(T)) / 2.0;
  for (int k = 0; k < m; ++k) {
    CHECK(std::abs(stack.coeffs()(1, k) - half_mass * g.values()[k]) < 1e-12);
    CHECK(std::abs(stack.coeffs()(T - 1, k) - half_mass * g.values()[k]) < 1e-12);
    for (int s = 0; s < T; ++s)
      if (s != 1 && s != T - 1) CHECK(std::abs(stack.coeffs()(s, k)) <= 1e-12);
  }
}

TEST_CASE("dft stack invariants on random series") {
  std::mt19937_64 rng(11);
  GridContext grid(6);
  for (int rep = 0; rep < 50; ++rep) {
    const int T = 2 + static_cast<int>(rng() % 63); // odd and even lengths
    const FuncSeries series = test::random_series(grid, T, rng);
    const DftStack stack = fdft(series);

    // conjugate symmetry row (T-s) mod T = conj(row s)
    for (int s = 0; s < T; ++s) {
      const int mirror = (T - s) % T;
      CHECK((stack.coeffs().row(mirror) - stack.coeffs().row(s).conjugate()).norm() <
            1e-10 * (1.0 + stack.coeffs().row(s).norm()));
    }

    // Parseval: the 1/sqrt(T) convention is exactly unitary
    const double lhs = stack.coeffs().squaredNorm();
    const double rhs = series.data().squaredNorm();
    CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
  }
}

TEST_CASE("unnormalized inverse DFT recovers sqrt(T) times the data") {
  std::mt19937_64 rng(12);
  GridContext grid(5);
  const int T = 24;
  const FuncSeries series = test::random_series(grid, T, rng);
  const DftStack stack = fdft(series);
  for (int k = 0; k < grid.m(); ++k) {
    for (int t = 0; t < T; ++t) {
      Complex acc = 0.0;
      for (int s = 0; s < T; ++s)
        acc += stack.coeffs()(s, k) * std::exp(Complex(0.0, 2.0 * std::numbers::pi * s * t / T));
      CHECK(std::abs(acc - std::sqrt(double(T)) * series.data()(t, k)) < 1e-10);
    }
  }
}

TEST_CASE("csv round trip is exact") {
  std::mt19937_64 rng(13);
  GridContext grid(7);
  const FuncSeries series = test::random_series(grid, 12, rng, 3.7);
  const fs::path path = temp_file("roundtrip.csv");
  series.write_csv(path);
  const FuncSeries back = FuncSeries::read_csv(path);
  CHECK(back.length() == series.length());
  CHECK(back.grid().m() == series.grid().m());
  CHECK((back.data() - series.data()).norm() == 0.0);
  fs::remove(path);
}

TEST_CASE("csv reader rejects malformed input") {
  const fs::path path = temp_file("bad.csv");
  {
    std::ofstream out(path);
    out << "m=3,T=2\n1,2,3\n4,5\n";
  }
  CHECK_THROWS_AS(FuncSeries::read_csv(path), IoError);
  {
    std::ofstream out(path);
    out << "rows=3\n";
  }
  CHECK_THROWS_AS(FuncSeries::read_csv(path), IoError);
  CHECK_THROWS_AS(FuncSeries::read_csv(temp_file("missing_file.csv")), IoError);
  fs::remove(path);
}

TEST_CASE("frequency accessors") {
  GridContext grid(3);
  FuncSeries series(grid, Eigen::MatrixXd::Zero(8, 3));
  const DftStack stack = fdft(series);
  CHECK(stack.freq(0) == 0.0);
  CHECK(stack.freq(2) == doctest::Approx(std::numbers::pi / 2.0));
  CHECK_THROWS_AS(stack.freq(8), ParameterError);
  CHECK_THROWS_AS(stack.coeff(-1), ParameterError);
}
