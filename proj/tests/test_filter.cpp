#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

using namespace ftsreg;

TEST_CASE("filter bank bookkeeping") {
  GridContext grid(8);
  FilterBank bank(grid, 2);
  CHECK(bank.lags().empty());
  CHECK(bank.hs_summability() == 0.0);
  CHECK(bank.imag_mass() == 0.0);

  bank.set(1, LinOp::identity(grid));
  bank.set(-2, 2.0 * LinOp::identity(grid));
  CHECK(bank.lags() == std::vector<int>{-2, 1});
  CHECK(bank.has(1));
  CHECK_FALSE(bank.has(0));
  CHECK(hs_norm(bank.op(0)) == 0.0);
  CHECK(bank.hs_summability() ==
        doctest::Approx(3.0 * std::sqrt(8.0)).epsilon(1e-13));

  CHECK_THROWS_AS(bank.set(3, LinOp::identity(grid)), ParameterError);
  CHECK_THROWS_AS(bank.set(0, LinOp::identity(GridContext(4))), DimensionError);
  CHECK_THROWS_AS(FilterBank(grid, -1), ParameterError);
}

TEST_CASE("transfer function closed forms") {
  GridContext grid(8);
  std::mt19937_64 rng(31);
  const LinOp b0 = test::random_linop(grid, rng);

  // lag-0-only bank: constant in omega
  FilterBank lag0(grid, 0);
  lag0.set(0, b0);
  for (double omega : {0.0, 0.7, 2.0, 6.0})
    CHECK(hs_norm(transfer_function(lag0, omega) - b0) == 0.0);

  // empty bank: zero operator
  FilterBank empty(grid, 3);
  CHECK(hs_norm(transfer_function(empty, 1.0)) == 0.0);

  // symmetric neighbors: (1 + 2 c cos omega) B0, scalar trig oracle
  const double c = 0.37;
  FilterBank sym(grid, 1);
  sym.set(0, b0);
  sym.set(1, c * b0);
  sym.set(-1, c * b0);
  for (double omega : {0.0, std::numbers::pi / 2.0, std::numbers::pi}) {
    const double mult = 1.0 + 2.0 * c * std::cos(omega);
    CHECK(hs_norm(transfer_function(sym, omega) - mult * b0) <= 1e-12 * hs_norm(b0));
  }

  // 2-pi periodicity
  const LinOp q1 = transfer_function(sym, 1.3);
  const LinOp q2 = transfer_function(sym, 1.3 + 2.0 * std::numbers::pi);
  CHECK(hs_norm(q1 - q2) <= 1e-12 * (1.0 + hs_norm(q1)));
}

TEST_CASE("roundtrip check") {
  GridContext grid(16);
  std::mt19937_64 rng(32);

  FilterBank zero(grid, 2);
  CHECK(roundtrip_check(zero, 16) == 0.0);

  const FilterBank bank = test::random_bank(grid, 3, rng);
  CHECK(roundtrip_check(bank, 64) <= 1e-10);

  CHECK_THROWS_AS(roundtrip_check(bank, 6), AliasingError);  // L = T/2 rejected
  CHECK_NOTHROW(roundtrip_check(bank, 7));
}

TEST_CASE("roundtrip holds for many random banks") {
  std::mt19937_64 rng(33);
  GridContext grid(16);
  for (int rep = 0; rep < 20; ++rep) {
    const FilterBank bank = test::random_bank(grid, 3, rng);
    CHECK(roundtrip_check(bank, 64) <= 1e-10);
  }
}

TEST_CASE("imag mass diagnostics") {
  GridContext grid(4);
  FilterBank bank(grid, 1);
  bank.set(0, LinOp(grid, Eigen::MatrixXcd::Identity(4, 4)));
  CHECK(bank.imag_mass() == 0.0);
  bank.set(1, LinOp(grid, Complex(0.0, 1.0) * Eigen::MatrixXcd::Identity(4, 4)));
  CHECK(bank.imag_mass() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
}
