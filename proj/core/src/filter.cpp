#include "ftsreg/filter.hpp"

#include <cmath>
#include <numbers>

namespace ftsreg {

FilterBank::FilterBank(GridContext grid, int radius) : grid_(grid), radius_(radius) {
  if (radius < 0) throw ParameterError("filter support radius must be nonnegative");
}

std::vector<int> FilterBank::lags() const {
  std::vector<int> out;
  out.reserve(ops_.size());
  for (const auto& [lag, op] : ops_) out.push_back(lag);
  return out;
}

LinOp FilterBank::op(int lag) const {
  auto it = ops_.find(lag);
  return it == ops_.end() ? LinOp::zero(grid_) : it->second;
}

void FilterBank::set(int lag, LinOp op) {
  if (std::abs(lag) > radius_) throw ParameterError("lag outside declared support radius");
  if (op.grid() != grid_) throw DimensionError("filter operator on a different grid");
  ops_.insert_or_assign(lag, std::move(op));
}

double FilterBank::hs_summability() const {
  double acc = 0.0;
  for (const auto& [lag, op] : ops_) acc += hs_norm(op);
  return acc;
}

double FilterBank::imag_mass() const {
  double imag2 = 0.0, total2 = 0.0;
  for (const auto& [lag, op] : ops_) {
    imag2 += op.action().imag().squaredNorm();
    total2 += op.action().squaredNorm();
  }
  return total2 == 0.0 ? 0.0 : std::sqrt(imag2 / total2);
}

LinOp transfer_function(const FilterBank& bank, double omega) {
  const int m = bank.grid().m();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(m, m);
  for (int lag : bank.lags()) {
    const Complex phase = std::exp(Complex(0.0, -omega * lag));
    acc += phase * bank.op(lag).action();
  }
  return LinOp(bank.grid(), std::move(acc));
}

double roundtrip_check(const FilterBank& bank, int T) {
  if (T < 2) throw ParameterError("frequency grid needs T >= 2");
  if (2 * bank.radius() >= T)
    throw AliasingError("lag radius aliases on the frequency grid (need 2L < T)");

  const int m = bank.grid().m();
  std::vector<Eigen::MatrixXcd> q(T);
  for (int s = 0; s < T; ++s)
    q[s] = transfer_function(bank, 2.0 * std::numbers::pi * s / T).action();

  double worst = 0.0;
  for (int lag = -bank.radius(); lag <= bank.radius(); ++lag) {
    Eigen::MatrixXcd rec = Eigen::MatrixXcd::Zero(m, m);
    for (int s = 0; s < T; ++s) {
      const double ang = 2.0 * std::numbers::pi * s * lag / T;
      rec += std::exp(Complex(0.0, ang)) * q[s];
    }
    rec /= static_cast<double>(T);
    worst = std::max(worst, (rec - bank.op(lag).action()).norm());
  }
  return worst;
}

} // namespace ftsreg
