#include "ftsreg/kernels.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "ftsreg/errors.hpp"

namespace ftsreg {

SmoothingKernel::SmoothingKernel(std::string name, int order, std::function<double(double)> eval)
    : name_(std::move(name)), order_(order), eval_(std::move(eval)) {
  if (order_ < 2 || order_ % 2 != 0) throw ParameterError("kernel order must be a positive even integer");
}

SmoothingKernel SmoothingKernel::epanechnikov() {
  return SmoothingKernel("epanechnikov", 2, [](double u) {
    return std::abs(u) <= 1.0 ? 0.75 * (1.0 - u * u) : 0.0;
  });
}

SmoothingKernel SmoothingKernel::quartic() {
  // W(u) = a + b u^2 + c u^4 on [-1,1] subject to
  //   integral W = 1, integral W u^2 = 0, W(1) = 0.
  Eigen::Matrix3d sys;
  sys << 2.0, 2.0 / 3.0, 2.0 / 5.0,
         2.0 / 3.0, 2.0 / 5.0, 2.0 / 7.0,
         1.0, 1.0, 1.0;
  const Eigen::Vector3d coef = sys.fullPivLu().solve(Eigen::Vector3d(1.0, 0.0, 0.0));
  const double a = coef[0], b = coef[1], c = coef[2];
  return SmoothingKernel("quartic", 4, [a, b, c](double u) {
    if (std::abs(u) > 1.0) return 0.0;
    const double u2 = u * u;
    return a + b * u2 + c * u2 * u2;
  });
}

SmoothingKernel SmoothingKernel::by_name(const std::string& name) {
  if (name == "epanechnikov") return epanechnikov();
  if (name == "quartic") return quartic();
  throw ParameterError("unknown kernel '" + name + "' (known: epanechnikov, quartic)");
}

std::vector<std::string> SmoothingKernel::known_names() { return {"epanechnikov", "quartic"}; }

double periodized_weight(const SmoothingKernel& w, double bandwidth, double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(bandwidth > 0.0) || bandwidth > std::numbers::pi)
    throw ParameterError("bandwidth must lie in (0, pi]");
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  // with r in [0, 2pi) only the k = 0 and k = -1 copies can touch [-1, 1]
  return (w(r / bandwidth) + w((r - two_pi) / bandwidth)) / bandwidth;
}

KernelMomentReport kernel_moment_check(const SmoothingKernel& w, int p) {
  if (p < 1) throw ParameterError("moment order must be positive");
  KernelMomentReport rep;
  rep.kernel = w.name();
  rep.order = w.order();
  rep.moments.resize(p + 1);

  // composite Simpson on [-1,1] with 10^4 panels
  const int n = 10000;
  const double h = 2.0 / n;
  for (int j = 0; j <= p; ++j) {
    auto f = [&](double u) { return w(u) * std::pow(u, j); };
    double acc = f(-1.0) + f(1.0);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(-1.0 + i * h);
    rep.moments[j] = acc * h / 3.0;
  }

  rep.pass = std::abs(rep.moments[0] - 1.0) <= 1e-8;
  for (int j = 1; j < p; ++j)
    if (std::abs(rep.moments[j]) > 1e-8) rep.pass = false;
  return rep;
}

} // namespace ftsreg
