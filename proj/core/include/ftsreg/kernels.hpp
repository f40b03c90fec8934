#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ftsreg {

//! A smoothing weight function W supported on [-1,1], even, integrating to
//! one, with declared order p: moments 1..p-1 vanish. Orders above 2 force
//! W to take negative values.
class SmoothingKernel {
public:
  SmoothingKernel(std::string name, int order, std::function<double(double)> eval);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  double operator()(double x) const { return eval_(x); }

  //! W(u) = 0.75 (1 - u^2), order 2, nonnegative.
  static SmoothingKernel epanechnikov();

  //! Even quartic on [-1,1] with vanishing moments 1..3 and W(+-1) = 0.
  //! The coefficients are solved from the moment system at construction.
  static SmoothingKernel quartic();

  //! Lookup by name ("epanechnikov" or "quartic").
  static SmoothingKernel by_name(const std::string& name);
  static std::vector<std::string> known_names();

private:
  std::string name_;
  int order_;
  std::function<double(double)> eval_;
};

//! Periodized kernel of bandwidth b (radians):
//! W^{(T)}(x) = b^{-1} sum_k W((x + 2 k pi)/b); 2-pi periodic in x.
//! Requires 0 < b <= pi, so at most one periodized copy contributes.
double periodized_weight(const SmoothingKernel& w, double bandwidth, double x);

struct KernelMomentReport {
  std::string kernel;
  int order = 0;
  std::vector<double> moments; //!< moments 0..p by composite quadrature
  bool pass = false;           //!< moment 0 = 1 and moments 1..p-1 = 0, each within 1e-8
};

//! Numeric moments of W up to order p via 10^4-point composite quadrature.
KernelMomentReport kernel_moment_check(const SmoothingKernel& w, int p);

} // namespace ftsreg
