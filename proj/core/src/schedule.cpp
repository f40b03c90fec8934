#include "ftsreg/schedule.hpp"

#include <cmath>
#include <string>

#include "ftsreg/errors.hpp"

namespace ftsreg {

TuningSchedule schedule(double alpha, double beta, double gamma, long T) {
  if (!(alpha > 1.0)) throw ScheduleError("eigenvalue decay must satisfy alpha > 1");
  if (!(beta > 0.5)) throw ScheduleError("filter decay must satisfy beta > 1/2");
  if (!(alpha < beta + 0.5)) throw ScheduleError("decays must satisfy alpha < beta + 1/2");
  const double denom = alpha + 2.0 * beta;
  const double lo = (alpha - 1.0) / denom;
  const double hi = (2.0 * beta - alpha) / denom;
  if (!(gamma > lo))
    throw ScheduleError("bandwidth exponent must satisfy gamma > (alpha-1)/(alpha+2beta) = " +
                        std::to_string(lo));
  if (!(gamma < hi))
    throw ScheduleError("bandwidth exponent must satisfy gamma < (2beta-alpha)/(alpha+2beta) = " +
                        std::to_string(hi));
  if (T < 2) throw ScheduleError("sample size must satisfy T >= 2");

  TuningSchedule s;
  s.alpha = alpha;
  s.beta = beta;
  s.gamma = gamma;
  s.T = T;
  s.zeta_T = std::pow(static_cast<double>(T), -alpha / denom);
  s.B_T = std::pow(static_cast<double>(T), -gamma);
  s.rate_exponent = gamma - (2.0 * beta - 1.0) / denom;
  return s;
}

} // namespace ftsreg
