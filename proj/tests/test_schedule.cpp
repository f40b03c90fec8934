#include <doctest.h>

#include <string>

#include "ftsreg/ftsreg.hpp"

using namespace ftsreg;

TEST_CASE("theorem schedule at the reference configuration") {
  const TuningSchedule s = schedule(2.0, 2.0, 0.25, 4096);
  CHECK(s.zeta_T == doctest::Approx(0.0625).epsilon(1e-14));  // 4096^{-1/3}
  CHECK(s.B_T == doctest::Approx(0.125).epsilon(1e-14));      // 4096^{-1/4}
  CHECK(s.rate_exponent == doctest::Approx(-0.25).epsilon(1e-14));
}

TEST_CASE("bandwidth exponent window") {
  // alpha = beta = 2: admissible window is (1/6, 1/3)
  CHECK_NOTHROW(schedule(2.0, 2.0, 0.17, 1024));
  CHECK_NOTHROW(schedule(2.0, 2.0, 0.33, 1024));
  CHECK_THROWS_AS(schedule(2.0, 2.0, 0.5, 1024), ScheduleError);
  CHECK_THROWS_AS(schedule(2.0, 2.0, 1.0 / 3.0, 1024), ScheduleError); // open interval
  CHECK_THROWS_AS(schedule(2.0, 2.0, 1.0 / 6.0, 1024), ScheduleError);
  CHECK_THROWS_AS(schedule(2.0, 2.0, 0.1, 1024), ScheduleError);
}

TEST_CASE("decay compatibility constraints") {
  // alpha = 1.2, beta = 1: window is (0.0625, 0.25)
  CHECK_NOTHROW(schedule(1.2, 1.0, 0.1, 256));
  const TuningSchedule s = schedule(1.2, 1.0, 0.0626, 256);
  CHECK(s.B_T == doctest::Approx(std::pow(256.0, -0.0626)).epsilon(1e-14));
  CHECK_THROWS_AS(schedule(1.2, 1.0, 0.062, 256), ScheduleError);
  CHECK_THROWS_AS(schedule(1.2, 1.0, 0.25, 256), ScheduleError);

  // alpha = 1.6 violates alpha < beta + 1/2 for beta = 1
  CHECK_THROWS_AS(schedule(1.6, 1.0, 0.1, 256), ScheduleError);
  CHECK_THROWS_AS(schedule(1.0, 2.0, 0.25, 256), ScheduleError); // alpha > 1 fails
  CHECK_THROWS_AS(schedule(2.0, 0.5, 0.25, 256), ScheduleError); // beta > 1/2 fails
  CHECK_THROWS_AS(schedule(2.0, 2.0, 0.25, 1), ScheduleError);
}

TEST_CASE("schedule errors name the violated inequality") {
  try {
    schedule(1.6, 1.0, 0.1, 256);
    FAIL("expected a schedule error");
  } catch (const ScheduleError& e) {
    CHECK(std::string(e.what()).find("alpha < beta + 1/2") != std::string::npos);
  }
  try {
    schedule(2.0, 2.0, 0.5, 256);
    FAIL("expected a schedule error");
  } catch (const ScheduleError& e) {
    CHECK(std::string(e.what()).find("gamma <") != std::string::npos);
  }
}
