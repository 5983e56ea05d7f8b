#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sagt/spectral.hpp"
#include "support.hpp"

using namespace sagt;

TEST_SUITE("schedules") {
  TEST_CASE("builtin values") {
    const Schedule lin = builtin_schedule(ScheduleKind::linear);
    CHECK(lin.eta_i(0.5) == 0.5);
    CHECK(lin.eta_f(0.5) == 0.5);
    CHECK(lin.name() == "linear");

    const Schedule ex = builtin_schedule(ScheduleKind::exponential);
    CHECK(ex.eta_i(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(ex.eta_f(0.0)) <= 1e-15);
    CHECK(std::abs(ex.eta_i(1.0)) <= 1e-15);
    CHECK(ex.eta_f(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ex.eta_i(0.5) == doctest::Approx(0.3775406687981455).epsilon(1e-14));
    CHECK(ex.eta_f(0.5) == doctest::Approx(0.3775406687981455).epsilon(1e-14));
  }

  TEST_CASE("chi") {
    const Schedule lin = builtin_schedule(ScheduleKind::linear);
    CHECK(chi(lin, 0.0) == 1.0);
    CHECK(chi(lin, 0.5) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(chi(builtin_schedule(ScheduleKind::exponential), 0.5) == doctest::Approx(0.5339231341617462).epsilon(1e-13));
    const Schedule trig = builtin_schedule(ScheduleKind::trigonometric);
    for (int i = 0; i <= 100; ++i) CHECK(chi(trig, i / 100.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(chi(lin, -0.01), std::invalid_argument);
    CHECK_THROWS_AS(chi(lin, 1.01), std::invalid_argument);
  }

  TEST_CASE("boundary conditions and positivity on a fine grid") {
    for (auto kind : {ScheduleKind::linear, ScheduleKind::trigonometric, ScheduleKind::exponential}) {
      const Schedule sch = builtin_schedule(kind);
      CHECK(std::abs(sch.eta_i(0.0) - 1.0) <= 1e-12);
      CHECK(std::abs(sch.eta_f(1.0) - 1.0) <= 1e-12);
      CHECK(std::abs(sch.eta_i(1.0)) <= 1e-12);
      CHECK(std::abs(sch.eta_f(0.0)) <= 1e-12);
      double smallest = 1.0;
      for (int i = 0; i <= 1000; ++i) smallest = std::min(smallest, chi(sch, i / 1000.0));
      CHECK(smallest > 0.5);
    }
  }

  TEST_CASE("derivatives match central differences") {
    const double h = 1e-5;
    for (auto kind : {ScheduleKind::linear, ScheduleKind::trigonometric, ScheduleKind::exponential}) {
      const Schedule sch = builtin_schedule(kind);
      double worst = 0.0;
      for (int i = 1; i < 100; ++i) {
        const double s = i / 100.0;
        worst = std::max(worst, std::abs(sch.deta_i(s) - (sch.eta_i(s + h) - sch.eta_i(s - h)) / (2 * h)));
        worst = std::max(worst, std::abs(sch.deta_f(s) - (sch.eta_f(s + h) - sch.eta_f(s - h)) / (2 * h)));
      }
      CHECK(worst <= 1e-6);
    }
  }

  TEST_CASE("trigonometric gap is constant") {
    const Schedule trig = builtin_schedule(ScheduleKind::trigonometric);
    for (int i = 0; i <= 20; ++i) CHECK(gap(trig, i / 20.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("lookup by name") {
    CHECK(builtin_schedule("trig").name() == "trig");
    CHECK(builtin_schedule("trigonometric").name() == "trig");
    CHECK(builtin_schedule("exponential").name() == "exp");
    CHECK_THROWS_AS(builtin_schedule("cubic"), std::invalid_argument);
    CHECK(schedule_label(ScheduleKind::exponential) == "exp");
  }

  TEST_CASE("custom schedules are validated on construction") {
    auto zero = [](double) { return 0.0; };
    auto one_minus = [](double s) { return 1.0 - s; };
    auto ident = [](double s) { return s; };
    auto minus_one = [](double) { return -1.0; };
    auto plus_one = [](double) { return 1.0; };

    CHECK_NOTHROW(Schedule("ok", one_minus, ident, minus_one, plus_one));
    // Wrong boundary.
    CHECK_THROWS_AS(Schedule("b", [](double s) { return 0.9 - s; }, ident, minus_one, plus_one), std::invalid_argument);
    // Both vanish at s = 0.5.
    auto vee = [](double s) { return std::pow(1.0 - s, 2) * (s < 0.5 ? 1.0 : 0.0) + 0.0; };
    auto vee_d = [](double s) { return s < 0.5 ? -2.0 * (1.0 - s) : 0.0; };
    auto wedge = [](double s) { return s > 0.5 ? s * s : 0.0; };
    auto wedge_d = [](double s) { return s > 0.5 ? 2.0 * s : 0.0; };
    CHECK_THROWS_AS(Schedule("gap", vee, wedge, vee_d, wedge_d), std::invalid_argument);
    // Inconsistent derivative.
    CHECK_THROWS_AS(Schedule("d", one_minus, ident, zero, plus_one), std::invalid_argument);
    // Missing function.
    CHECK_THROWS_AS(Schedule("m", one_minus, ident, {}, plus_one), std::invalid_argument);
  }

  TEST_CASE("plateau test schedule is accepted and frozen in the middle") {
    const Schedule p = test::plateau_schedule();
    CHECK(p.eta_i(0.45) == 0.5);
    CHECK(p.eta_f(0.55) == 0.5);
    CHECK(p.deta_f(0.5) == 0.0);
  }
}
