#include "sagt/schedules.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sagt {
namespace {

constexpr double kBoundaryTol = 1e-12;
constexpr double kDerivativeTol = 1e-6;
constexpr double kFdStep = 1e-5;

double numeric_derivative(const Schedule::Fn& f, double s) {
  const double h = kFdStep;
  if (s - h < 0.0) return (-3.0 * f(s) + 4.0 * f(s + h) - f(s + 2 * h)) / (2 * h);
  if (s + h > 1.0) return (3.0 * f(s) - 4.0 * f(s - h) + f(s - 2 * h)) / (2 * h);
  return (f(s + h) - f(s - h)) / (2 * h);
}

}  // namespace

Schedule::Schedule(std::string name, Fn eta_i, Fn eta_f, Fn deta_i, Fn deta_f)
    : name_(std::move(name)),
      eta_i_(std::move(eta_i)),
      eta_f_(std::move(eta_f)),
      deta_i_(std::move(deta_i)),
      deta_f_(std::move(deta_f)) {
  if (!eta_i_ || !eta_f_ || !deta_i_ || !deta_f_) throw std::invalid_argument("schedule '" + name_ + "': missing function");
  if (std::abs(eta_i_(0.0) - 1.0) > kBoundaryTol || std::abs(eta_f_(1.0) - 1.0) > kBoundaryTol ||
      std::abs(eta_i_(1.0)) > kBoundaryTol || std::abs(eta_f_(0.0)) > kBoundaryTol) {
    throw std::invalid_argument("schedule '" + name_ + "': boundary conditions violated");
  }
  for (int k = 0; k <= 1000; ++k) {
    const double s = k / 1000.0;
    if (std::hypot(eta_i_(s), eta_f_(s)) <= 0.0) {
      throw std::invalid_argument("schedule '" + name_ + "': eta_i and eta_f vanish together at s = " + std::to_string(s));
    }
  }
  for (int k = 0; k <= 100; ++k) {
    const double s = k / 100.0;
    const double di = std::abs(numeric_derivative(eta_i_, s) - deta_i_(s));
    const double df = std::abs(numeric_derivative(eta_f_, s) - deta_f_(s));
    if (di > kDerivativeTol || df > kDerivativeTol) {
      throw std::invalid_argument("schedule '" + name_ + "': derivative inconsistent with finite differences at s = " +
                                  std::to_string(s));
    }
  }
}

Schedule builtin_schedule(ScheduleKind kind) {
  using std::numbers::e;
  using std::numbers::pi;
  switch (kind) {
    case ScheduleKind::linear:
      return Schedule(
          "linear", [](double s) { return 1.0 - s; }, [](double s) { return s; }, [](double) { return -1.0; },
          [](double) { return 1.0; });
    case ScheduleKind::trigonometric:
      return Schedule(
          "trig", [](double s) { return std::cos(pi * s / 2); }, [](double s) { return std::sin(pi * s / 2); },
          [](double s) { return -pi / 2 * std::sin(pi * s / 2); }, [](double s) { return pi / 2 * std::cos(pi * s / 2); });
    case ScheduleKind::exponential:
      return Schedule(
          "exp", [](double s) { return (std::exp(1.0 - s) - 1.0) / (e - 1.0); },
          [](double s) { return (std::exp(s) - 1.0) / (e - 1.0); }, [](double s) { return -std::exp(1.0 - s) / (e - 1.0); },
          [](double s) { return std::exp(s) / (e - 1.0); });
  }
  throw std::invalid_argument("unknown schedule kind");
}

Schedule builtin_schedule(std::string_view name) {
  if (name == "linear") return builtin_schedule(ScheduleKind::linear);
  if (name == "trig" || name == "trigonometric") return builtin_schedule(ScheduleKind::trigonometric);
  if (name == "exp" || name == "exponential") return builtin_schedule(ScheduleKind::exponential);
  throw std::invalid_argument("unknown schedule '" + std::string(name) + "' (expected linear, trig or exp)");
}

std::string_view schedule_label(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::linear: return "linear";
    case ScheduleKind::trigonometric: return "trig";
    case ScheduleKind::exponential: return "exp";
  }
  return "?";
}

void require_unit_interval(double s, const char* what) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": s = " + std::to_string(s) + " outside [0, 1]");
  }
}

double chi(const Schedule& schedule, double s) {
  require_unit_interval(s, "chi");
  return std::hypot(schedule.eta_i(s), schedule.eta_f(s));
}

}  // namespace sagt
