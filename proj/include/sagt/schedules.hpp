#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace sagt {

enum class ScheduleKind { linear, trigonometric, exponential };

/// Interpolation pair (eta_i, eta_f) on s in [0, 1] with first derivatives.
///
/// Construction validates eta_i(0) = eta_f(1) = 1, eta_i(1) = eta_f(0) = 0,
/// chi(s) > 0 on a 1001-point grid, and the supplied derivatives against
/// finite differences on a 101-point grid.
class Schedule {
 public:
  using Fn = std::function<double(double)>;

  Schedule(std::string name, Fn eta_i, Fn eta_f, Fn deta_i, Fn deta_f);

  const std::string& name() const noexcept { return name_; }
  double eta_i(double s) const { return eta_i_(s); }
  double eta_f(double s) const { return eta_f_(s); }
  double deta_i(double s) const { return deta_i_(s); }
  double deta_f(double s) const { return deta_f_(s); }

 private:
  std::string name_;
  Fn eta_i_;
  Fn eta_f_;
  Fn deta_i_;
  Fn deta_f_;
};

Schedule builtin_schedule(ScheduleKind kind);

/// Accepts "linear", "trig"/"trigonometric", "exp"/"exponential".
Schedule builtin_schedule(std::string_view name);

/// Short name used in reports: "linear", "trig", "exp".
std::string_view schedule_label(ScheduleKind kind);

/// sqrt(eta_i^2 + eta_f^2); throws std::invalid_argument for s outside [0, 1].
double chi(const Schedule& schedule, double s);

void require_unit_interval(double s, const char* what);

}  // namespace sagt
